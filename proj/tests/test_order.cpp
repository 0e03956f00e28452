#include <array>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "ordsmith/order.hpp"

using namespace ordsmith;
using testutil::example2_order;
using testutil::hurwitz_order;
using testutil::qf;

TEST_CASE("defining relations") {
    Order o = example2_order();
    // i, j, k in basis coordinates via ambient round trip
    auto i_el = o.from_ambient({0, 1, 0, 0});
    auto j_el = o.from_ambient({0, 0, 1, 0});
    auto k_el = o.from_ambient({0, 0, 0, 1});
    // i and j themselves need not lie in the order; use 2h1 - 1 = j etc.
    Elem j2 = o.sub(o.smul(2, o.basis_elem(1)), o.one());
    auto amb = o.to_ambient(j2);
    CHECK(amb[0] == 0);
    CHECK(amb[2] == 1);
    (void)i_el;
    (void)j_el;
    (void)k_el;

    Order q = qf(-6);
    Elem rho = q.basis_elem(1);
    Elem r2 = q.mul(rho, rho);
    CHECK(r2 == q.from_int(-6));
}

TEST_CASE("product against the rational expansion oracle") {
    Order o = example2_order();
    Elem h2 = o.basis_elem(2);
    Elem sq = o.mul(h2, h2);
    auto ax = o.to_ambient(h2);
    std::array<Rat, 4> xa = {ax[0], ax[1], ax[2], ax[3]};
    auto prod = oracle::quat_mul(Int(-17), Int(-3), xa, xa);
    auto back = o.from_ambient({prod[0], prod[1], prod[2], prod[3]});
    REQUIRE(back.has_value());
    CHECK(sq == *back);

    for (int t = 0; t < 200; ++t) {
        Elem x = testutil::rand_elem(o), y = testutil::rand_elem(o);
        auto vx = o.to_ambient(x), vy = o.to_ambient(y);
        std::array<Rat, 4> XA = {vx[0], vx[1], vx[2], vx[3]}, YA = {vy[0], vy[1], vy[2], vy[3]};
        auto pr = oracle::quat_mul(Int(-17), Int(-3), XA, YA);
        auto bk = o.from_ambient({pr[0], pr[1], pr[2], pr[3]});
        REQUIRE(bk.has_value());
        CHECK(o.mul(x, y) == *bk);
    }
}

TEST_CASE("norm, trace, involution") {
    Order o = example2_order();
    CHECK(o.norm(o.basis_elem(2)) == 6);  // N(h2) = 6
    CHECK(o.norm(o.basis_elem(3)) == 6);  // N(h3) = 6
    CHECK(o.norm(o.basis_elem(1)) == 1);  // N(h1) = 1
    CHECK(o.norm(o.one()) == 1);
    CHECK(o.involute(o.one()) == o.one());

    // norm(3 - i + 3j + k) via the quaternary form oracle
    auto x = o.from_ambient({3, -1, 3, 1});
    REQUIRE(x.has_value());
    Rat nref = oracle::quat_norm(Int(-17), Int(-3), {Rat(3), Rat(-1), Rat(3), Rat(1)});
    CHECK(Rat(o.norm(*x)) == nref);
    CHECK(o.norm(*x) == 9 + 17 + 27 + 51);

    for (int t = 0; t < 10000 / 50; ++t) {
        // multiplicativity, anti-automorphism, integrality (batched loop below
        // covers the bulk of the 10^4 random pairs cheaply)
        for (int s = 0; s < 50; ++s) {
            Elem a = testutil::rand_elem(o), b = testutil::rand_elem(o);
            CHECK(o.norm(o.mul(a, b)) == o.norm(a) * o.norm(b));
            CHECK(o.involute(o.mul(a, b)) == o.mul(o.involute(b), o.involute(a)));
            CHECK(o.involute(o.involute(a)) == a);
            CHECK(o.mul(a, o.involute(a)) == o.from_int(o.norm(a)));
            CHECK(o.add(a, o.involute(a)) == o.from_int(o.trace(a)));
        }
    }
    Order q = qf(-6);
    for (int s = 0; s < 500; ++s) {
        Elem a = testutil::rand_elem(q), b = testutil::rand_elem(q);
        CHECK(q.norm(q.mul(a, b)) == q.norm(a) * q.norm(b));
        CHECK(q.involute(q.mul(a, b)) == q.mul(q.involute(b), q.involute(a)));
    }
}

TEST_CASE("involution fixes exactly the rational line") {
    Order o = example2_order();
    int fixed_dim = 0;
    // involution matrix has eigenvalue 1 exactly on Z*1
    for (int i = 0; i < 4; ++i) {
        Elem b = o.basis_elem(i);
        if (o.involute(b) == b) ++fixed_dim;
    }
    CHECK(fixed_dim <= 1);
    CHECK(o.involute(o.from_int(7)) == o.from_int(7));
    Order q = qf(-5);
    CHECK(q.involute(q.from_int(-3)) == q.from_int(-3));
    CHECK(q.involute(q.basis_elem(1)) == q.neg(q.basis_elem(1)));
}

TEST_CASE("validate_maximal_order") {
    // Example 2 basis: valid maximal order; reduced discriminant computed by
    // the Gram oracle on the trace form.
    QMat b(4, 4);
    auto set = [&](int r, Rat x0, Rat x1, Rat x2, Rat x3) {
        b.at(r, 0) = x0;
        b.at(r, 1) = x1;
        b.at(r, 2) = x2;
        b.at(r, 3) = x3;
    };
    set(0, 1, 0, 0, 0);
    set(1, Rat(1, 2), 0, Rat(1, 2), 0);
    set(2, Rat(1, 2), Rat(1, 2), Rat(1, 6), Rat(1, 6));
    set(3, Rat(-1, 2), 0, Rat(1, 6), Rat(-1, 3));
    auto rep = Order::validate_quaternion(Int(-17), Int(-3), b);
    CHECK(rep.ok);

    // Oracle: Gram determinant of trd(b_i b_j) computed independently.
    std::vector<std::vector<Rat>> G(4, std::vector<Rat>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::array<Rat, 4> bi = {b.at(i, 0), b.at(i, 1), b.at(i, 2), b.at(i, 3)};
            std::array<Rat, 4> bj = {b.at(j, 0), b.at(j, 1), b.at(j, 2), b.at(j, 3)};
            auto p = oracle::quat_mul(Int(-17), Int(-3), bi, bj);
            G[i][j] = 2 * p[0];
        }
    Rat dG = oracle::det4(G);
    CHECK(Rat(rep.gram_det) == dG);
    CHECK(dG == Rat(-289));
    // The algebra (-17,-3) is ramified exactly at 17 (Hilbert symbols), so the
    // maximal order has reduced discriminant 17.
    CHECK(rep.reduced_discriminant == 17);

    // {1,i,j,k} is not maximal in (-17,-3).
    QMat naive = QMat::identity(4);
    auto rep2 = Order::validate_quaternion(Int(-17), Int(-3), naive);
    CHECK(!rep2.ok);
    CHECK(rep2.reduced_discriminant == 204);

    // Z[sqrt(-6)]: valid with discriminant -24.
    auto rep3 = Order::validate_quadratic(Int(-6));
    CHECK(rep3.ok);
    CHECK(rep3.reduced_discriminant == -24);

    // Indefinite input rejected.
    auto rep4 = Order::validate_quaternion(Int(17), Int(-3), QMat::identity(4));
    CHECK(!rep4.ok);
}

TEST_CASE("classify_prime") {
    Order q = qf(-6);
    auto at2 = q.classify_prime(Int(2));
    REQUIRE(at2.size() == 1);
    CHECK(at2[0].kind == PlaceKind::ramified);
    auto at5 = q.classify_prime(Int(5));
    REQUIRE(at5.size() == 2);
    CHECK(at5[0].kind == PlaceKind::split_first);
    // -24 = 4 mod 7 is a square, so 7 splits; 13 is inert (-6 = 7 mod 13, a
    // non-residue).
    auto at7 = q.classify_prime(Int(7));
    REQUIRE(at7.size() == 2);
    auto at13 = q.classify_prime(Int(13));
    REQUIRE(at13.size() == 1);
    CHECK(at13[0].kind == PlaceKind::inert);
    // Oracle: Kronecker symbol of the field discriminant -24.
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L}) {
        int k = oracle::kronecker_at_prime(Int(-24), Int(p));
        auto pls = q.classify_prime(Int(p));
        if (k == 0) CHECK(pls[0].kind == PlaceKind::ramified);
        if (k == 1) CHECK(pls.size() == 2);
        if (k == -1) CHECK(pls[0].kind == PlaceKind::inert);
    }

    Order o = example2_order();
    // Oracle: Hilbert symbol at each prime.
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
        auto pls = o.classify_prime(Int(p));
        int h = hilbert_symbol(Int(-17), Int(-3), Int(p));
        REQUIRE(pls.size() == 1);
        CHECK((pls[0].kind == PlaceKind::ramified) == (h == -1));
    }
    Order hw = hurwitz_order();
    CHECK(hw.classify_prime(Int(2))[0].kind == PlaceKind::ramified);
    CHECK(hw.classify_prime(Int(3))[0].kind == PlaceKind::split);
}

TEST_CASE("crt_lift") {
    Order o = example2_order();
    Elem h2 = o.basis_elem(2);
    std::vector<CrtTarget> targets;
    targets.push_back({Int(2), 4, h2});
    targets.push_back({Int(3), 4, o.zero()});
    Elem a = o.crt_lift(targets, o.zero());
    CHECK(o.reduce_mod(a, Int(16)) == o.reduce_mod(h2, Int(16)));
    CHECK(o.reduce_mod(a, Int(81)) == o.zero());

    // empty target list
    CHECK(o.crt_lift({}, o.zero()) == o.zero());

    // single target: re-reduction reproduces the residue
    Elem x = testutil::rand_elem(o);
    std::vector<CrtTarget> t2 = {{Int(5), 3, x}};
    Elem b = o.crt_lift(t2, o.zero());
    CHECK(o.reduce_mod(b, Int(125)) == o.reduce_mod(x, Int(125)));

    // default residue at unlisted targets
    std::vector<CrtTarget> t3 = {{Int(2), 3, x}, {Int(7), 2, std::nullopt}};
    Elem c = o.crt_lift(t3, o.one());
    CHECK(o.reduce_mod(c, Int(8)) == o.reduce_mod(x, Int(8)));
    CHECK(o.reduce_mod(c, Int(49)) == o.one());

    // inconsistent duplicate
    std::vector<CrtTarget> bad = {{Int(2), 2, o.one()}, {Int(2), 3, o.zero()}};
    CHECK_THROWS(o.crt_lift(bad, o.zero()));
}

TEST_CASE("element rendering") {
    Order q = qf(-6);
    Elem two_rho = q.smul(2, q.basis_elem(1));
    CHECK(q.render(two_rho) == "2*rho");
    CHECK(q.render(q.sub(q.from_int(3), q.basis_elem(1))) == "3 - rho");
    CHECK(q.render(q.zero()) == "0");
}
