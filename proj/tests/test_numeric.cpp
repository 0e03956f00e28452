#include "doctest.h"
#include "ordsmith/numeric.hpp"
#include "ordsmith/zmat.hpp"

using namespace ordsmith;

TEST_CASE("valuations and integer helpers") {
    CHECK(valuation(Int(48), Int(2)) == 4);
    CHECK(valuation(Int(-27), Int(3)) == 3);
    CHECK(valuation(Int(5), Int(2)) == 0);
    CHECK(is_square(Int(289)));
    CHECK(!is_square(Int(51)));
    CHECK(is_squarefree(Int(51)));
    CHECK(!is_squarefree(Int(12)));
    CHECK(inv_mod(Int(3), Int(16)) == 11);
    CHECK(mod_sym(Int(15), Int(16)) == -1);
    Int x = crt_pair(Int(3), Int(16), Int(5), Int(81));
    CHECK(mod_pos(x, Int(16)) == 3);
    CHECK(mod_pos(x, Int(81)) == 5);
}

TEST_CASE("hilbert symbols locate ramified primes") {
    // (-1,-1): Hamilton quaternions, ramified at 2 and infinity.
    CHECK(hilbert_symbol(Int(-1), Int(-1), Int(2)) == -1);
    CHECK(hilbert_symbol(Int(-1), Int(-1), Int(3)) == 1);
    CHECK(hilbert_symbol(Int(-1), Int(-1), Int(5)) == 1);
    // (-17,-3): ramified at 17 only among the finite primes.
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) CHECK(hilbert_symbol(Int(-17), Int(-3), Int(p)) == 1);
    CHECK(hilbert_symbol(Int(-17), Int(-3), Int(17)) == -1);
}

TEST_CASE("hnf basics") {
    ZMat a(3, 2);
    a.at(0, 0) = 2;
    a.at(1, 1) = 2;
    a.at(2, 0) = 0;
    a.at(2, 1) = 1;
    ZMat u;
    ZMat h = hnf(a, &u);
    REQUIRE(h.rows() == 2);
    CHECK(h.at(0, 0) == 2);
    CHECK(h.at(0, 1) == 0);
    CHECK(h.at(1, 0) == 0);
    CHECK(h.at(1, 1) == 1);
    std::vector<Int> v = {4, 7};
    CHECK(in_lattice(v, h));
    std::vector<Int> w = {1, 0};
    CHECK(!in_lattice(w, h));
}

TEST_CASE("snf over Z with transforms") {
    ZMat a(2, 2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 4;
    a.at(1, 0) = 6;
    a.at(1, 1) = 8;
    ZMat u, v;
    auto d = snf_diagonal(a, &u, &v);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 2);
    CHECK(d[1] == 4);
    ZMat prod = u * a * v;
    CHECK(prod.at(0, 0) == d[0]);
    CHECK(prod.at(1, 1) == d[1]);
    CHECK(prod.at(0, 1) == 0);
    CHECK(prod.at(1, 0) == 0);
    CHECK(abs(u.det()) == 1);
    CHECK(abs(v.det()) == 1);
}

TEST_CASE("lattice sum and intersection") {
    ZMat a = ZMat::identity(2) * Int(2);   // 2Z^2
    ZMat b(2, 2);
    b.at(0, 0) = 3;
    b.at(1, 1) = 1;  // 3Z x Z
    ZMat s = lattice_sum(a, b);
    CHECK(abs(s.det()) == 1);
    ZMat i = lattice_intersect(a, b);
    CHECK(abs(i.det()) == 12);  // 6Z x 2Z
    CHECK(lattice_index(i, s) == 12);
}

TEST_CASE("fraction-free determinant") {
    ZMat a(3, 3);
    long vals[9] = {2, -1, 0, 3, 5, 1, -2, 4, 7};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = vals[3 * i + j];
    CHECK(a.det() == QMat(a).det());
}
