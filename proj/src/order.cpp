#include "ordsmith/order.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ordsmith {

std::string PlaceId::str() const {
    std::ostringstream os;
    os << p;
    switch (kind) {
        case PlaceKind::split_first: os << " (split, first)"; break;
        case PlaceKind::split_second: os << " (split, second)"; break;
        case PlaceKind::inert: os << " (inert)"; break;
        case PlaceKind::ramified: os << " (ramified)"; break;
        case PlaceKind::split: os << " (split)"; break;
    }
    return os.str();
}

std::vector<Rat> ambient_mul(AlgebraKind kind, const Int& da, const Int& b,
                             const std::vector<Rat>& x, const std::vector<Rat>& y) {
    if (kind == AlgebraKind::quadratic) {
        // (x0 + x1 s)(y0 + y1 s), s^2 = d
        return {x[0] * y[0] + Rat(da) * x[1] * y[1], x[0] * y[1] + x[1] * y[0]};
    }
    const Rat A(da), B(b);
    std::vector<Rat> r(4);
    // Basis products over {1,i,j,k}: i^2=a, j^2=b, k=ij=-ji, k^2=-ab,
    // ik=aj, ki=-aj, jk=-bi, kj=bi.
    r[0] = x[0] * y[0] + A * x[1] * y[1] + B * x[2] * y[2] - A * B * x[3] * y[3];
    r[1] = x[0] * y[1] + x[1] * y[0] - B * x[2] * y[3] + B * x[3] * y[2];
    r[2] = x[0] * y[2] + x[2] * y[0] + A * x[1] * y[3] - A * x[3] * y[1];
    r[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
    return r;
}

static std::vector<Rat> ambient_invol(AlgebraKind kind, const std::vector<Rat>& x) {
    std::vector<Rat> r(x);
    for (size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
    return r;
}

static Rat ambient_trd(const std::vector<Rat>& x) { return 2 * x[0]; }

Order Order::quadratic(const Int& d) {
    // Canonical maximal order basis {1, w}, w = sqrt(d) or (1+sqrt d)/2.
    QMat b(2, 2);
    b.at(0, 0) = 1;
    if (mod_pos(d, 4) == 1) {
        b.at(1, 0) = Rat(1, 2);
        b.at(1, 1) = Rat(1, 2);
    } else {
        b.at(1, 1) = 1;
    }
    return quadratic(d, b);
}

Order Order::quadratic(const Int& d, const QMat& basis) {
    auto rep = validate_quadratic(d, &basis);
    if (!rep.ok) {
        std::string msg = "invalid quadratic order:";
        for (auto& f : rep.failures) msg += " " + f + ";";
        throw std::invalid_argument(msg);
    }
    Order o;
    o.kind_ = AlgebraKind::quadratic;
    o.d_ = d;
    o.disc_ = rep.reduced_discriminant;
    o.basis_ = basis;
    o.basis_inv_ = basis.inverse();
    o.build_tables();
    return o;
}

Order Order::quaternion(const Int& a, const Int& b, const QMat& basis) {
    auto rep = validate_quaternion(a, b, basis);
    if (!rep.ok) {
        std::string msg = "invalid quaternion order:";
        for (auto& f : rep.failures) msg += " " + f + ";";
        throw std::invalid_argument(msg);
    }
    Order o;
    o.kind_ = AlgebraKind::quaternion;
    o.a_ = a;
    o.b_ = b;
    o.disc_ = rep.reduced_discriminant;
    o.basis_ = basis;
    o.basis_inv_ = basis.inverse();
    o.build_tables();
    return o;
}

static bool rat_vec_integral(const std::vector<Rat>& v) {
    for (auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

// Coordinates of an ambient row over the basis via v * basis^{-1}.
static std::vector<Rat> coords_over(const QMat& basis_inv, const std::vector<Rat>& v) {
    int n = basis_inv.rows();
    std::vector<Rat> out(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out[j] += v[i] * basis_inv.at(i, j);
    return out;
}

ValidationReport Order::validate_quadratic(const Int& d, const QMat* basis_in) {
    ValidationReport rep;
    if (d >= 0) rep.fail("d must be negative");
    if (d != 0 && !is_squarefree(d)) rep.fail("d must be squarefree");
    if (!rep.ok) return rep;
    Int D = (mod_pos(d, 4) == 1) ? d : 4 * d;

    QMat basis(2, 2);
    if (basis_in) {
        basis = *basis_in;
    } else {
        basis.at(0, 0) = 1;
        if (mod_pos(d, 4) == 1) {
            basis.at(1, 0) = Rat(1, 2);
            basis.at(1, 1) = Rat(1, 2);
        } else {
            basis.at(1, 1) = 1;
        }
    }
    if (basis.rank() != 2) {
        rep.fail("basis not full rank");
        return rep;
    }
    QMat inv = basis.inverse();
    if (!rat_vec_integral(coords_over(inv, {Rat(1), Rat(0)}))) rep.fail("1 not in the lattice");
    // Ring closure and trace-form Gram.
    QMat gram(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::vector<Rat> bi = {basis.at(i, 0), basis.at(i, 1)};
            std::vector<Rat> bj = {basis.at(j, 0), basis.at(j, 1)};
            auto p = ambient_mul(AlgebraKind::quadratic, d, 0, bi, bj);
            if (!rat_vec_integral(coords_over(inv, p))) rep.fail("basis not multiplicatively closed");
            gram.at(i, j) = ambient_trd(p);
        }
    Rat det = gram.det();
    if (det.get_den() != 1) {
        rep.fail("trace form not integral");
        return rep;
    }
    rep.gram_det = det.get_num();
    rep.reduced_discriminant = rep.gram_det;
    if (rep.gram_det != D) rep.fail("order not maximal: discriminant differs from the field discriminant");
    return rep;
}

ValidationReport Order::validate_quaternion(const Int& a, const Int& b, const QMat& basis) {
    ValidationReport rep;
    if (a >= 0 || b >= 0) rep.fail("algebra must be definite: a < 0 and b < 0");
    if (basis.rows() != 4 || basis.cols() != 4) {
        rep.fail("basis must be 4x4");
        return rep;
    }
    if (basis.rank() != 4) {
        rep.fail("basis not full rank");
        return rep;
    }
    QMat inv = basis.inverse();
    if (!rat_vec_integral(coords_over(inv, {Rat(1), Rat(0), Rat(0), Rat(0)})))
        rep.fail("1 not in the lattice");
    QMat gram(4, 4);
    bool closed = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::vector<Rat> bi(4), bj(4);
            for (int t = 0; t < 4; ++t) {
                bi[t] = basis.at(i, t);
                bj[t] = basis.at(j, t);
            }
            auto p = ambient_mul(AlgebraKind::quaternion, a, b, bi, bj);
            if (!rat_vec_integral(coords_over(inv, p))) closed = false;
            gram.at(i, j) = ambient_trd(p);
        }
    if (!closed) rep.fail("basis not multiplicatively closed");
    for (int i = 0; i < 4; ++i) {
        std::vector<Rat> bi(4);
        for (int t = 0; t < 4; ++t) bi[t] = basis.at(i, t);
        if (!rat_vec_integral(coords_over(inv, ambient_invol(AlgebraKind::quaternion, bi))))
            rep.fail("basis not closed under the involution");
    }
    Rat det = gram.det();
    if (det.get_den() != 1) {
        rep.fail("trace form not integral");
        return rep;
    }
    rep.gram_det = det.get_num();
    if (!closed || !rep.ok) return rep;
    bool sq = false;
    Int rd = isqrt(abs(rep.gram_det), &sq);
    if (!sq) {
        rep.fail("trace form determinant is not a square (not an order?)");
        return rep;
    }
    rep.reduced_discriminant = rd;
    if (!is_squarefree(rd))
        rep.fail("order not maximal: reduced discriminant not squarefree");
    return rep;
}

void Order::build_tables() {
    int n = dim();
    // one
    std::vector<Rat> e1(n);
    e1[0] = 1;
    auto c1 = coords_over(basis_inv_, e1);
    for (int i = 0; i < n; ++i) one_.c[i] = c1[i].get_num();
    // mult table & involution & traces
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> bi(n);
        for (int t = 0; t < n; ++t) bi[t] = basis_.at(i, t);
        trd_[i] = Rat(ambient_trd(bi)).get_num();
        auto ci = coords_over(basis_inv_, ambient_invol(kind_, bi));
        for (int t = 0; t < n; ++t) invol_[i].c[t] = ci[t].get_num();
        for (int j = 0; j < n; ++j) {
            std::vector<Rat> bj(n);
            for (int t = 0; t < n; ++t) bj[t] = basis_.at(j, t);
            auto p = ambient_mul(kind_, kind_ == AlgebraKind::quadratic ? d_ : a_, b_, bi, bj);
            auto cp = coords_over(basis_inv_, p);
            for (int t = 0; t < n; ++t) mult_[i][j].c[t] = cp[t].get_num();
        }
    }
    // Doubled norm Gram: trd(b_i * invol(b_j)).
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem pr = mul(basis_elem(i), invol_[j]);
            Int t = 0;
            for (int s = 0; s < n; ++s) t += pr.c[s] * trd_[s];
            norm_gram2_[i][j] = t;
        }
}

bool Order::same_algebra(const Order& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == AlgebraKind::quadratic) return d_ == o.d_;
    return a_ == o.a_ && b_ == o.b_;
}

Elem Order::basis_elem(int i) const {
    Elem e;
    e.c[i] = 1;
    return e;
}

Elem Order::from_int(const Int& n) const { return smul(n, one_); }

Elem Order::add(const Elem& x, const Elem& y) const {
    Elem r;
    for (int i = 0; i < dim(); ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
}

Elem Order::sub(const Elem& x, const Elem& y) const {
    Elem r;
    for (int i = 0; i < dim(); ++i) r.c[i] = x.c[i] - y.c[i];
    return r;
}

Elem Order::neg(const Elem& x) const {
    Elem r;
    for (int i = 0; i < dim(); ++i) r.c[i] = -x.c[i];
    return r;
}

Elem Order::smul(const Int& s, const Elem& x) const {
    Elem r;
    for (int i = 0; i < dim(); ++i) r.c[i] = s * x.c[i];
    return r;
}

Elem Order::mul(const Elem& x, const Elem& y) const {
    Elem r;
    int n = dim();
    for (int i = 0; i < n; ++i) {
        if (x.c[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (y.c[j] == 0) continue;
            Int f = x.c[i] * y.c[j];
            for (int t = 0; t < n; ++t) r.c[t] += f * mult_[i][j].c[t];
        }
    }
    return r;
}

Elem Order::involute(const Elem& x) const {
    Elem r;
    int n = dim();
    for (int i = 0; i < n; ++i) {
        if (x.c[i] == 0) continue;
        for (int t = 0; t < n; ++t) r.c[t] += x.c[i] * invol_[i].c[t];
    }
    return r;
}

Int Order::trace(const Elem& x) const {
    Int t = 0;
    for (int i = 0; i < dim(); ++i) t += x.c[i] * trd_[i];
    return t;
}

Int Order::inner(const Elem& x, const Elem& y) const {
    Int t = 0;
    int n = dim();
    for (int i = 0; i < n; ++i) {
        if (x.c[i] == 0) continue;
        for (int j = 0; j < n; ++j) t += x.c[i] * y.c[j] * norm_gram2_[i][j];
    }
    return t;
}

Int Order::norm(const Elem& x) const {
    Int t = inner(x, x);
    assert(t % 2 == 0);
    return t / 2;
}

Elem Order::reduce_mod(const Elem& x, const Int& m) const {
    Elem r;
    for (int i = 0; i < dim(); ++i) r.c[i] = mod_pos(x.c[i], m);
    return r;
}

Elem Order::reduce_mod_sym(const Elem& x, const Int& m) const {
    Elem r;
    for (int i = 0; i < dim(); ++i) r.c[i] = mod_sym(x.c[i], m);
    return r;
}

std::optional<Elem> Order::div_int(const Elem& x, const Int& n) const {
    Elem r;
    for (int i = 0; i < dim(); ++i) {
        if (x.c[i] % n != 0) return std::nullopt;
        r.c[i] = x.c[i] / n;
    }
    return r;
}

std::vector<Rat> Order::to_ambient(const Elem& x) const {
    int n = dim();
    std::vector<Rat> v(n);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < n; ++t) v[t] += Rat(x.c[i]) * basis_.at(i, t);
    return v;
}

std::optional<Elem> Order::from_ambient(const std::vector<Rat>& v) const {
    auto c = coords_over(basis_inv_, v);
    if (!rat_vec_integral(c)) return std::nullopt;
    Elem e;
    for (int i = 0; i < dim(); ++i) e.c[i] = c[i].get_num();
    return e;
}

ZMat Order::left_rep(const Elem& x) const {
    int n = dim();
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) {
        Elem r = mul(x, basis_elem(i));
        for (int t = 0; t < n; ++t) m.at(i, t) = r.c[t];
    }
    return m;
}

std::vector<PlaceId> Order::classify_prime(const Int& p) const {
    if (!is_prime(p)) throw std::domain_error("classify_prime: p not prime");
    if (kind_ == AlgebraKind::quadratic) {
        int k = kronecker(disc_, p);
        if (k == 0) return {PlaceId{p, PlaceKind::ramified}};
        if (k == 1)
            return {PlaceId{p, PlaceKind::split_first}, PlaceId{p, PlaceKind::split_second}};
        return {PlaceId{p, PlaceKind::inert}};
    }
    if (disc_ % p == 0) return {PlaceId{p, PlaceKind::ramified}};
    return {PlaceId{p, PlaceKind::split}};
}

std::vector<PlaceId> Order::places_above(const Int& n) const {
    std::vector<PlaceId> out;
    for (auto& p : prime_divisors(n))
        for (auto& pl : classify_prime(p)) out.push_back(pl);
    std::sort(out.begin(), out.end());
    return out;
}

Elem Order::crt_lift(std::span<const CrtTarget> targets, const Elem& dflt) const {
    // Merge targets per prime, checking consistency.
    std::map<Int, std::pair<unsigned, Elem>> merged;
    for (auto& t : targets) {
        Elem res = t.residue ? *t.residue : dflt;
        auto it = merged.find(t.p);
        if (it == merged.end()) {
            merged.emplace(t.p, std::make_pair(t.k, res));
            continue;
        }
        unsigned kmin = std::min(it->second.first, t.k);
        Int pk = pow_int(t.p, kmin);
        if (reduce_mod(it->second.second, pk) != reduce_mod(res, pk))
            throw std::invalid_argument("crt_lift: inconsistent targets at prime " + t.p.get_str());
        if (t.k > it->second.first) it->second = {t.k, res};
    }
    if (merged.empty()) return dflt;
    Elem acc;
    Int mod_acc = 1;
    bool first = true;
    for (auto& [p, kr] : merged) {
        Int m = pow_int(p, kr.first);
        if (first) {
            acc = reduce_mod(kr.second, m);
            mod_acc = m;
            first = false;
            continue;
        }
        Elem next;
        for (int i = 0; i < dim(); ++i) next.c[i] = crt_pair(acc.c[i], mod_acc, kr.second.c[i], m);
        mod_acc *= m;
        acc = reduce_mod(next, mod_acc);
    }
    return reduce_mod_sym(acc, mod_acc);
}

std::string Order::basis_name(int i) const {
    if (i == 0) return "1";
    if (kind_ == AlgebraKind::quadratic) return "rho";
    return "e" + std::to_string(i);
}

std::string Order::render(const Elem& x) const {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < dim(); ++i) {
        if (x.c[i] == 0) continue;
        Int c = x.c[i];
        if (any) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int ac = abs(c);
        if (i == 0) os << ac;
        else {
            if (ac != 1) os << ac << "*";
            os << basis_name(i);
        }
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

}  // namespace ordsmith
