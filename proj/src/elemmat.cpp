#include "ordsmith/elemmat.hpp"

namespace ordsmith {

EMat eye(const Order& o, int n) {
    EMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = o.one();
    return m;
}

EMat emul(const Order& o, const EMat& a, const EMat& b) {
    assert(a.c == b.r);
    EMat m(a.r, b.c);
    for (int i = 0; i < a.r; ++i)
        for (int k = 0; k < a.c; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.c; ++j) {
                if (b.at(k, j).is_zero()) continue;
                m.at(i, j) = o.add(m.at(i, j), o.mul(a.at(i, k), b.at(k, j)));
            }
        }
    return m;
}

EMat eadd(const Order& o, const EMat& a, const EMat& b) {
    assert(a.r == b.r && a.c == b.c);
    EMat m(a.r, a.c);
    for (size_t i = 0; i < a.e.size(); ++i) m.e[i] = o.add(a.e[i], b.e[i]);
    return m;
}

EMat esub(const Order& o, const EMat& a, const EMat& b) {
    assert(a.r == b.r && a.c == b.c);
    EMat m(a.r, a.c);
    for (size_t i = 0; i < a.e.size(); ++i) m.e[i] = o.sub(a.e[i], b.e[i]);
    return m;
}

EMat eneg(const Order& o, const EMat& a) {
    EMat m(a.r, a.c);
    for (size_t i = 0; i < a.e.size(); ++i) m.e[i] = o.neg(a.e[i]);
    return m;
}

EMat escale(const Order& o, const Int& s, const EMat& a) {
    EMat m(a.r, a.c);
    for (size_t i = 0; i < a.e.size(); ++i) m.e[i] = o.smul(s, a.e[i]);
    return m;
}

EMat star(const Order& o, const EMat& a) {
    EMat m(a.c, a.r);
    for (int i = 0; i < a.r; ++i)
        for (int j = 0; j < a.c; ++j) m.at(j, i) = o.involute(a.at(i, j));
    return m;
}

EMat transpose_plain(const EMat& a) {
    EMat m(a.c, a.r);
    for (int i = 0; i < a.r; ++i)
        for (int j = 0; j < a.c; ++j) m.at(j, i) = a.at(i, j);
    return m;
}

EMat symplectic_j(const Order& o, int n) {
    EMat m(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        m.at(i, n + i) = o.one();
        m.at(n + i, i) = o.neg(o.one());
    }
    return m;
}

EMat mod_reduce(const Order& o, const EMat& a, const Int& mm) {
    EMat m(a.r, a.c);
    for (size_t i = 0; i < a.e.size(); ++i) m.e[i] = o.reduce_mod(a.e[i], mm);
    return m;
}

EMat mod_reduce_sym(const Order& o, const EMat& a, const Int& mm) {
    EMat m(a.r, a.c);
    for (size_t i = 0; i < a.e.size(); ++i) m.e[i] = o.reduce_mod_sym(a.e[i], mm);
    return m;
}

bool is_zero(const EMat& a) {
    for (auto& x : a.e)
        if (!x.is_zero()) return false;
    return true;
}

ZMat restriction_matrix(const Order& o, const EMat& a) {
    int d = o.dim();
    ZMat z(a.r * d, a.c * d);
    for (int t = 0; t < a.r; ++t)
        for (int s = 0; s < a.c; ++s) {
            const Elem& x = a.at(t, s);
            if (x.is_zero()) continue;
            for (int i = 0; i < d; ++i) {
                Elem p = o.mul(o.basis_elem(i), x);
                for (int j = 0; j < d; ++j) z.at(t * d + i, s * d + j) = p.c[j];
            }
        }
    return z;
}

EMat decode_restriction(const Order& o, const ZMat& z, int r, int c) {
    int d = o.dim();
    assert(z.rows() == r * d && z.cols() == c * d);
    EMat m(r, c);
    Elem one = o.one();
    for (int t = 0; t < r; ++t)
        for (int s = 0; s < c; ++s) {
            Elem x;
            for (int i = 0; i < d; ++i) {
                if (one.c[i] == 0) continue;
                for (int j = 0; j < d; ++j) x.c[j] += one.c[i] * z.at(t * d + i, s * d + j);
            }
            m.at(t, s) = x;
        }
    // verify round trip (the input must be a genuine restriction image)
    if (!(restriction_matrix(o, m) == z))
        throw std::domain_error("matrix is not a restriction image");
    return m;
}

bool invertible(const Order& o, const EMat& a) {
    if (a.r != a.c) return false;
    return QMat(restriction_matrix(o, a)).rank() == a.r * o.dim();
}

std::pair<EMat, Int> scaled_inverse(const Order& o, const EMat& a) {
    if (a.r != a.c) throw std::invalid_argument("not square");
    ZMat rz = restriction_matrix(o, a);
    QMat inv = QMat(rz).inverse();
    Int den;
    ZMat num = inv.scaled_numerator(&den);
    return {decode_restriction(o, num, a.r, a.c), den};
}

Int matrix_scale(const Order& o, const EMat& a) { return scaled_inverse(o, a).second; }

Elem det_quadratic(const Order& o, const EMat& a) {
    if (o.kind() != AlgebraKind::quadratic)
        throw std::invalid_argument("determinant only over the commutative case");
    assert(a.r == a.c);
    int n = a.r;
    if (n == 0) return o.one();
    if (n == 1) return a.at(0, 0);
    Elem acc;
    for (int i = 0; i < n; ++i) {
        if (a.at(i, 0).is_zero()) continue;
        EMat minor(n - 1, n - 1);
        int rr = 0;
        for (int r2 = 0; r2 < n; ++r2) {
            if (r2 == i) continue;
            for (int c2 = 1; c2 < n; ++c2) minor.at(rr, c2 - 1) = a.at(r2, c2);
            ++rr;
        }
        Elem term = o.mul(a.at(i, 0), det_quadratic(o, minor));
        acc = (i % 2 == 0) ? o.add(acc, term) : o.sub(acc, term);
    }
    return acc;
}

std::optional<Int> similitude_multiplier(const Order& o, const EMat& m) {
    if (m.r != m.c || m.r % 2 != 0) return std::nullopt;
    int n = m.r / 2;
    EMat j = symplectic_j(o, n);
    EMat lhs = emul(o, emul(o, star(o, m), j), m);
    // read candidate multiplier from the (0, n) slot; must be rational integer
    Elem top = lhs.at(0, n);
    Elem cand = top;
    Int mult;
    {
        // m * one == cand ?
        // solve scalar via the `one` coordinates
        const Elem one = o.one();
        int pivot = -1;
        for (int i = 0; i < o.dim(); ++i)
            if (one.c[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (cand.c[pivot] % one.c[pivot] != 0) return std::nullopt;
        mult = cand.c[pivot] / one.c[pivot];
        if (!(o.from_int(mult) == cand)) return std::nullopt;
    }
    if (mult == 0) return std::nullopt;
    if (!(lhs == escale(o, mult, j))) return std::nullopt;
    return mult;
}

}  // namespace ordsmith
