#pragma once

#include "ordsmith/order.hpp"

namespace ordsmith {

// Dense matrix over the order.
struct EMat {
    int r = 0, c = 0;
    std::vector<Elem> e;

    EMat() = default;
    EMat(int rr, int cc) : r(rr), c(cc), e(size_t(rr) * cc) {}
    Elem& at(int i, int j) { return e[size_t(i) * c + j]; }
    const Elem& at(int i, int j) const { return e[size_t(i) * c + j]; }
    bool operator==(const EMat& o) const { return r == o.r && c == o.c && e == o.e; }
};

EMat eye(const Order& o, int n);
EMat emul(const Order& o, const EMat& a, const EMat& b);
EMat eadd(const Order& o, const EMat& a, const EMat& b);
EMat esub(const Order& o, const EMat& a, const EMat& b);
EMat eneg(const Order& o, const EMat& a);
EMat escale(const Order& o, const Int& s, const EMat& a);
// Conjugate transpose M* = involute entrywise, then transpose.
EMat star(const Order& o, const EMat& a);
EMat transpose_plain(const EMat& a);
// Block antisymmetric J = [[0, I_n], [-I_n, 0]] of size 2n.
EMat symplectic_j(const Order& o, int n);
EMat mod_reduce(const Order& o, const EMat& a, const Int& m);
EMat mod_reduce_sym(const Order& o, const EMat& a, const Int& m);
bool is_zero(const EMat& a);

// Z-restriction: (r*dim) x (c*dim) integer matrix of the right-module map
// v -> v*A on row vectors over the order basis. Multiplicative:
// restriction(A*B) = restriction(A) * restriction(B).
ZMat restriction_matrix(const Order& o, const EMat& a);
// Inverse of restriction_matrix for integral inputs.
EMat decode_restriction(const Order& o, const ZMat& z, int r, int c);

// Invertibility over the ambient algebra.
bool invertible(const Order& o, const EMat& a);
// (m * A^{-1}, m) with m the least positive integer making it integral.
std::pair<EMat, Int> scaled_inverse(const Order& o, const EMat& a);
// Least positive m with m*A^{-1} integral.
Int matrix_scale(const Order& o, const EMat& a);

// Determinant over a commutative (quadratic) algebra.
Elem det_quadratic(const Order& o, const EMat& a);

// Multiplier m with M* J M = m J, when M is a similitude matrix.
std::optional<Int> similitude_multiplier(const Order& o, const EMat& m);

}  // namespace ordsmith
