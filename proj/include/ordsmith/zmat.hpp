#pragma once

#include <cassert>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "ordsmith/numeric.hpp"

namespace ordsmith {

// Dense matrices over Z and Q. Row vectors act from the left throughout:
// lattices are row spans, transforms satisfy U*A = H.
class ZMat {
  public:
    ZMat() : r_(0), c_(0) {}
    ZMat(int r, int c) : r_(r), c_(c), a_(size_t(r) * c) {}
    static ZMat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Int& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    bool operator==(const ZMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool is_zero() const;

    ZMat operator*(const ZMat& o) const;
    ZMat operator+(const ZMat& o) const;
    ZMat operator-(const ZMat& o) const;
    ZMat operator*(const Int& s) const;
    ZMat transpose() const;
    ZMat mod(const Int& m) const;  // entrywise mod_pos

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

    // Fraction-free determinant (square only).
    Int det() const;

    std::vector<ZMat> split_rows() const;  // not used; keep rows() API lean

  private:
    int r_, c_;
    std::vector<Int> a_;
};

std::ostream& operator<<(std::ostream& os, const ZMat& m);

class QMat {
  public:
    QMat() : r_(0), c_(0) {}
    QMat(int r, int c) : r_(r), c_(c), a_(size_t(r) * c) {}
    explicit QMat(const ZMat& z);
    static QMat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    QMat operator*(const QMat& o) const;
    QMat transpose() const;

    // Inverse; throws std::domain_error if singular.
    QMat inverse() const;
    int rank() const;
    Rat det() const;

    // Lcm of entry denominators.
    Int denominator() const;
    // Numerator matrix after scaling by denominator().
    ZMat scaled_numerator(Int* den = nullptr) const;
    // True if every entry is an integer; then the cast is exact.
    bool is_integral() const;
    ZMat to_z() const;

  private:
    int r_, c_;
    std::vector<Rat> a_;
};

// Row-style Hermite normal form: returns H with the same row span as A,
// zero rows removed, pivots positive, entries above each pivot reduced into
// [0, pivot). If U is non-null it receives a unimodular matrix with U*A
// equal to the HNF including zero rows (U has A.rows() rows).
ZMat hnf(const ZMat& a, ZMat* u = nullptr, bool drop_zero_rows = true);

// Basis of the left kernel {x : x*A = 0}, saturated (integral row basis).
ZMat left_kernel(const ZMat& a);

// Smith normal form over Z: returns diagonal entries d_1 | d_2 | ... (one per
// min(r,c), zeros included), with optional transforms U*A*V = diag.
std::vector<Int> snf_diagonal(const ZMat& a, ZMat* u = nullptr, ZMat* v = nullptr);

// Lattice helpers on full-column-rank row lattices in HNF.
ZMat lattice_sum(const ZMat& a, const ZMat& b);
ZMat lattice_intersect(const ZMat& a, const ZMat& b);
// Index [B : A] when A subset of B, both full rank square HNF; throws otherwise.
Int lattice_index(const ZMat& sub, const ZMat& super);
// Membership of row vector v in the row lattice spanned by HNF h (full rank).
bool in_lattice(const std::vector<Int>& v, const ZMat& h);
// Coordinates x with x*h = v; empty optional when not in the lattice.
std::optional<std::vector<Int>> lattice_coords(const std::vector<Int>& v, const ZMat& h);

}  // namespace ordsmith
