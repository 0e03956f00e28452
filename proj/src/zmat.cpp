#include "ordsmith/zmat.hpp"

#include <ostream>

namespace ordsmith {

ZMat ZMat::identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool ZMat::is_zero() const {
    for (auto& x : a_)
        if (x != 0) return false;
    return true;
}

ZMat ZMat::operator*(const ZMat& o) const {
    assert(c_ == o.r_);
    ZMat r(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.c_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

ZMat ZMat::operator+(const ZMat& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    ZMat r(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

ZMat ZMat::operator-(const ZMat& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    ZMat r(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

ZMat ZMat::operator*(const Int& s) const {
    ZMat r(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

ZMat ZMat::transpose() const {
    ZMat r(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ZMat ZMat::mod(const Int& m) const {
    ZMat r(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = mod_pos(a_[i], m);
    return r;
}

void ZMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < c_; ++c) std::swap(at(i, c), at(j, c));
}

void ZMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < r_; ++r) std::swap(at(r, i), at(r, j));
}

Int ZMat::det() const {
    assert(r_ == c_);
    int n = r_;
    if (n == 0) return 1;
    ZMat m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::ostream& operator<<(std::ostream& os, const ZMat& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
    }
    return os << "]";
}

QMat::QMat(const ZMat& z) : r_(z.rows()), c_(z.cols()), a_(size_t(r_) * c_) {
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) at(i, j) = z.at(i, j);
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    assert(c_ == o.r_);
    QMat r(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.c_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

QMat QMat::transpose() const {
    QMat r(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) r.at(j, i) = at(i, j);
    return r;
}

QMat QMat::inverse() const {
    assert(r_ == c_);
    int n = r_;
    QMat m = *this, inv = identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("singular matrix");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(k, j), m.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        Rat d = m.at(k, k);
        for (int j = 0; j < n; ++j) {
            m.at(k, j) /= d;
            inv.at(k, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || m.at(i, k) == 0) continue;
            Rat f = m.at(i, k);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

int QMat::rank() const {
    QMat m = *this;
    int rank = 0;
    for (int col = 0; col < c_ && rank < r_; ++col) {
        int piv = -1;
        for (int i = rank; i < r_; ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < c_; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        for (int i = rank + 1; i < r_; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) / m.at(rank, col);
            for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

Rat QMat::det() const {
    assert(r_ == c_);
    QMat m = *this;
    Rat d = 1;
    for (int k = 0; k < r_; ++k) {
        int piv = -1;
        for (int i = k; i < r_; ++i)
            if (m.at(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = 0; j < c_; ++j) std::swap(m.at(k, j), m.at(piv, j));
            d = -d;
        }
        d *= m.at(k, k);
        for (int i = k + 1; i < r_; ++i) {
            if (m.at(i, k) == 0) continue;
            Rat f = m.at(i, k) / m.at(k, k);
            for (int j = k; j < c_; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return d;
}

Int QMat::denominator() const {
    Int l = 1;
    for (auto& x : a_) {
        Int d = x.get_den();
        l = lcm(l, d);
    }
    return l;
}

ZMat QMat::scaled_numerator(Int* den) const {
    Int l = denominator();
    if (den) *den = l;
    ZMat z(r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            Rat v = at(i, j) * l;
            z.at(i, j) = v.get_num();
        }
    return z;
}

bool QMat::is_integral() const {
    for (auto& x : a_)
        if (x.get_den() != 1) return false;
    return true;
}

ZMat QMat::to_z() const {
    assert(is_integral());
    ZMat z(r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) z.at(i, j) = at(i, j).get_num();
    return z;
}

ZMat hnf(const ZMat& a, ZMat* u, bool drop_zero_rows) {
    ZMat h = a;
    ZMat tr = ZMat::identity(a.rows());
    int m = h.rows(), n = h.cols();
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        // Clear the column below `row` with gcd steps.
        while (true) {
            int piv = -1;
            for (int i = row; i < m; ++i)
                if (h.at(i, col) != 0) {
                    piv = (piv < 0 || abs(h.at(i, col)) < abs(h.at(piv, col))) ? i : piv;
                }
            if (piv < 0) break;
            h.swap_rows(row, piv);
            tr.swap_rows(row, piv);
            bool clean = true;
            for (int i = row + 1; i < m; ++i) {
                if (h.at(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
                for (int j = 0; j < n; ++j) h.at(i, j) -= q * h.at(row, j);
                for (int j = 0; j < tr.cols(); ++j) tr.at(i, j) -= q * tr.at(row, j);
                if (h.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(row, col) == 0) continue;
        if (h.at(row, col) < 0) {
            for (int j = 0; j < n; ++j) h.at(row, j) = -h.at(row, j);
            for (int j = 0; j < tr.cols(); ++j) tr.at(row, j) = -tr.at(row, j);
        }
        // Reduce entries above the pivot into [0, pivot).
        for (int i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
            if (q == 0) continue;
            for (int j = 0; j < n; ++j) h.at(i, j) -= q * h.at(row, j);
            for (int j = 0; j < tr.cols(); ++j) tr.at(i, j) -= q * tr.at(row, j);
        }
        ++row;
    }
    if (u) *u = tr;
    if (!drop_zero_rows) return h;
    ZMat out(row, n);
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = h.at(i, j);
    return out;
}

ZMat left_kernel(const ZMat& a) {
    ZMat u;
    ZMat h = hnf(a, &u, false);
    int nz = 0;
    std::vector<int> zero_rows;
    for (int i = 0; i < h.rows(); ++i) {
        bool z = true;
        for (int j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) z = false;
        if (z) zero_rows.push_back(i);
    }
    (void)nz;
    ZMat k((int)zero_rows.size(), a.rows());
    for (size_t t = 0; t < zero_rows.size(); ++t)
        for (int j = 0; j < a.rows(); ++j) k.at((int)t, j) = u.at(zero_rows[t], j);
    return k;
}

std::vector<Int> snf_diagonal(const ZMat& a, ZMat* uo, ZMat* vo) {
    ZMat m = a;
    int r = m.rows(), c = m.cols();
    ZMat u = ZMat::identity(r), v = ZMat::identity(c);
    int t = 0;
    int nmin = std::min(r, c);
    while (t < nmin) {
        int pi = -1, pj = -1;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j)
                if (m.at(i, j) != 0 &&
                    (pi < 0 || abs(m.at(i, j)) < abs(m.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        m.swap_rows(t, pi);
        u.swap_rows(t, pi);
        m.swap_cols(t, pj);
        v.swap_cols(t, pj);
        bool again = false;
        for (int i = t + 1; i < r; ++i) {
            if (m.at(i, t) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
            for (int j = 0; j < c; ++j) m.at(i, j) -= q * m.at(t, j);
            for (int j = 0; j < r; ++j) u.at(i, j) -= q * u.at(t, j);
            if (m.at(i, t) != 0) again = true;
        }
        for (int j = t + 1; j < c; ++j) {
            if (m.at(t, j) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
            for (int i = 0; i < r; ++i) m.at(i, j) -= q * m.at(i, t);
            for (int i = 0; i < c; ++i) v.at(i, j) -= q * v.at(i, t);
            if (m.at(t, j) != 0) again = true;
        }
        if (again) continue;
        // Enforce divisibility d_t | m_{ij} for the trailing block.
        bool fixed = true;
        for (int i = t + 1; i < r && fixed; ++i)
            for (int j = t + 1; j < c && fixed; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    for (int jj = 0; jj < c; ++jj) m.at(t, jj) += m.at(i, jj);
                    for (int jj = 0; jj < r; ++jj) u.at(t, jj) += u.at(i, jj);
                    fixed = false;
                }
        if (!fixed) continue;
        if (m.at(t, t) < 0) {
            for (int j = 0; j < c; ++j) m.at(t, j) = -m.at(t, j);
            for (int j = 0; j < r; ++j) u.at(t, j) = -u.at(t, j);
        }
        ++t;
    }
    std::vector<Int> d(nmin);
    for (int i = 0; i < nmin; ++i) d[i] = m.at(i, i);
    if (uo) *uo = u;
    if (vo) *vo = v;
    return d;
}

ZMat lattice_sum(const ZMat& a, const ZMat& b) {
    assert(a.cols() == b.cols());
    ZMat s(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) s.at(a.rows() + i, j) = b.at(i, j);
    return hnf(s);
}

ZMat lattice_intersect(const ZMat& a, const ZMat& b) {
    assert(a.cols() == b.cols());
    ZMat s(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) s.at(a.rows() + i, j) = b.at(i, j);
    ZMat k = left_kernel(s);
    // First a.rows() coordinates of each kernel row give combinations of a-rows.
    ZMat comb(k.rows(), a.cols());
    for (int i = 0; i < k.rows(); ++i)
        for (int t = 0; t < a.rows(); ++t)
            for (int j = 0; j < a.cols(); ++j) comb.at(i, j) += k.at(i, t) * a.at(t, j);
    return hnf(comb);
}

Int lattice_index(const ZMat& sub, const ZMat& super) {
    assert(sub.rows() == sub.cols() && super.rows() == super.cols());
    Int ds = abs(sub.det()), dS = abs(super.det());
    if (dS == 0 || ds % dS != 0) throw std::domain_error("not a sublattice pair");
    for (int i = 0; i < sub.rows(); ++i) {
        std::vector<Int> v(sub.cols());
        for (int j = 0; j < sub.cols(); ++j) v[j] = sub.at(i, j);
        if (!in_lattice(v, super)) throw std::domain_error("not a sublattice pair");
    }
    return ds / dS;
}

std::optional<std::vector<Int>> lattice_coords(const std::vector<Int>& v, const ZMat& h) {
    // h full rank in echelon (HNF) shape; back-substitute.
    int n = h.cols();
    assert((int)v.size() == n && h.rows() == n);
    std::vector<Int> w(v), x(n);
    for (int i = 0; i < n; ++i) {
        // pivot of row i is at column i for full-rank square HNF
        if (h.at(i, i) == 0) return std::nullopt;
        if (w[i] % h.at(i, i) != 0) return std::nullopt;
        x[i] = w[i] / h.at(i, i);
        for (int j = i; j < n; ++j) w[j] -= x[i] * h.at(i, j);
    }
    for (int j = 0; j < n; ++j)
        if (w[j] != 0) return std::nullopt;
    return x;
}

bool in_lattice(const std::vector<Int>& v, const ZMat& h) {
    return lattice_coords(v, h).has_value();
}

}  // namespace ordsmith
