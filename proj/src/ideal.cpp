#include "ordsmith/ideal.hpp"

#include <algorithm>

namespace ordsmith {

LeftIdeal::LeftIdeal(const Order& o, ZMat h) : hnf_(std::move(h)), kind_(o.kind()) {
    if (hnf_.rows() != o.dim())
        throw std::invalid_argument("ideal lattice not of full rank");
    Int idx = abs(hnf_.det());
    if (idx == 0) throw std::invalid_argument("zero ideal");
    if (kind_ == AlgebraKind::quadratic) {
        norm_ = idx;
    } else {
        bool sq = false;
        norm_ = isqrt(idx, &sq);
        if (!sq) throw std::logic_error("lattice index not a square: not a quaternion left ideal");
    }
}

LeftIdeal LeftIdeal::from_generators(const Order& o, std::span<const Elem> gens) {
    int d = o.dim();
    std::vector<Elem> rows;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        for (int i = 0; i < d; ++i) rows.push_back(o.mul(o.basis_elem(i), g));
    }
    if (rows.empty()) throw std::invalid_argument("zero ideal");
    ZMat m((int)rows.size(), d);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int j = 0; j < d; ++j) m.at((int)r, j) = rows[r].c[j];
    return LeftIdeal(o, hnf(m));
}

LeftIdeal LeftIdeal::from_generators(const Order& o, std::initializer_list<Elem> gens) {
    return from_generators(o, std::span<const Elem>(gens.begin(), gens.size()));
}

LeftIdeal LeftIdeal::from_basis_rows(const Order& o, const ZMat& rows) {
    LeftIdeal I(o, hnf(rows));
    for (int i = 0; i < I.hnf_.rows(); ++i) {
        Elem u;
        for (int j = 0; j < o.dim(); ++j) u.c[j] = I.hnf_.at(i, j);
        for (int b = 0; b < o.dim(); ++b)
            if (!I.contains(o, o.mul(o.basis_elem(b), u)))
                throw std::invalid_argument("rows do not span a left ideal");
    }
    return I;
}

LeftIdeal LeftIdeal::whole_ring(const Order& o) {
    std::vector<Elem> gens = {o.one()};
    return from_generators(o, gens);
}

LeftIdeal LeftIdeal::principal(const Order& o, const Elem& g) {
    std::vector<Elem> gens = {g};
    return from_generators(o, gens);
}

Int LeftIdeal::content() const {
    Int g = 0;
    for (int i = 0; i < hnf_.rows(); ++i)
        for (int j = 0; j < hnf_.cols(); ++j) g = gcd(g, hnf_.at(i, j));
    return g;
}

bool LeftIdeal::contains(const Order& o, const Elem& x) const {
    (void)o;
    std::vector<Int> v(hnf_.cols());
    for (int j = 0; j < hnf_.cols(); ++j) v[j] = x.c[j];
    return in_lattice(v, hnf_);
}

bool LeftIdeal::is_whole_ring() const { return abs(hnf_.det()) == 1; }

bool LeftIdeal::is_two_sided(const Order& o) const {
    for (int i = 0; i < hnf_.rows(); ++i) {
        Elem u;
        for (int j = 0; j < o.dim(); ++j) u.c[j] = hnf_.at(i, j);
        for (int b = 0; b < o.dim(); ++b)
            if (!contains(o, o.mul(u, o.basis_elem(b)))) return false;
    }
    return true;
}

std::vector<Elem> LeftIdeal::basis_elems(const Order& o) const {
    std::vector<Elem> out;
    for (int i = 0; i < hnf_.rows(); ++i) {
        Elem u;
        for (int j = 0; j < o.dim(); ++j) u.c[j] = hnf_.at(i, j);
        out.push_back(u);
    }
    return out;
}

LeftIdeal ideal_sum(const Order& o, const LeftIdeal& a, const LeftIdeal& b) {
    return LeftIdeal::from_basis_rows(o, lattice_sum(a.basis(), b.basis()));
}

LeftIdeal ideal_intersect(const Order& o, const LeftIdeal& a, const LeftIdeal& b) {
    return LeftIdeal::from_basis_rows(o, lattice_intersect(a.basis(), b.basis()));
}

LeftIdeal ideal_product(const Order& o, const LeftIdeal& a, const LeftIdeal& b) {
    if (o.kind() == AlgebraKind::quaternion && !b.is_two_sided(o))
        throw std::invalid_argument("right factor of a quaternion ideal product must be two-sided");
    auto ae = a.basis_elems(o), be = b.basis_elems(o);
    std::vector<Elem> rows;
    for (auto& u : ae)
        for (auto& v : be) rows.push_back(o.mul(u, v));
    ZMat m((int)rows.size(), o.dim());
    for (size_t r = 0; r < rows.size(); ++r)
        for (int j = 0; j < o.dim(); ++j) m.at((int)r, j) = rows[r].c[j];
    return LeftIdeal::from_basis_rows(o, hnf(m));
}

LeftIdeal ideal_scale(const Order& o, const LeftIdeal& a, const Int& c) {
    if (c == 0) throw std::invalid_argument("zero ideal");
    return LeftIdeal::from_basis_rows(o, a.basis() * abs(c));
}

LeftIdeal ideal_divide_scalar(const Order& o, const LeftIdeal& a, const Int& c) {
    ZMat m = a.basis();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) % c != 0) throw std::invalid_argument("ideal not divisible by scalar");
            m.at(i, j) /= c;
        }
    return LeftIdeal::from_basis_rows(o, m);
}

LeftIdeal ideal_mul_elem(const Order& o, const LeftIdeal& a, const Elem& x) {
    auto ae = a.basis_elems(o);
    ZMat m((int)ae.size(), o.dim());
    for (size_t r = 0; r < ae.size(); ++r) {
        Elem p = o.mul(ae[r], x);
        for (int j = 0; j < o.dim(); ++j) m.at((int)r, j) = p.c[j];
    }
    return LeftIdeal::from_basis_rows(o, hnf(m));
}

namespace {

// Exact rational Cholesky decomposition, Fincke-Pohst layout: after the loop
// q[i][i] holds the pivot and q[i][j] (j > i) the unit-triangular entries.
std::vector<std::vector<Rat>> cholesky(const ZMat& g) {
    int n = g.rows();
    std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[i][j] = Rat(g.at(i, j));
    for (int i = 0; i < n; ++i) {
        if (q[i][i] <= 0) throw std::domain_error("gram matrix not positive definite");
        for (int j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j] / q[i][i];
        }
        for (int k = i + 1; k < n; ++k)
            for (int l = k; l < n; ++l) q[k][l] = q[k][l] - q[k][i] * q[i][l];
    }
    return q;
}

}  // namespace

bool enumerate_short_vectors(const ZMat& gram2, const Int& bound2,
                             const std::function<bool(const std::vector<Int>&)>& emit) {
    int n = gram2.rows();
    // Symmetrize input upper part usage; cholesky reads the full matrix.
    auto q = cholesky(gram2);
    std::vector<Int> x(n, 0);
    std::vector<Rat> T(n), U(n);
    std::vector<Int> hi(n);
    int lev = n - 1;
    T[lev] = Rat(bound2);
    U[lev] = 0;

    auto enter_level = [&](int i) -> bool {
        if (T[i] < 0) return false;
        // q_ii (x + U_i)^2 <= T_i
        auto fits = [&](const Int& z) -> bool {
            Rat d = Rat(z) + U[i];
            return q[i][i] * d * d <= T[i];
        };
        // start from the rounded center and scan outward for the lower end
        Rat center = -U[i];
        Int z = Int(center.get_num() / center.get_den());
        if (!fits(z)) {
            bool found = false;
            for (int step = 1; step <= 4 && !found; ++step) {
                if (fits(z + step)) {
                    z = z + step;
                    found = true;
                } else if (fits(z - step)) {
                    z = z - step;
                    found = true;
                }
            }
            if (!found) {
                // wide scan bounded by sqrt(T/q)
                Rat lim2 = T[i] / q[i][i];
                Int s = isqrt(lim2.get_num() / lim2.get_den()) + 2;
                bool any = false;
                for (Int t = -s; t <= s; ++t)
                    if (fits(t)) {
                        z = t;
                        any = true;
                        break;
                    }
                if (!any) return false;
            }
        }
        while (fits(z - 1)) --z;
        Int top = z;
        while (fits(top + 1)) ++top;
        x[i] = z - 1;
        hi[i] = top;
        return true;
    };

    if (!enter_level(lev)) return true;
    while (true) {
        x[lev] += 1;
        if (x[lev] > hi[lev]) {
            ++lev;
            if (lev >= n) return true;
            continue;
        }
        if (lev > 0) {
            Rat d = Rat(x[lev]) + U[lev];
            T[lev - 1] = T[lev] - q[lev][lev] * d * d;
            U[lev - 1] = 0;
            for (int j = lev; j < n; ++j) U[lev - 1] += q[lev - 1][j] * Rat(x[j]);
            --lev;
            if (!enter_level(lev)) {
                ++lev;
                continue;
            }
            continue;
        }
        int topnz = -1;
        for (int t = n - 1; t >= 0; --t)
            if (x[t] != 0) {
                topnz = t;
                break;
            }
        if (topnz >= 0 && x[topnz] > 0) {
            if (!emit(x)) return false;
        }
    }
}

std::vector<Elem> elements_of_norm(const Order& o, const LeftIdeal& I, const Int& target) {
    int d = o.dim();
    auto rows = I.basis_elems(o);
    ZMat g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g.at(i, j) = o.inner(rows[i], rows[j]);
    std::vector<Elem> out;
    enumerate_short_vectors(g, 2 * target, [&](const std::vector<Int>& x) {
        Elem e;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) e.c[j] += x[i] * rows[i].c[j];
        if (o.norm(e) == target) out.push_back(e);
        return true;
    });
    return out;
}

PrincipalityResult is_principal(const Order& o, const LeftIdeal& I) {
    PrincipalityResult res;
    Int target = I.reduced_norm();
    int d = o.dim();
    auto rows = I.basis_elems(o);
    ZMat g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g.at(i, j) = o.inner(rows[i], rows[j]);
    std::optional<Elem> gen;
    long count = 0;
    enumerate_short_vectors(g, 2 * target, [&](const std::vector<Int>& x) {
        ++count;
        Elem e;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) e.c[j] += x[i] * rows[i].c[j];
        if (o.norm(e) == target) {
            gen = e;
            return false;
        }
        return true;
    });
    res.enumerated = count;
    if (gen) {
        res.principal = true;
        res.generator = *gen;
        // An element of the ideal with the exact reduced norm generates it.
        if (!(LeftIdeal::principal(o, *gen) == I))
            throw std::logic_error("norm-witness does not generate the ideal");
    }
    return res;
}

Int minimal_integer(const Order& o, const LeftIdeal& I) {
    Int idx = I.lattice_index();
    for (Int c = 1; c <= idx; ++c) {
        if (idx % c != 0) continue;
        if (I.contains(o, o.from_int(c))) return c;
    }
    throw std::logic_error("no rational integer in ideal");
}

std::vector<Elem> two_generators(const Order& o, const LeftIdeal& I) {
    Int nn = minimal_integer(o, I);
    Elem n_el = o.from_int(nn);
    int d = o.dim();
    auto rows = I.basis_elems(o);
    ZMat g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g.at(i, j) = o.inner(rows[i], rows[j]);
    std::vector<Elem> found;
    Int bound = 2 * I.reduced_norm() * 16 + 2;
    enumerate_short_vectors(g, bound, [&](const std::vector<Int>& x) {
        Elem e;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) e.c[j] += x[i] * rows[i].c[j];
        std::vector<Elem> gens = {n_el, e};
        if (LeftIdeal::from_generators(o, std::span<const Elem>(gens.data(), 2)) == I) {
            found = gens;
            return false;
        }
        return true;
    });
    if (!found.empty()) return found;
    std::vector<Elem> gens = {n_el};
    for (auto& r : rows) gens.push_back(r);
    return gens;
}

}  // namespace ordsmith
