#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordsmith/zmat.hpp"

namespace ordsmith {

enum class AlgebraKind { quadratic, quaternion };

// Coefficient vector over the fixed order basis. Quadratic algebras use the
// first two slots.
struct Elem {
    std::array<Int, 4> c{};

    bool operator==(const Elem& o) const { return c == o.c; }
    bool operator!=(const Elem& o) const { return !(*this == o); }
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
};

enum class PlaceKind { split_first, split_second, inert, ramified, split };

struct PlaceId {
    Int p;
    PlaceKind kind;

    bool operator==(const PlaceId& o) const { return p == o.p && kind == o.kind; }
    bool operator<(const PlaceId& o) const {
        if (p != o.p) return p < o.p;
        return (int)kind < (int)o.kind;
    }
    std::string str() const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
    Int gram_det = 0;            // det(trd(b_i b_j))
    Int reduced_discriminant = 0;  // quadratic: field discriminant; quaternion: product of ramified primes

    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

struct CrtTarget {
    Int p;
    unsigned k = 1;
    std::optional<Elem> residue;  // nullopt = use the default residue
};

// A maximal order in an imaginary quadratic field Q(sqrt(d)), d < 0
// squarefree, or in a definite rational quaternion algebra (a,b | Q).
// Elements are integer coefficient vectors over the fixed order basis; all
// arithmetic is exact.
class Order {
  public:
    static Order quadratic(const Int& d);
    static Order quadratic(const Int& d, const QMat& basis);  // basis rows over {1, sqrt d}
    static Order quaternion(const Int& a, const Int& b, const QMat& basis);  // rows over {1,i,j,k}

    static ValidationReport validate_quadratic(const Int& d, const QMat* basis = nullptr);
    static ValidationReport validate_quaternion(const Int& a, const Int& b, const QMat& basis);

    AlgebraKind kind() const { return kind_; }
    int dim() const { return kind_ == AlgebraKind::quadratic ? 2 : 4; }
    const Int& quad_d() const { return d_; }
    const Int& quat_a() const { return a_; }
    const Int& quat_b() const { return b_; }
    // Quadratic: field discriminant (negative). Quaternion: reduced
    // discriminant (positive product of ramified primes).
    const Int& discriminant() const { return disc_; }
    const QMat& basis() const { return basis_; }

    bool same_algebra(const Order& o) const;

    Elem zero() const { return Elem{}; }
    Elem one() const { return one_; }
    Elem basis_elem(int i) const;
    Elem from_int(const Int& n) const;

    Elem add(const Elem& x, const Elem& y) const;
    Elem sub(const Elem& x, const Elem& y) const;
    Elem neg(const Elem& x) const;
    Elem smul(const Int& s, const Elem& x) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem involute(const Elem& x) const;
    Int trace(const Elem& x) const;  // reduced trace, an integer
    Int norm(const Elem& x) const;   // reduced norm, a non-negative integer
    // Bilinear form trd(x * involute(y)); Gram of the norm form doubled.
    Int inner(const Elem& x, const Elem& y) const;

    Elem reduce_mod(const Elem& x, const Int& m) const;      // coefficients into [0, m)
    Elem reduce_mod_sym(const Elem& x, const Int& m) const;  // balanced representatives

    // Exact division x / n for a rational integer n; nullopt when not整.
    std::optional<Elem> div_int(const Elem& x, const Int& n) const;

    // Ambient coordinates (over {1, sqrt d} or {1,i,j,k}) as a rational row.
    std::vector<Rat> to_ambient(const Elem& x) const;
    std::optional<Elem> from_ambient(const std::vector<Rat>& v) const;

    // Rows = coordinates of x * b_i over the basis; c(x*y) = c(y) * this.
    ZMat left_rep(const Elem& x) const;

    std::vector<PlaceId> classify_prime(const Int& p) const;
    // All places above the primes dividing n, in ascending (p, kind) order.
    std::vector<PlaceId> places_above(const Int& n) const;

    // Element with prescribed residues modulo p^k at the listed prime powers,
    // congruent to `dflt` at targets without an explicit residue. Congruence
    // is coefficient-wise over the order basis. Throws on inconsistent
    // duplicate targets.
    Elem crt_lift(std::span<const CrtTarget> targets, const Elem& dflt) const;

    std::string render(const Elem& x) const;
    std::string basis_name(int i) const;

  private:
    Order() = default;

    void build_tables();

    AlgebraKind kind_ = AlgebraKind::quadratic;
    Int d_, a_, b_;
    Int disc_;
    QMat basis_, basis_inv_;
    Elem one_;
    std::array<std::array<Elem, 4>, 4> mult_{};
    std::array<Elem, 4> invol_{};
    std::array<Int, 4> trd_{};
    std::array<std::array<Int, 4>, 4> norm_gram2_{};  // trd(b_i * invol(b_j))
};

// Ambient multiplication used while building tables (and as a reference
// path): rows are rational coefficient vectors over {1, sqrt d} or {1,i,j,k}.
std::vector<Rat> ambient_mul(AlgebraKind kind, const Int& d_or_a, const Int& b,
                             const std::vector<Rat>& x, const std::vector<Rat>& y);

}  // namespace ordsmith
