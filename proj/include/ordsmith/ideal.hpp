#pragma once

#include <functional>
#include <optional>

#include "ordsmith/order.hpp"

namespace ordsmith {

// Left ideal of the maximal order, stored as the HNF integer matrix whose
// rows are coordinates of a Z-basis over the order basis.
class LeftIdeal {
  public:
    static LeftIdeal from_generators(const Order& o, std::span<const Elem> gens);
    static LeftIdeal from_generators(const Order& o, std::initializer_list<Elem> gens);
    // Rows must already span a left ideal; verified.
    static LeftIdeal from_basis_rows(const Order& o, const ZMat& rows);
    static LeftIdeal whole_ring(const Order& o);
    static LeftIdeal principal(const Order& o, const Elem& g);

    const ZMat& basis() const { return hnf_; }
    // Reduced norm: lattice index for quadratic, its square root for
    // quaternion orders (exact; squareness failure signals a non-ideal).
    const Int& reduced_norm() const { return norm_; }
    Int lattice_index() const { return abs(hnf_.det()); }
    // Largest c with all coordinates divisible by c (so I = c * primitive).
    Int content() const;

    bool contains(const Order& o, const Elem& x) const;
    bool is_whole_ring() const;
    bool is_two_sided(const Order& o) const;
    std::vector<Elem> basis_elems(const Order& o) const;

    bool operator==(const LeftIdeal& o) const { return hnf_ == o.hnf_; }

  private:
    LeftIdeal(const Order& o, ZMat h);
    ZMat hnf_;
    Int norm_;
    AlgebraKind kind_;
};

LeftIdeal ideal_sum(const Order& o, const LeftIdeal& a, const LeftIdeal& b);
LeftIdeal ideal_intersect(const Order& o, const LeftIdeal& a, const LeftIdeal& b);
// Product a*b as lattices. The right factor must be two-sided (always true in
// the quadratic case); otherwise std::invalid_argument.
LeftIdeal ideal_product(const Order& o, const LeftIdeal& a, const LeftIdeal& b);
LeftIdeal ideal_scale(const Order& o, const LeftIdeal& a, const Int& c);
// Exact division of every coordinate by c.
LeftIdeal ideal_divide_scalar(const Order& o, const LeftIdeal& a, const Int& c);
// Right multiplication by an element: a * x.
LeftIdeal ideal_mul_elem(const Order& o, const LeftIdeal& a, const Elem& x);

// All lattice vectors with doubled quadratic form value in (0, bound2],
// one per +-pair, reported through the callback as coordinate vectors.
// gram2 must be symmetric positive definite. Returns false if the callback
// aborted the walk.
bool enumerate_short_vectors(const ZMat& gram2, const Int& bound2,
                             const std::function<bool(const std::vector<Int>&)>& emit);

// All x in I with reduced norm exactly `target`, up to sign.
std::vector<Elem> elements_of_norm(const Order& o, const LeftIdeal& I, const Int& target);

struct PrincipalityResult {
    bool principal = false;
    Elem generator;        // valid when principal
    long enumerated = 0;   // vectors visited by the complete norm enumeration
};

// Complete decision via exhaustive enumeration of {x in I : nrd(x) = nrd(I)}
// (a finite set, the norm form being positive definite). In the quadratic
// case the answer is cross-checked against reduced-form equivalence.
PrincipalityResult is_principal(const Order& o, const LeftIdeal& I);

// Two-generator presentation (N, x) with I = Lambda*N + Lambda*x where N is
// the smallest positive rational integer in I. Falls back to more generators
// when no small second generator exists within the search bound.
std::vector<Elem> two_generators(const Order& o, const LeftIdeal& I);

// Smallest positive rational integer contained in I.
Int minimal_integer(const Order& o, const LeftIdeal& I);

}  // namespace ordsmith
