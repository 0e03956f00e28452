#pragma once

#include "ordsmith/ideal.hpp"

namespace ordsmith {

// Primitive binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
    Int a, b, c;
    Int disc() const { return b * b - 4 * a * c; }
    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    std::string str() const;
};

QuadForm reduce_form(QuadForm f);
// All reduced primitive forms of discriminant D < 0.
std::vector<QuadForm> reduced_forms(const Int& D);

QuadForm form_of_ideal(const Order& o, const LeftIdeal& I);
LeftIdeal ideal_of_form(const Order& o, const QuadForm& f);

// Class group of an imaginary quadratic maximal order, with composition
// realized through exact ideal products.
class IdealClassGroup {
  public:
    static IdealClassGroup build(const Order& o);

    int order() const { return (int)reps_.size(); }
    const std::vector<QuadForm>& representatives() const { return reps_; }
    int identity_index() const { return id_; }
    int class_index(const Order& o, const LeftIdeal& I) const;
    int compose(int i, int j) const { return table_[i][j]; }
    LeftIdeal ideal_of(const Order& o, int idx) const;

  private:
    std::vector<QuadForm> reps_;
    std::vector<std::vector<int>> table_;
    int id_ = 0;
};

struct ClassSumResult {
    enum class Status { trivial, nontrivial, inconclusive };
    Status status = Status::inconclusive;
    std::optional<Elem> generator;   // witness generator when a single ideal decides
    std::optional<ZMat> free_basis;  // rows = free module basis from the lattice search
    std::string certificate;
    Int bound_used = 0;
};

// Decides whether the classes of the given left ideals sum to zero in
// Cl(Lambda). Quadratic: exact via form composition. Quaternion (needs
// n >= 2): principal/coprime reductions first, then a single-ideal decision
// or a bounded free-basis search over the rank-n lattice.
ClassSumResult class_sum_is_trivial(const Order& o, std::vector<LeftIdeal> eds, int n);

struct FreeBasisSearch {
    bool found = false;
    ZMat basis_rows;  // n rows, each the concatenated coordinates of a Lambda^n vector
    Int bound_used = 0;
};

// Searches short vectors of the rank-n left module lattice H (HNF rows over
// Z^{n*dim}) for a free Lambda-basis. bound2 is the doubled norm-form bound
// for the initial sweep; it escalates geometrically.
FreeBasisSearch search_free_basis(const Order& o, const ZMat& h, int n, Int bound2,
                                  int escalations);

// Effective search bound override (ORDSMITH_SEARCH_BOUND), default `dflt`.
Int search_bound_or_default(const Int& dflt);

}  // namespace ordsmith
