#pragma once

#include <map>

#include "ordsmith/elemmat.hpp"
#include "ordsmith/ideal.hpp"

namespace ordsmith {

// Raised internally when every remaining entry vanishes to the working
// precision; drivers double k and retry.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Residue machinery at one place, to working precision p^k.
struct PlaceCtx {
    PlaceId place;
    int k = 0;
    Int pk;
    // quadratic split: idempotent supported at this place
    Elem idem;
    int idem_unit_coord = -1;
    // quaternion split: Morita matrix units
    Elem e11, e12, e21, e22;
};

PlaceCtx make_place_ctx(const Order& o, const PlaceId& pl, int k);

// Scalar image at a quadratic split place, in [0, p^k).
Int quad_split_image(const Order& o, const PlaceCtx& ctx, const Elem& x);
// Element with the given image at this place and image 0 at the conjugate.
Elem quad_split_preimage(const Order& o, const PlaceCtx& ctx, const Int& v);
// 2x2 integer image at a quaternion split place.
ZMat quat_split_image(const Order& o, const PlaceCtx& ctx, const Elem& x);
Elem quat_split_preimage(const Order& o, const PlaceCtx& ctx, const ZMat& m);

// Valuation of x at the place, capped at ctx.k (cap value returned as ctx.k).
int place_valuation(const Order& o, const PlaceCtx& ctx, const Elem& x);

// Elementary transvection record: matrix I + a E_{ij} applied from the
// recorded side (left: row_i += a*row_j; right: col_j += col_i*a).
struct Transvection {
    int i = 0, j = 0;
    Elem a;
};

// One side of a local factorization: transvections in application order,
// residues mod p^k, plus the diagonal of the achieved normal form (whose
// entries carry the leftover local units).
struct TransvectionSeq {
    PlaceId place;
    int k = 0;
    Int pk;
    std::vector<Transvection> ops;
    std::vector<Elem> diag;
};

// Invariant data of one place.
struct PlaceData {
    PlaceId place;
    std::vector<int> exps;                       // quadratic & ramified quaternion
    std::vector<std::array<int, 2>> pairs;       // split quaternion
    bool trivial() const;
    bool operator==(const PlaceData& o) const;
    std::string str() const;
};

struct LocalEDProfile {
    std::vector<PlaceData> places;  // ascending (p, kind), nontrivial entries only

    const PlaceData* find(const PlaceId& pl) const;
    bool operator==(const LocalEDProfile& o) const;
    std::string str() const;
};

struct LocalSNF {
    PlaceData data;
    TransvectionSeq left, right;
    EMat normal_form;  // L M R mod p^k, block diagonal
    int k = 0;
};

// Local Smith normal form at one place with transvection tracking. k < 0
// selects the automatic precision policy (and retries on failure).
LocalSNF local_unimodular_snf(const Order& o, const EMat& m, const PlaceId& pl, int k = -1);

// Replays seqs on m over Lambda/p^k; returns L M R.
EMat replay(const Order& o, const EMat& m, const TransvectionSeq& left,
            const TransvectionSeq& right);

// Per-place invariants at every place dividing the scale of m; quadratic
// algebras may use any n, quaternion n >= 1 (transvections only for n >= 2).
LocalEDProfile unimodular_profile(const Order& o, const EMat& m);

// Global elementary divisor ideals via determinantal divisors (quadratic).
std::vector<LeftIdeal> global_eds_quadratic(const Order& o, const EMat& m);

// Integer SNF of the restriction of scalars, reported per prime as the
// sorted list of nonzero exponents.
std::map<Int, std::vector<int>> restriction_of_scalars_snf(const Order& o, const EMat& m);

// Expected integer-SNF exponent multiset at p derived from the per-place
// profile data by the place-kind multiplicity rules.
std::vector<int> restriction_multiplicity_rule(const Order& o, const LocalEDProfile& prof,
                                               const Int& p);

// Conjugate ideal (entrywise involution).
LeftIdeal ideal_conj(const Order& o, const LeftIdeal& I);

// Integer-matrix local SNF over Z/p^k with transvection tracking; used by
// the split-place paths and exposed for tests.
struct IntTransvection {
    int i = 0, j = 0;
    Int a;
};
struct IntLocalSNF {
    std::vector<int> exps;
    std::vector<IntTransvection> left, right;
    ZMat normal;
};
IntLocalSNF int_local_snf(ZMat a, const Int& p, int k);

}  // namespace ordsmith
