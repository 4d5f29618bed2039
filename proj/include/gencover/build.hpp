#ifndef GENCOVER_BUILD_HPP
#define GENCOVER_BUILD_HPP

#include "gencover/classify.hpp"

namespace gencover {

// T -> (aT + b)/(cT + d) with ad - bc != 0, stored up to scalar with the
// first nonzero entry normalized to 1.
struct MoebiusMap {
    NFElem a, b, c, d;

    static MoebiusMap make(const NFElem& a, const NFElem& b, const NFElem& c, const NFElem& d);
    static MoebiusMap identity() { return make(NFElem(1), NFElem(0), NFElem(0), NFElem(1)); }
    static MoebiusMap translation(const NFElem& t) { return make(NFElem(1), t, NFElem(0), NFElem(1)); }
    static MoebiusMap scaling(const NFElem& s) { return make(s, NFElem(0), NFElem(0), NFElem(1)); }
    static MoebiusMap inversion() { return make(NFElem(0), NFElem(1), NFElem(1), NFElem(0)); }

    NFElem det() const { return a * d - b * c; }
    MoebiusMap inverse() const { return make(d, NFElem(0) - b, NFElem(0) - c, a); }

    // function composition: (this o other)(T) = this(other(T))
    MoebiusMap compose(const MoebiusMap& other) const;

    // image of a point of P^1(k); nullopt encodes infinity
    std::optional<NFElem> apply_point(const std::optional<NFElem>& t) const;

    friend bool operator==(const MoebiusMap& x, const MoebiusMap& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

// Substitute T -> m(T), clear denominators and renormalize monic in Y;
// the splitting field over k(T) is unchanged.
BiPoly moebius_apply(const BiPoly& p, const MoebiusMap& m);

// Some M over k with M(s1) = s2 as Galois-stable sets (|s| <= 3), or nullopt.
// Supported over Q; number-field bases raise Unsupported for non-rational
// orbits.
std::optional<MoebiusMap> moebius_between(const std::vector<AlgPoint>& s1,
                                          const std::vector<AlgPoint>& s2, const FieldPtr& k);

struct TargetExtension {
    KPoly defining; // monic irreducible over k, degree <= 6
    GroupId expected_group;
};

// One-parameter generic families per admissible group: Y^n - T for even
// cyclic n with zeta_n in k, the Shanks cubic for Z/3, Y^3 + TY + T for S3.
BiPoly construct_generic(const GroupId& g, const FieldPtr& k);

// Minimal-height t0 whose specialization has splitting field isomorphic to
// the target's, by exhaustive height enumeration.
std::optional<Rat> solve_parameter(const BiPoly& p, const TargetExtension& target, const FieldPtr& k,
                                   const Int& height_bound);

// Splitting-field isomorphism test used by solve_parameter (exposed for
// tests); supports groups up to order 6 plus V4 and C4.
bool splitting_fields_isomorphic(const KPoly& f, const KPoly& g, const FieldPtr& k);

} // namespace gencover

#endif
