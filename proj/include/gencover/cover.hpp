#ifndef GENCOVER_COVER_HPP
#define GENCOVER_COVER_HPP

#include "gencover/bipoly.hpp"
#include "gencover/groupid.hpp"

namespace gencover {

// A point of P^1(kbar): infinity, a k-rational value, or a root of an
// irreducible minimal polynomial over k selected by an isolating rectangle.
struct AlgPoint {
    bool at_infinity = false;
    bool rational = false;
    NFElem value;               // set when rational
    std::optional<KPoly> min_poly; // set when not rational and not infinity
    Box box{};                  // isolating rectangle (point box when rational)

    static AlgPoint infinity() {
        AlgPoint p;
        p.at_infinity = true;
        return p;
    }
    static AlgPoint from_value(const NFElem& v);
};

struct InertiaClass {
    long order = 1;               // element order = ramification index
    std::vector<long> cycle_type; // local place degrees above the point
    std::string label;            // "C2", "C3", ...
};

struct BranchPointRecord {
    AlgPoint point;
    std::optional<KPoly> orbit_poly; // irreducible over k; absent for infinity / k-rational
    long ram_index = 1;
    InertiaClass inertia;
};

enum class TriBool { False, True, Unknown };

struct CoverInvariants {
    GroupId group;                     // over k(T)
    long geometric_order = 0;          // |Gal over kbar(T)|; genus uses this
    long r = 0;
    std::vector<BranchPointRecord> branch;
    std::vector<long> e_tuple;         // sorted ascending
    long genus = 0;
    TriBool regular = TriBool::Unknown;
    bool all_branch_in_k = false;
    bool certified = true;             // false when the group came from sampling
};

// Degrees of the irreducible factors of a monic q(s, Z) over kbar((s));
// q given by its Z-coefficients, polynomials in s over M. The multiset of
// degrees is the cycle type of the local inertia generator; its lcm is the
// ramification index in the Galois closure.
std::vector<long> local_place_degrees(const std::vector<KPoly>& q, const FieldPtr& M);

// Branch points of the Galois closure of p over k(T) with ramification data.
// Discriminant roots where the cover is actually unramified are discarded.
std::vector<BranchPointRecord> branch_data(const BiPoly& p, const FieldPtr& k);

// Monic-in-Y model of p(1/S, Y); branch behaviour of p at infinity equals
// its behaviour at S = 0.
BiPoly invert_at_infinity(const BiPoly& p);

// Riemann-Hurwitz genus of the Galois closure: 2g - 2 = |G|(-2 + sum(1 - 1/e)).
long genus_galois(long group_order, const std::vector<long>& e_tuple);

// The five (G, e) patterns with genus-0 Galois closure.
bool genus_zero_shape(const GroupId& g, const std::vector<long>& e_tuple);

bool branch_rationality(const std::vector<BranchPointRecord>& branch, const FieldPtr& k);

// F cap kbar = k; exact for deg_Y <= 4, Unknown for 5..8 except the trivial
// certificates.
TriBool regularity(const BiPoly& p, const FieldPtr& k);

// Order of the geometric Galois group Gal(F kbar / kbar(T)), exact for
// deg_Y <= 4.
long geometric_group_order(const BiPoly& p, const FieldPtr& k);

// Full invariant assembly (group, branch, genus, regularity).
CoverInvariants cover_invariants(const BiPoly& p, const FieldPtr& k);

} // namespace gencover

#endif
