#ifndef GENCOVER_GALOIS_HPP
#define GENCOVER_GALOIS_HPP

#include "gencover/cover.hpp"

namespace gencover {

struct GroupResult {
    GroupId group;
    bool certified = true; // false when identified by cycle-type sampling
};

// Galois group of p over k(T). Exact for deg_Y <= 4 (discriminant square
// test, resolvent cubic, Kappe-Warren for C4/D4); cycle-type sampling with a
// confidence marker for deg_Y 5..8.
GroupResult group_over_function_field(const BiPoly& p, const FieldPtr& k);

// Galois group over k of the splitting field of a separable univariate f
// (possibly reducible); exact for deg <= 4, degree-5 identification is
// sampled and flagged.
GroupResult splitting_group(const KPoly& f, const FieldPtr& k);

// Specialization machinery. t0 must avoid the branch locus and keep
// P(t0, Y) separable.
GroupId group_of_specialization(const BiPoly& p, const NFElem& t0, const FieldPtr& k);

struct SplittingFieldDesc {
    long degree = 1;
    GroupId group;
    std::optional<NFElem> kernel;  // quadratic subextension class (squarefree over Q)
    std::optional<KPoly> defining; // for splitting degree <= 6
};

SplittingFieldDesc specialization_field(const BiPoly& p, const NFElem& t0, const FieldPtr& k);

// Inertia canonical invariant: one class per branch point.
std::vector<InertiaClass> inertia_invariant(const BiPoly& p, const FieldPtr& k);

// Squarefree representative of d modulo squares of k (over Q: squarefree
// integer; over a number field: reduced by rational square factors).
NFElem kernel_class(const NFElem& d, const FieldPtr& k);

// Exact quartic helpers shared with the regularity machinery.
struct DepressedQuartic {
    KPoly P, Q, R; // Z^4 + P Z^2 + Q Z + R, polynomial coefficients in T
};
DepressedQuartic depress_quartic(const BiPoly& p);
// x^3 - P x^2 - 4R x + (4PR - Q^2), the partial-resolvent cubic
BiPoly resolvent_cubic(const DepressedQuartic& d, const FieldPtr& k);
// y^3 + 2P y^2 + (P^2 - 4R) y - Q^2, roots are alpha^2 for quadratic splits
BiPoly pair_resolvent(const DepressedQuartic& d, const FieldPtr& k);

} // namespace gencover

#endif
