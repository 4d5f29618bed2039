#ifndef GENCOVER_CLASSIFY_HPP
#define GENCOVER_CLASSIFY_HPP

#include "gencover/galois.hpp"

namespace gencover {

enum class ObstructionLabel {
    NotParametricOver_K_U_for_ample_K,      // genus >= 1
    NotParametricOver_KVU_for_alg_closed_K, // non-cyclic abelian subgroup
    NotParametricOver_k_U,                  // irrational branch in the rigid shapes
};

const char* obstruction_name(ObstructionLabel l);

struct ObstructionVerdict {
    std::vector<ObstructionLabel> labels;
    std::vector<std::string> witnesses;
    CoverInvariants invariants;
    bool certified = true;
};

struct GenericityVerdict {
    bool generic = false;
    char case_label = 0; // 'a', 'b' or 'c' when generic
    std::vector<std::string> failures;
    CoverInvariants invariants;
    bool certified = true;
};

// The three-way genericity criterion: regular and exactly one of
//   (a) cyclic of even order n, zeta_n in k, r = 2, branch in P^1(k)
//   (b) cyclic of odd order n, 2cos(2pi/n) in k, r = 2
//   (c) dihedral of order 2n, n >= 3 odd, 2cos(2pi/n) in k, r = 3,
//       branch in P^1(k)
GenericityVerdict decide_genericity(const BiPoly& p, const FieldPtr& k);

// Symbolic non-parametricity obstructions; hypothesis-checked only, the base
// changed fields are never constructed.
ObstructionVerdict obstruction_report(const BiPoly& p, const FieldPtr& k);

// Closed form for the named tags; Other raises GroupTooLarge (the order alone
// does not determine the answer).
bool has_noncyclic_abelian(const GroupId& g);

} // namespace gencover

#endif
