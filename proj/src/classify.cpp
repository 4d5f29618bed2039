#include "gencover/classify.hpp"

namespace gencover {

const char* obstruction_name(ObstructionLabel l) {
    switch (l) {
        case ObstructionLabel::NotParametricOver_K_U_for_ample_K:
            return "NotParametricOver_K_U_for_ample_K";
        case ObstructionLabel::NotParametricOver_KVU_for_alg_closed_K:
            return "NotParametricOver_KVU_for_alg_closed_K";
        case ObstructionLabel::NotParametricOver_k_U: return "NotParametricOver_k_U";
    }
    return "?";
}

bool has_noncyclic_abelian(const GroupId& g) {
    switch (g.tag) {
        case GroupId::Tag::Cyclic: return false;
        case GroupId::Tag::Dihedral: return g.n % 2 == 0; // V4 inside D_n iff n even
        case GroupId::Tag::V4: return true;
        case GroupId::Tag::A4: return true;
        case GroupId::Tag::S4: return true;
        case GroupId::Tag::A5: return true;
        case GroupId::Tag::Sn: return g.n >= 4;
        case GroupId::Tag::Other:
            fail(errc::group_too_large, "subgroup structure unknown for sampled groups");
    }
    return false;
}

GenericityVerdict decide_genericity(const BiPoly& p, const FieldPtr& k) {
    GenericityVerdict v;
    v.invariants = cover_invariants(p, k);
    const CoverInvariants& inv = v.invariants;
    v.certified = inv.certified && inv.regular != TriBool::Unknown;

    auto fails = [&](const std::string& s) { v.failures.push_back(s); };

    bool regular_ok = inv.regular == TriBool::True;
    if (inv.regular == TriBool::False) fails("not k-regular (constant subextension)");
    if (inv.regular == TriBool::Unknown) fails("regularity unknown at this degree");

    const GroupId& g = inv.group;
    bool case_a = false, case_b = false, case_c = false;

    if (auto cn = g.cyclic_n()) {
        long n = *cn;
        if (n % 2 == 0) {
            bool zeta = has_root_of_unity(k, (unsigned)n);
            bool r2 = inv.r == 2;
            case_a = zeta && r2 && inv.all_branch_in_k;
            if (!zeta) fails("case a: zeta_" + std::to_string(n) + " not in k");
            if (!r2) fails("case a: r = " + std::to_string(inv.r) + " (needs 2)");
            if (!inv.all_branch_in_k) fails("case a: branch points not all in P^1(k)");
        } else {
            bool cosn = has_cos_of_root_of_unity(k, (unsigned)n);
            bool r2 = inv.r == 2;
            case_b = cosn && r2;
            if (!cosn) fails("case b: 2cos(2pi/" + std::to_string(n) + ") not in k");
            if (!r2) fails("case b: r = " + std::to_string(inv.r) + " (needs 2)");
        }
    } else {
        fails("group " + g.name() + " is not cyclic");
    }

    if (auto dn = g.dihedral_n()) {
        long n = *dn;
        if (n >= 3 && n % 2 == 1) {
            bool cosn = has_cos_of_root_of_unity(k, (unsigned)n);
            bool r3 = inv.r == 3;
            case_c = cosn && r3 && inv.all_branch_in_k;
            if (!cosn) fails("case c: 2cos(2pi/" + std::to_string(n) + ") not in k");
            if (!r3) fails("case c: r = " + std::to_string(inv.r) + " (needs 3)");
            if (!inv.all_branch_in_k) fails("case c: branch points not all in P^1(k)");
        } else {
            fails("case c: dihedral order 2n needs n >= 3 odd (n = " + std::to_string(n) + ")");
        }
    } else if (!g.cyclic_n()) {
        fails("group " + g.name() + " is not dihedral of order 2n with n >= 3 odd");
    }

    v.generic = regular_ok && (case_a || case_b || case_c);
    if (v.generic) {
        v.case_label = case_a ? 'a' : case_b ? 'b' : 'c';
        v.failures.clear();
    }
    return v;
}

ObstructionVerdict obstruction_report(const BiPoly& p, const FieldPtr& k) {
    ObstructionVerdict v;
    v.invariants = cover_invariants(p, k);
    const CoverInvariants& inv = v.invariants;
    v.certified = inv.certified;

    if (inv.genus >= 1) {
        v.labels.push_back(ObstructionLabel::NotParametricOver_K_U_for_ample_K);
        v.witnesses.push_back("genus " + std::to_string(inv.genus) + " >= 1");
    }
    bool nca = false;
    if (inv.group.tag == GroupId::Tag::Other) {
        v.certified = false; // cannot decide the subgroup condition
    } else {
        nca = has_noncyclic_abelian(inv.group);
    }
    if (nca) {
        v.labels.push_back(ObstructionLabel::NotParametricOver_KVU_for_alg_closed_K);
        v.witnesses.push_back(inv.group.name() + " has a non-cyclic abelian subgroup");
    }
    if (!inv.all_branch_in_k) {
        if (auto cn = inv.group.cyclic_n(); cn && *cn % 2 == 0 && inv.r == 2) {
            v.labels.push_back(ObstructionLabel::NotParametricOver_k_U);
            v.witnesses.push_back("cyclic of even order, r = 2, branch not in P^1(k)");
        } else if (auto dn = inv.group.dihedral_n(); dn && *dn >= 3 && *dn % 2 == 1 && inv.r == 3) {
            v.labels.push_back(ObstructionLabel::NotParametricOver_k_U);
            v.witnesses.push_back("dihedral of order 2n, n odd, r = 3, branch not in P^1(k)");
        }
    }
    return v;
}

} // namespace gencover
