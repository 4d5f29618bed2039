#include "gencover/galois.hpp"

#include <algorithm>

// Geometric (over kbar(T)) group identification for deg_Y <= 4: the same
// resolvent decision tree as over k(T), with every "is a square in k(T)"
// replaced by the even-multiplicity test in kbar(T) and every "root in k(T)"
// widened to roots in constant-field extensions. Constant subextensions are
// recognized by an empty branch locus.

namespace gencover {

namespace {

KPoly one_kp() { return KPoly::constant(NFElem(1)); }

bool sq_closure(const KPoly& w, const FieldPtr& F) {
    if (w.is_zero()) return true;
    return rat_func_is_square(w, one_kp(), true, F);
}

bool sq_closure_over_D(const KPoly& w, const KPoly& D, const FieldPtr& F) {
    if (w.is_zero()) return true;
    return sq_closure(w, F) || sq_closure(w * D, F);
}

// divide a monic-in-y BiPoly by (y - root)
BiPoly divide_linear_y(const BiPoly& S, const KPoly& root, const FieldPtr& k) {
    auto cs = S.y_coeffs();
    long n = (long)cs.size() - 1;
    std::vector<KPoly> q((size_t)n);
    KPoly carry;
    for (long j = n; j >= 1; --j) {
        carry = cs[(size_t)j] + carry * root;
        q[(size_t)(j - 1)] = carry;
    }
    // remainder = cs[0] + carry*root must vanish
    if (!(cs[0] + carry * root).is_zero()) fail(errc::internal, "divide_linear_y: nonzero remainder");
    return BiPoly::from_y_coeffs(q, k);
}

// The constant field K' of an irreducible h over k(T) whose root field is a
// constant extension (branch locus empty), together with h's polynomial
// roots over K'.
struct ConstantRoots {
    FieldPtr field;
    NFElem gen_image; // image of k's generator in field
    std::vector<KPoly> roots;
};

std::optional<ConstantRoots> constant_field_roots(const BiPoly& h, const FieldPtr& k) {
    long d = h.deg_y();
    KPoly disc = disc_y(h);
    for (long i = 0; i <= 40; ++i) {
        NFElem t0{Rat(i)};
        if (disc.eval(t0).is_zero()) continue;
        KPoly spec = h.eval_t(t0);
        auto fac = factor_over_field(spec, k);
        if (fac.factors.size() != 1 || fac.factors[0].first.degree() != d) continue;
        FieldExtension ext = extend_field(k, fac.factors[0].first);
        BiPoly hm = map_bipoly(h, ext.field, ext.base_gen_image);
        auto roots = polynomial_roots_in_T(hm);
        if ((long)roots.size() == d) return ConstantRoots{ext.field, ext.base_gen_image, roots};
        // wrong specialization residue; try another t0
    }
    return std::nullopt;
}

// roots of a monic cubic resolvent in kbar(T): 0, 1 or 3, with the single
// rational root returned when the count is 1
struct CubicRootsBar {
    int count = 0;
    std::optional<KPoly> rational_root;
};

CubicRootsBar cubic_roots_over_closure(const BiPoly& rc, const FieldPtr& k) {
    CubicRootsBar out;
    auto roots = polynomial_roots_in_T(rc);
    if (roots.size() == 3) {
        out.count = 3;
        return out;
    }
    if (roots.size() == 1) {
        BiPoly cof = divide_linear_y(rc, roots[0], k);
        // quadratic cofactor splits over kbar(T) iff its discriminant does
        auto cs = cof.y_coeffs();
        KPoly disc = cs[1] * cs[1] - cs[0] * cs[2] * NFElem(4);
        out.count = sq_closure(disc, k) ? 3 : 1;
        out.rational_root = roots[0];
        return out;
    }
    return out;
}

} // namespace

// branch-locus emptiness without the irreducibility precondition
static bool branch_empty_any(const BiPoly& p, const FieldPtr& k) {
    KPoly d = disc_y(p);
    if (d.is_zero()) fail(errc::inseparable, "branch locus of an inseparable polynomial");
    if (d.degree() >= 1) {
        KPoly sf = squarefree_part(d);
        auto fac = factor_over_field(sf, k);
        for (const auto& [orbit, mult] : fac.factors) {
            (void)mult;
            FieldExtension ext = extend_field(k, orbit);
            BiPoly pm = map_bipoly(p, ext.field, ext.base_gen_image);
            long n = pm.deg_y();
            std::vector<KPoly> q((size_t)n + 1);
            KPoly shift{ext.root, NFElem(1)};
            for (long j = 0; j <= n; ++j) q[(size_t)j] = pm.y_coeff(j).compose(shift);
            for (long e : local_place_degrees(q, ext.field))
                if (e > 1) return false;
        }
    }
    BiPoly inv = invert_at_infinity(p);
    std::vector<KPoly> q;
    for (long j = 0; j <= inv.deg_y(); ++j) q.push_back(inv.y_coeff(j));
    for (long e : local_place_degrees(q, k))
        if (e > 1) return false;
    return true;
}

namespace {

bool branch_locus_empty(const BiPoly& p, const FieldPtr& k) { return branch_empty_any(p, k); }

CubicRootsBar cubic_roots_over_closure_full(const BiPoly& rc, const FieldPtr& k) {
    CubicRootsBar out = cubic_roots_over_closure(rc, k);
    if (out.count == 0 && !out.rational_root && branch_empty_any(rc, k)) out.count = 3;
    return out;
}

} // namespace

long geometric_group_order(const BiPoly& p, const FieldPtr& k) {
    long n = p.deg_y();
    if (n < 1 || !p.monic_in_y()) fail(errc::degenerate, "geometric_group_order wants monic-in-Y");
    if (n > 4) {
        // Kummer binomials stay exact: the degree of kbar(T)(c^(1/n)) is
        // n / gcd(n, multiplicities of c)
        bool binomial = true;
        for (long j = 1; j < n; ++j)
            if (!p.y_coeff(j).is_zero()) binomial = false;
        if (!binomial || !has_root_of_unity(k, (unsigned)n))
            fail(errc::degree_too_large, "geometric group is exact only for deg_Y <= 4");
        KPoly c = KPoly() - p.y_coeff(0);
        if (c.is_zero()) fail(errc::degenerate, "Y^n");
        Int g(n);
        auto fac = factor_over_field(c, k);
        for (const auto& [h, m] : fac.factors) {
            (void)h;
            g = gcd(g, Int((long)m));
        }
        return n / (long)g.get_si();
    }
    if (!is_separable_y(p)) fail(errc::inseparable, "inseparable over k(T)");
    if (!is_irreducible_over_kT(p)) fail(errc::reducible, "reducible over k(T)");

    if (branch_empty_any(p, k)) return 1;
    if (n == 1) return 1;
    if (n == 2) return 2;
    if (n == 3) return sq_closure(disc_y(p), k) ? 3 : 6;

    DepressedQuartic d = depress_quartic(p);
    KPoly D = disc_y(p);

    // intransitive case: p splits into two conjugate quadratics over kbar(T)
    {
        BiPoly S = pair_resolvent(d, k);
        std::vector<std::pair<KPoly, std::pair<FieldPtr, NFElem>>> roots; // root + its field
        for (const auto& A : polynomial_roots_in_T(S))
            roots.push_back({A, {k, k ? NFElem::generator(k) : NFElem(0)}});
        if (roots.size() == 1) {
            // quadratic cofactor may still split in a constant extension
            BiPoly cof = divide_linear_y(S, roots[0].first, k);
            auto cs = cof.y_coeffs();
            KPoly dq = cs[1] * cs[1] - cs[0] * cs[2] * NFElem(4);
            if (!dq.is_zero() && sq_closure(dq, k)) {
                auto cr = constant_field_roots(cof, k);
                if (cr)
                    for (const auto& r : cr->roots) roots.push_back({r, {cr->field, cr->gen_image}});
            }
        } else if (roots.empty() && branch_locus_empty(S, k)) {
            auto cr = constant_field_roots(S, k);
            if (cr)
                for (const auto& r : cr->roots) roots.push_back({r, {cr->field, cr->gen_image}});
        }
        for (const auto& [A, Fg] : roots) {
            const FieldPtr& F = Fg.first;
            const NFElem& gi = Fg.second;
            if (A.is_zero()) continue; // biquadratic: handled by the Q = 0 test below
            if (!sq_closure(A, F)) continue;
            // split: C2 or V4 depending on whether both quadratic factors
            // generate the same extension of kbar(T)
            KPoly P = (F == k) ? d.P : map_poly(d.P, F, gi);
            KPoly R = (F == k) ? d.R : map_poly(d.R, F, gi);
            KPoly dd = KPoly() - A * A * NFElem(3) - A * P * NFElem(4) + R * NFElem(16);
            return sq_closure(dd, F) ? 2 : 4;
        }
        if (d.Q.is_zero()) {
            KPoly dq = d.P * d.P - d.R * NFElem(4);
            if (sq_closure(dq, k)) return sq_closure(d.R, k) ? 2 : 4;
        }
    }

    // transitive: usual tree with closure semantics
    BiPoly rc = resolvent_cubic(d, k);
    CubicRootsBar rb = cubic_roots_over_closure_full(rc, k);
    if (rb.count == 3) return 4; // V4
    if (rb.count == 0) return sq_closure(D, k) ? 12 : 24;
    const KPoly& phi = *rb.rational_root;
    bool c4 = sq_closure_over_D(phi - d.P, D, k) && sq_closure_over_D(phi * phi - d.R * NFElem(4), D, k);
    return c4 ? 4 : 8;
}

TriBool regularity(const BiPoly& p, const FieldPtr& k) {
    long n = p.deg_y();
    if (n < 1 || !p.monic_in_y()) fail(errc::degenerate, "regularity wants monic-in-Y");
    if (!is_separable_y(p)) fail(errc::inseparable, "inseparable over k(T)");
    if (!is_irreducible_over_kT(p)) fail(errc::reducible, "reducible over k(T)");
    try {
        long geo = geometric_group_order(p, k);
        long arith = group_over_function_field(p, k).group.order();
        return geo == arith ? TriBool::True : TriBool::False;
    } catch (const error& e) {
        if (e.code() != errc::degree_too_large) throw;
    }
    if (branch_empty_any(p, k)) return TriBool::False;
    return TriBool::Unknown;
}

CoverInvariants cover_invariants(const BiPoly& p, const FieldPtr& k) {
    CoverInvariants inv;
    auto g = group_over_function_field(p, k);
    inv.group = g.group;
    inv.certified = g.certified;
    inv.branch = branch_data(p, k);
    inv.r = (long)inv.branch.size();
    for (const auto& rec : inv.branch) inv.e_tuple.push_back(rec.ram_index);
    std::sort(inv.e_tuple.begin(), inv.e_tuple.end());
    inv.all_branch_in_k = branch_rationality(inv.branch, k);
    bool geo_known = true;
    try {
        inv.geometric_order = geometric_group_order(p, k);
    } catch (const error& e) {
        if (e.code() != errc::degree_too_large) throw;
        geo_known = false;
    }
    if (geo_known) {
        inv.regular = inv.geometric_order == inv.group.order() ? TriBool::True : TriBool::False;
    } else {
        inv.geometric_order = inv.group.order();
        inv.regular = inv.branch.empty() ? TriBool::False : TriBool::Unknown;
    }
    inv.genus = genus_galois(inv.geometric_order, inv.e_tuple);
    return inv;
}

} // namespace gencover
