#include "gencover/build.hpp"

namespace gencover {

namespace {

BiPoly kummer_family(long n, const FieldPtr& k) {
    std::vector<KPoly> ys((size_t)n + 1);
    ys[0] = KPoly{NFElem(0), NFElem(-1)}; // -T
    ys[(size_t)n] = KPoly::constant(NFElem(1));
    return BiPoly::from_y_coeffs(ys, k);
}

BiPoly shanks_family(const FieldPtr& k) {
    // Y^3 - T Y^2 + (T - 3) Y + 1
    std::vector<KPoly> ys(4);
    ys[0] = KPoly::constant(NFElem(1));
    ys[1] = KPoly{NFElem(-3), NFElem(1)};
    ys[2] = KPoly{NFElem(0), NFElem(-1)};
    ys[3] = KPoly::constant(NFElem(1));
    return BiPoly::from_y_coeffs(ys, k);
}

BiPoly s3_family(const FieldPtr& k) {
    // Y^3 + T Y + T
    std::vector<KPoly> ys(4);
    ys[0] = KPoly{NFElem(0), NFElem(1)};
    ys[1] = KPoly{NFElem(0), NFElem(1)};
    ys[3] = KPoly::constant(NFElem(1));
    return BiPoly::from_y_coeffs(ys, k);
}

} // namespace

BiPoly construct_generic(const GroupId& g, const FieldPtr& k) {
    if (auto cn = g.cyclic_n()) {
        long n = *cn;
        if (n < 2) fail(errc::unsupported, "trivial group");
        if (n % 2 == 0) {
            if (!has_root_of_unity(k, (unsigned)n))
                fail(errc::cyclotomic_obstruction, "zeta_" + std::to_string(n) + " not in k");
            return kummer_family(n, k);
        }
        if (!has_cos_of_root_of_unity(k, (unsigned)n))
            fail(errc::cyclotomic_obstruction, "2cos(2pi/" + std::to_string(n) + ") not in k");
        if (n == 3) return shanks_family(k);
        fail(errc::unsupported, "odd cyclic families beyond n = 3 (Gaussian periods) not implemented");
    }
    if (auto dn = g.dihedral_n()) {
        long n = *dn;
        if (n < 3 || n % 2 == 0)
            fail(errc::cyclotomic_obstruction, "dihedral groups need order 2n with n >= 3 odd");
        if (!has_cos_of_root_of_unity(k, (unsigned)n))
            fail(errc::cyclotomic_obstruction, "2cos(2pi/" + std::to_string(n) + ") not in k");
        if (n == 3) return s3_family(k);
        fail(errc::unsupported, "dihedral families beyond n = 3 (Hashimoto-Miyake) not implemented");
    }
    fail(errc::cyclotomic_obstruction, g.name() + " admits no one-parameter generic polynomial");
}

namespace {

std::optional<KPoly> irreducible_factor_of_degree(const KPoly& f, long d, const FieldPtr& k) {
    for (const auto& [h, m] : factor_over_field(f, k).factors) {
        (void)m;
        if (h.degree() == d) return h;
    }
    return std::nullopt;
}

// quadratic subfield classes of the splitting field, as squarefree kernels
std::vector<NFElem> quadratic_kernels(const KPoly& f, const FieldPtr& k) {
    std::vector<NFElem> out;
    for (const auto& [h, m] : factor_over_field(f, k).factors) {
        (void)m;
        if (h.degree() == 2) {
            NFElem d = kernel_class(discriminant(h), k);
            bool dup = false;
            for (const auto& e : out)
                if (is_square_in_field(d * e, k)) dup = true;
            if (!dup) out.push_back(d);
        }
    }
    return out;
}

bool root_field_contains_root(const KPoly& host, const KPoly& probe, const FieldPtr& k) {
    FieldExtension ext = extend_field(k, host);
    KPoly pm = map_poly(probe, ext.field, ext.base_gen_image);
    auto fac = factor_over_field(pm, ext.field);
    for (const auto& [h, m] : fac.factors) {
        (void)m;
        if (h.degree() == 1) return true;
    }
    return false;
}

} // namespace

bool splitting_fields_isomorphic(const KPoly& f, const KPoly& g, const FieldPtr& k) {
    GroupId gf = splitting_group(f, k).group;
    GroupId gg = splitting_group(g, k).group;
    if (!(gf == gg)) return false;
    long order = gf.order();
    if (order == 1) return true;
    if (order == 2) {
        auto kf = quadratic_kernels(f, k), kg = quadratic_kernels(g, k);
        return !kf.empty() && !kg.empty() && is_square_in_field(kf[0] * kg[0], k);
    }
    if (gf == GroupId::v4()) {
        auto kf = quadratic_kernels(f, k), kg = quadratic_kernels(g, k);
        // compare the sets of quadratic subfields
        for (const auto& d : kf) {
            bool hit = false;
            for (const auto& e : kg)
                if (is_square_in_field(d * e, k)) hit = true;
            if (!hit) return false;
        }
        return true;
    }
    if (gf == GroupId::cyclic(3) || gf == GroupId::symmetric(3)) {
        auto cf = irreducible_factor_of_degree(f, 3, k);
        auto cg = irreducible_factor_of_degree(g, 3, k);
        if (!cf || !cg) return false;
        if (gf == GroupId::symmetric(3)) {
            NFElem df = kernel_class(discriminant(*cf), k);
            NFElem dg = kernel_class(discriminant(*cg), k);
            if (!is_square_in_field(df * dg, k)) return false;
        }
        return root_field_contains_root(*cf, *cg, k);
    }
    if (gf == GroupId::cyclic(4)) {
        auto qf = irreducible_factor_of_degree(f, 4, k);
        auto qg = irreducible_factor_of_degree(g, 4, k);
        if (!qf || !qg) return false;
        return root_field_contains_root(*qf, *qg, k);
    }
    fail(errc::degree_too_large, "isomorphism test supports splitting degree <= 6 plus V4/C4");
}

std::optional<Rat> solve_parameter(const BiPoly& p, const TargetExtension& target, const FieldPtr& k,
                                   const Int& height_bound) {
    if (target.defining.degree() < 1 || target.defining.degree() > 6)
        fail(errc::wrong_degree, "target degree must be 1..6");
    if (!is_irreducible_over_field(target.defining, k) && target.defining.degree() > 1)
        fail(errc::reducible, "target polynomial must be irreducible over k");

    for (const Rat& t0 : rationals_of_height_upto(height_bound)) {
        KPoly spec;
        try {
            NFElem t{t0};
            GroupId gs = group_of_specialization(p, t, k);
            if (!(gs == target.expected_group)) continue;
            spec = p.eval_t(t);
        } catch (const error& e) {
            if (e.code() == errc::branch_point || e.code() == errc::inseparable) continue;
            throw;
        }
        if (splitting_fields_isomorphic(spec, target.defining, k)) return t0;
    }
    return std::nullopt;
}

} // namespace gencover
