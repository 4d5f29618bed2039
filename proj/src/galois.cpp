#include "gencover/galois.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gencover {

long GroupId::order() const {
    switch (tag) {
        case Tag::Cyclic: return n;
        case Tag::Dihedral: return 2 * n;
        case Tag::V4: return 4;
        case Tag::A4: return 12;
        case Tag::S4: return 24;
        case Tag::A5: return 60;
        case Tag::Sn: {
            long f = 1;
            for (long i = 2; i <= n; ++i) f *= i;
            return f;
        }
        case Tag::Other: return n;
    }
    return 0;
}

std::string GroupId::name() const {
    switch (tag) {
        case Tag::Cyclic: return "C" + std::to_string(n);
        case Tag::Dihedral: return "D" + std::to_string(n);
        case Tag::V4: return "V4";
        case Tag::A4: return "A4";
        case Tag::S4: return "S4";
        case Tag::A5: return "A5";
        case Tag::Sn: return "S" + std::to_string(n);
        case Tag::Other: return "G" + std::to_string(n);
    }
    return "?";
}

namespace {

bool sq_kT(const KPoly& w, const FieldPtr& k) {
    return rat_func_is_square(w, KPoly::constant(NFElem(1)), false, k);
}

bool sq_kT_over_D(const KPoly& w, const KPoly& D, const FieldPtr& k) {
    if (w.is_zero()) return true;
    return sq_kT(w, k) || sq_kT(w * D, k);
}

} // namespace

DepressedQuartic depress_quartic(const BiPoly& p) {
    if (p.deg_y() != 4 || !p.monic_in_y()) fail(errc::wrong_degree, "depress_quartic wants a monic quartic");
    auto cs = p.y_coeffs();
    KPoly s = KPoly() - cs[3] / NFElem(Rat(4));
    auto d = shift_y_coeffs(cs, s);
    return DepressedQuartic{d[2], d[1], d[0]};
}

BiPoly resolvent_cubic(const DepressedQuartic& d, const FieldPtr& k) {
    std::vector<KPoly> ys(4);
    ys[3] = KPoly::constant(NFElem(1));
    ys[2] = KPoly() - d.P;
    ys[1] = KPoly() - d.R * NFElem(4);
    ys[0] = d.P * d.R * NFElem(4) - d.Q * d.Q;
    return BiPoly::from_y_coeffs(ys, k);
}

BiPoly pair_resolvent(const DepressedQuartic& d, const FieldPtr& k) {
    std::vector<KPoly> ys(4);
    ys[3] = KPoly::constant(NFElem(1));
    ys[2] = d.P * NFElem(2);
    ys[1] = d.P * d.P - d.R * NFElem(4);
    ys[0] = KPoly() - d.Q * d.Q;
    return BiPoly::from_y_coeffs(ys, k);
}

namespace {

// --- quartic group over k(T), arithmetic semantics --------------------

GroupId quartic_group_kT(const BiPoly& p, const FieldPtr& k) {
    DepressedQuartic d = depress_quartic(p);
    KPoly D = disc_y(p);
    BiPoly rc = resolvent_cubic(d, k);
    auto roots = polynomial_roots_in_T(rc);
    if (roots.size() == 3) return GroupId::v4();
    if (roots.size() == 0) return sq_kT(D, k) ? GroupId::a4() : GroupId::s4();
    if (roots.size() != 1) fail(errc::internal, "resolvent cubic root count");
    const KPoly& phi = roots[0];
    // Kappe-Warren: C4 iff both quadratics split over k(T)(sqrt(D))
    bool c4 = sq_kT_over_D(phi - d.P, D, k) && sq_kT_over_D(phi * phi - d.R * NFElem(4), D, k);
    return c4 ? GroupId::cyclic(4) : GroupId::dihedral(4);
}

// --- degree 5..8 sampling ---------------------------------------------

constexpr unsigned long kSamplePrimes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                                           151, 157, 163, 167, 173, 179, 181, 191, 193, 197,
                                           199, 211, 223, 227, 229};

GroupResult sampled_group_kT(const BiPoly& p, const FieldPtr& k) {
    if (k) fail(errc::unsupported, "sampled identification needs base field Q");
    long n = p.deg_y();
    KPoly d = disc_y(p);
    bool disc_sq = sq_kT(d, k);

    std::set<std::vector<long>> types;
    long found = 0;
    for (long i = 1; i <= 200 && found < 40; ++i) {
        NFElem t0{Rat(i)};
        if (d.eval(t0).is_zero()) continue;
        ++found;
        QPoly f = rational_poly(p.eval_t(t0));
        for (unsigned long pr : kSamplePrimes) {
            auto degs = factor_degrees_mod_p(f, pr);
            if (!degs.empty()) types.insert(degs);
        }
    }
    auto has = [&](std::initializer_list<long> t) { return types.count(std::vector<long>(t)) > 0; };

    if (n == 5) {
        if (disc_sq) {
            if (has({1, 1, 3}) || has({2, 3})) return {GroupId::a5(), false};
            if (has({1, 2, 2})) return {GroupId::dihedral(5), false};
            return {GroupId::cyclic(5), false};
        }
        if (has({1, 1, 1, 2}) || has({2, 3}) || has({1, 1, 3})) return {GroupId::symmetric(5), false};
        return {GroupId::other(20), false}; // Frobenius group F20
    }
    // 6..8: symmetric/alternating detection, otherwise an order lower bound
    bool has_ncycle = has({n});
    bool has_n1 = types.count([&] {
        std::vector<long> v{1, n - 1};
        return v;
    }()) > 0;
    if (!disc_sq && has_ncycle && has_n1) return {GroupId::symmetric(n), false};
    long lb = 1;
    for (const auto& t : types) {
        Int l = 1;
        for (long c : t) l = lcm(l, Int(c));
        lb = std::max(lb, (long)l.get_si());
    }
    return {GroupId::other(lb), false};
}

} // namespace

GroupResult group_over_function_field(const BiPoly& p, const FieldPtr& k) {
    long n = p.deg_y();
    if (n < 1 || !p.monic_in_y()) fail(errc::degenerate, "group_over_function_field wants monic-in-Y");
    if (n > 8) fail(errc::degree_too_large, "deg_Y <= 8");
    if (!is_separable_y(p)) fail(errc::inseparable, "inseparable over k(T)");
    if (!is_irreducible_over_kT(p)) fail(errc::reducible, "reducible over k(T)");
    if (n == 1) return {GroupId::cyclic(1), true};
    if (n == 2) return {GroupId::cyclic(2), true};
    if (n == 3) return {sq_kT(disc_y(p), k) ? GroupId::cyclic(3) : GroupId::symmetric(3), true};
    if (n == 4) return {quartic_group_kT(p, k), true};
    // Kummer binomials stay exact at any degree: Y^n - c(T) with zeta_n in k
    // has splitting field k(T)(c^(1/n)), cyclic of order n
    {
        bool binomial = true;
        for (long j = 1; j < n; ++j)
            if (!p.y_coeff(j).is_zero()) binomial = false;
        if (binomial && has_root_of_unity(k, (unsigned)n)) return {GroupId::cyclic(n), true};
    }
    return sampled_group_kT(p, k);
}

namespace {

// --- splitting groups of univariate polynomials ------------------------

GroupId quartic_group_k(const KPoly& f, const FieldPtr& k) {
    // same tree as over k(T), with constants
    NFElem a3 = f.coeff(3);
    KPoly g = f.compose(KPoly{NFElem(0) - a3 / NFElem(4), NFElem(1)});
    NFElem P = g.coeff(2), Q = g.coeff(1), R = g.coeff(0);
    NFElem D = discriminant(f);
    KPoly rc{P * R * NFElem(4) - Q * Q, NFElem(0) - R * NFElem(4), NFElem(0) - P, NFElem(1)};
    auto roots = roots_in_field(rc, k);
    if (roots.size() == 3) return GroupId::v4();
    auto sq = [&](const NFElem& w) { return is_square_in_field(w, k); };
    if (roots.size() == 0) return sq(D) ? GroupId::a4() : GroupId::s4();
    const NFElem& phi = roots[0];
    auto sqD = [&](const NFElem& w) { return w.is_zero() || sq(w) || sq(w * D); };
    bool c4 = sqD(phi - P) && sqD(phi * phi - R * NFElem(4));
    return c4 ? GroupId::cyclic(4) : GroupId::dihedral(4);
}

GroupResult quintic_group_k(const KPoly& f, const FieldPtr& k) {
    if (k) fail(errc::degree_too_large, "quintic identification needs base field Q");
    QPoly fq = rational_poly(f);
    bool disc_sq = is_square_in_field(NFElem(discriminant(fq)), nullptr);
    std::set<std::vector<long>> types;
    for (unsigned long pr : kSamplePrimes) {
        auto degs = factor_degrees_mod_p(fq, pr);
        if (!degs.empty()) types.insert(degs);
    }
    auto has = [&](std::initializer_list<long> t) { return types.count(std::vector<long>(t)) > 0; };
    if (disc_sq) {
        if (has({1, 1, 3}) || has({2, 3})) return {GroupId::a5(), false};
        if (has({1, 2, 2})) return {GroupId::dihedral(5), false};
        return {GroupId::cyclic(5), false};
    }
    if (has({1, 1, 1, 2}) || has({2, 3}) || has({1, 1, 3})) return {GroupId::symmetric(5), false};
    return {GroupId::other(20), false};
}

NFElem quad_kernel(const KPoly& quad, const FieldPtr& k) {
    // squarefree class of the discriminant of a quadratic factor
    NFElem d = discriminant(quad);
    return kernel_class(d, k);
}

} // namespace

NFElem kernel_class(const NFElem& d, const FieldPtr& k) {
    (void)k;
    if (d.is_rational()) {
        Rat q = d.as_rat();
        if (q == 0) return NFElem(0);
        return NFElem(Rat(squarefree_part(num(q) * den(q))));
    }
    // clear denominators and strip rational square content
    Int l = 1;
    for (const auto& c : d.rep()) l = lcm(l, den(c));
    NFElem e = d * NFElem(Rat(l * l));
    Int g = 0;
    for (const auto& c : e.rep()) g = gcd(g, num(c));
    if (g == 0) return e;
    Int m = 1;
    for (const auto& [pr, ex] : factor_integer(g))
        if (ex >= 2) m *= pow_int(pr, ex / 2);
    return e / NFElem(Rat(m * m));
}

GroupResult splitting_group(const KPoly& f, const FieldPtr& k) {
    if (f.degree() < 1) fail(errc::wrong_degree, "splitting_group needs degree >= 1");
    if (!is_separable(f)) fail(errc::inseparable, "splitting_group needs separable input");
    auto fac = factor_over_field(f, k);
    std::vector<KPoly> quads, cubics, quartics, quintics;
    for (const auto& [g, m] : fac.factors) {
        (void)m;
        if (g.degree() == 2) quads.push_back(g);
        if (g.degree() == 3) cubics.push_back(g);
        if (g.degree() == 4) quartics.push_back(g);
        if (g.degree() == 5) quintics.push_back(g);
        if (g.degree() > 5) fail(errc::degree_too_large, "splitting fields only up to degree 24");
    }

    // independent quadratic kernel classes
    std::vector<NFElem> kernels;
    for (const auto& q : quads) {
        NFElem d = quad_kernel(q, k);
        bool indep = true;
        for (const auto& e : kernels)
            if (is_square_in_field(d * e, k)) {
                indep = false;
                break;
            }
        if (indep) kernels.push_back(d);
    }

    if (cubics.empty() && quartics.empty() && quintics.empty()) {
        size_t rank = kernels.size();
        if (rank == 0) return {GroupId::cyclic(1), true};
        if (rank == 1) return {GroupId::cyclic(2), true};
        if (rank == 2) return {GroupId::v4(), true};
        return {GroupId::other(1L << rank), true};
    }

    if (cubics.size() == 1 && quartics.empty() && quintics.empty()) {
        const KPoly& c = cubics[0];
        NFElem dc = discriminant(c);
        bool cyc = is_square_in_field(dc, k);
        // absorb quadratic kernels lying inside the cubic closure
        size_t extra = 0;
        for (const auto& d : kernels) {
            if (!cyc && is_square_in_field(d * kernel_class(dc, k), k)) continue;
            ++extra;
        }
        if (extra == 0) return {cyc ? GroupId::cyclic(3) : GroupId::symmetric(3), true};
        if (extra == 1) return {cyc ? GroupId::cyclic(6) : GroupId::dihedral(6), true};
        long order = (cyc ? 3 : 6) * (1L << extra);
        return {GroupId::other(order), true};
    }

    if (cubics.size() == 2 && quads.empty() && quartics.empty() && quintics.empty()) {
        const KPoly &c1 = cubics[0], &c2 = cubics[1];
        bool cyc1 = is_square_in_field(discriminant(c1), k);
        bool cyc2 = is_square_in_field(discriminant(c2), k);
        if (cyc1 && cyc2) {
            // same splitting field iff one has a root in the other's field
            if (!k && c1.degree() * 3 <= NumberField::kInternalDegreeCap) {
                FieldPtr K2 = NumberField::create_internal(rational_poly(c2));
                bool same = !roots_in_field(lift_to_field(rational_poly(c1)), K2).empty();
                return {same ? GroupId::cyclic(3) : GroupId::other(9), true};
            }
        }
        fail(errc::degree_too_large, "compositum of two cubics not supported here");
    }

    if (quartics.size() == 1 && cubics.empty() && quintics.empty() && quads.empty())
        return {quartic_group_k(quartics[0], k), true};

    if (quintics.size() == 1 && quads.empty() && cubics.empty() && quartics.empty())
        return quintic_group_k(quintics[0], k);

    fail(errc::degree_too_large, "splitting fields only up to degree 24");
}

namespace {

// throws for branch points / inseparable specializations
void check_specialization_point(const BiPoly& p, const NFElem& t0, const FieldPtr& k) {
    KPoly d = disc_y(p);
    if (!d.eval(t0).is_zero()) return; // monic: disc(t0) = disc of the specialization
    // singular fiber; ramified means branch point, otherwise the
    // specialized polynomial itself is inseparable
    long n = p.deg_y();
    std::vector<KPoly> q((size_t)n + 1);
    KPoly shift{t0, NFElem(1)};
    for (long j = 0; j <= n; ++j) q[(size_t)j] = p.y_coeff(j).compose(shift);
    for (long e : local_place_degrees(q, k))
        if (e > 1) fail(errc::branch_point, "t0 is a branch point");
    fail(errc::inseparable, "specialized polynomial is inseparable");
}

} // namespace

GroupId group_of_specialization(const BiPoly& p, const NFElem& t0, const FieldPtr& k) {
    if (!p.monic_in_y()) fail(errc::degenerate, "group_of_specialization wants monic-in-Y");
    check_specialization_point(p, t0, k);
    return splitting_group(p.eval_t(t0), k).group;
}

SplittingFieldDesc specialization_field(const BiPoly& p, const NFElem& t0, const FieldPtr& k) {
    check_specialization_point(p, t0, k);
    KPoly f = p.eval_t(t0);
    GroupId g = splitting_group(f, k).group;
    SplittingFieldDesc out;
    out.group = g;
    out.degree = g.order();
    if (out.degree > 24) fail(errc::degree_too_large, "splitting degree > 24");

    auto fac = factor_over_field(f, k);
    if (g.order() == 1) {
        out.defining = KPoly::var();
        return out;
    }
    if (g == GroupId::cyclic(2)) {
        for (const auto& [h, m] : fac.factors) {
            (void)m;
            if (h.degree() == 2) {
                out.kernel = quad_kernel(h, k);
                out.defining = KPoly{NFElem(0) - *out.kernel, NFElem(0), NFElem(1)};
                return out;
            }
        }
        fail(errc::internal, "C2 splitting without a quadratic factor");
    }
    if (g == GroupId::v4()) {
        std::vector<NFElem> ds;
        for (const auto& [h, m] : fac.factors) {
            (void)m;
            if (h.degree() == 2) ds.push_back(quad_kernel(h, k));
        }
        if (ds.size() >= 2) {
            NFElem d1 = ds[0], d2 = ds[1];
            // min poly of sqrt(d1) + sqrt(d2)
            NFElem two(2), zero(0);
            out.defining = KPoly{(d1 - d2) * (d1 - d2), zero, NFElem(0) - two * (d1 + d2), zero, NFElem(1)};
        }
        return out;
    }
    if (g == GroupId::cyclic(3) || g == GroupId::cyclic(4)) {
        for (const auto& [h, m] : fac.factors) {
            (void)m;
            if (h.degree() == out.degree) {
                out.defining = h;
                return out;
            }
        }
        return out;
    }
    if (g == GroupId::symmetric(3)) {
        // primitive element root + sqrt(disc): Res_y(cubic(y), (x - y)^2 - D)
        for (const auto& [h, m] : fac.factors) {
            (void)m;
            if (h.degree() != 3) continue;
            NFElem D = discriminant(h);
            out.kernel = kernel_class(D, k);
            std::vector<std::pair<NFElem, NFElem>> pts;
            for (long i = 0; i <= 6; ++i) {
                NFElem x0{Rat(i)};
                KPoly quad{x0 * x0 - D, NFElem(0) - NFElem(2) * x0, NFElem(1)};
                pts.emplace_back(x0, resultant(h, quad));
            }
            KPoly sextic = interpolate_t(pts);
            if (is_separable(sextic)) out.defining = sextic.monic();
            return out;
        }
    }
    return out;
}

std::vector<InertiaClass> inertia_invariant(const BiPoly& p, const FieldPtr& k) {
    auto g = group_over_function_field(p, k);
    if (g.group.order() > 24) fail(errc::group_too_large, "inertia labels only for |G| <= 24");
    std::vector<InertiaClass> out;
    for (const auto& rec : branch_data(p, k)) out.push_back(rec.inertia);
    return out;
}

} // namespace gencover
