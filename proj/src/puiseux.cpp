#include "gencover/cover.hpp"

#include <algorithm>

namespace gencover {

namespace {

// q is a vector of Z-coefficients, each a polynomial in s over M.

long s_valuation(const KPoly& c) { return c.is_zero() ? -1 : c.valuation(); }

KPoly divide_by_s_power(const KPoly& c, long v) {
    if (c.is_zero()) return c;
    if (c.valuation() < v) fail(errc::internal, "puiseux: bad s-power division");
    std::vector<NFElem> cs(c.coeffs().begin() + v, c.coeffs().end());
    return KPoly(std::move(cs));
}

KPoly stretch_s(const KPoly& c, long b) {
    if (c.is_zero()) return c;
    std::vector<NFElem> cs((size_t)(c.degree() * b) + 1, NFElem(0));
    for (size_t i = 0; i < c.coeffs().size(); ++i) cs[i * (size_t)b] = c.coeff(i);
    return KPoly(std::move(cs));
}

// extend M by a root of an arbitrary nonconstant g (factors first)
FieldExtension extend_by_any_root(const FieldPtr& M, const KPoly& g) {
    auto fac = factor_over_field(g, M);
    for (const auto& [h, mult] : fac.factors) {
        (void)mult;
        if (h.degree() >= 1) return extend_field(M, h);
    }
    fail(errc::internal, "extend_by_any_root: no factor");
}

struct Hull {
    // vertices of the lower Newton hull from (x0, y0) leftmost to (m, 0)
    std::vector<std::pair<long, long>> pts;
};

// lower convex hull of (x, v_x) for x in [0, m], decreasing to (m, 0)
Hull lower_hull(const std::vector<KPoly>& q, long m) {
    std::vector<std::pair<long, long>> pts;
    for (long x = 0; x <= m; ++x) {
        long v = s_valuation(q[(size_t)x]);
        if (v >= 0) pts.emplace_back(x, v);
    }
    Hull h;
    for (auto& p : pts) {
        while (h.pts.size() >= 2) {
            auto& a = h.pts[h.pts.size() - 2];
            auto& b = h.pts[h.pts.size() - 1];
            // drop b if it lies above segment a-p
            if ((Int(b.second - a.second) * Int(p.first - a.first)) >=
                (Int(p.second - a.second) * Int(b.first - a.first)))
                h.pts.pop_back();
            else
                break;
        }
        h.pts.push_back(p);
    }
    return h;
}

std::vector<long> places_of_vanishing_roots(std::vector<KPoly> q, FieldPtr M, int depth);

// Analyze all roots of monic q at s = 0: split by the residual roots of
// q(0, Z) and recurse on the vanishing parts.
std::vector<long> places_all(const std::vector<KPoly>& q, const FieldPtr& M, int depth) {
    if (depth > 32) fail(errc::precision_exceeded, "puiseux recursion cap");
    std::vector<long> out;
    long n = (long)q.size() - 1;
    if (n <= 0) return out;

    // residual polynomial q(0, Z) over M
    std::vector<NFElem> r0((size_t)n + 1, NFElem(0));
    for (long x = 0; x <= n; ++x) {
        const KPoly& c = q[(size_t)x];
        if (!c.is_zero() && c.valuation() == 0) r0[(size_t)x] = c.coeff(0);
    }
    KPoly res(std::move(r0));
    if (res.is_zero()) fail(errc::internal, "puiseux: residual vanished for monic input");

    long handled = 0;
    auto fac = factor_over_field(res, M);
    for (const auto& [h, mult] : fac.factors) {
        if (mult == 1) {
            // simple residual roots lift unramified
            for (long i = 0; i < h.degree(); ++i) out.push_back(1);
            handled += h.degree();
            continue;
        }
        // shift to a root of h and analyze the vanishing branches
        FieldExtension ext = extend_field(M, h);
        std::vector<KPoly> qm;
        qm.reserve(q.size());
        for (const auto& c : q) qm.push_back(map_poly(c, ext.field, ext.base_gen_image));
        // Z -> gamma + Z
        std::vector<KPoly> qs((size_t)n + 1);
        for (long x = 0; x <= n; ++x) {
            // contribution of qm[x] * (gamma + Z)^x
            KPoly gpow = KPoly::constant(NFElem(1));
            for (long i = x; i >= 0; --i) {
                Int bin;
                mpz_bin_uiui(bin.get_mpz_t(), (unsigned long)x, (unsigned long)i);
                qs[(size_t)i] = qs[(size_t)i] + qm[(size_t)x] * (NFElem(Rat(bin)) * gpow);
                gpow = gpow * KPoly::constant(ext.root);
            }
        }
        auto sub = places_of_vanishing_roots(std::move(qs), ext.field, depth + 1);
        long subtotal = 0;
        for (long e : sub) subtotal += e;
        if (subtotal != (long)mult) fail(errc::internal, "puiseux: vanishing root count mismatch");
        for (long i = 0; i < h.degree(); ++i) out.insert(out.end(), sub.begin(), sub.end());
        handled += h.degree() * (long)mult;
    }
    if (handled != n) fail(errc::internal, "puiseux: residual degree mismatch");
    return out;
}

// q(0, 0) = 0; returns the s-degrees of the local factors whose roots tend
// to 0. Total equals the multiplicity of Z = 0 in q(0, Z).
std::vector<long> places_of_vanishing_roots(std::vector<KPoly> q, FieldPtr M, int depth) {
    if (depth > 32) fail(errc::precision_exceeded, "puiseux recursion cap");
    std::vector<long> out;

    // exact root Z = 0
    while (!q.empty() && q[0].is_zero()) {
        out.push_back(1);
        q.erase(q.begin());
    }
    long n = (long)q.size() - 1;
    if (n <= 0) return out;

    // multiplicity of Z = 0 in q(0, Z)
    long m = -1;
    for (long x = 0; x <= n; ++x) {
        if (!q[(size_t)x].is_zero() && q[(size_t)x].valuation() == 0) {
            m = x;
            break;
        }
    }
    if (m < 0) fail(errc::internal, "puiseux: no unit coefficient");
    if (m == 0) return out; // no vanishing roots left

    Hull hull = lower_hull(q, m);
    if (hull.pts.size() < 2) fail(errc::internal, "puiseux: degenerate hull");

    for (size_t si = 0; si + 1 < hull.pts.size(); ++si) {
        auto [x0, y0] = hull.pts[si];
        auto [x1, y1] = hull.pts[si + 1];
        long len = x1 - x0;
        long rise = y0 - y1;
        if (rise <= 0) fail(errc::internal, "puiseux: non-descending segment");
        long g = (long)mpz_class(gcd(Int(rise), Int(len))).get_si();
        long a = rise / g, b = len / g;

        // characteristic polynomial of the segment
        std::vector<NFElem> phi((size_t)(len / b) + 1, NFElem(0));
        for (long j = 0; j * b <= len; ++j) {
            long x = x0 + j * b;
            long want = y0 - a * j;
            const KPoly& c = q[(size_t)x];
            if (!c.is_zero() && c.valuation() <= want && (long)c.coeffs().size() > want)
                phi[(size_t)j] = c.coeff((size_t)want);
        }
        KPoly phip(std::move(phi));
        if (phip.degree() != len / b) fail(errc::internal, "puiseux: char poly degree");

        auto fac = factor_over_field(phip, M);
        for (const auto& [psi, mult] : fac.factors) {
            if (mult == 1) {
                for (long i = 0; i < psi.degree(); ++i) out.push_back(b);
                continue;
            }
            // refine: adjoin A (root of psi) and eta with eta^b = A, then
            // substitute s = sigma^b, Z = sigma^a * eta * (1 + W)
            FieldExtension extA = extend_field(M, psi);
            FieldPtr M2 = extA.field;
            NFElem genimg = extA.base_gen_image;
            NFElem A = extA.root;
            NFElem eta = A;
            if (b > 1) {
                std::vector<NFElem> rc((size_t)b + 1, NFElem(0));
                rc[0] = -A;
                rc[(size_t)b] = NFElem(1);
                FieldExtension extB = extend_by_any_root(M2, KPoly(std::move(rc)));
                // rebase images through the second extension
                genimg = map_elem(genimg, extB.field, extB.base_gen_image);
                A = map_elem(A, extB.field, extB.base_gen_image);
                M2 = extB.field;
                eta = extB.root;
            }
            long v = b * y0 + a * x0;
            std::vector<KPoly> q2((size_t)n + 1);
            // q(sigma^b, sigma^a * eta * (1 + W)) / sigma^v, W-coefficients
            // via binomial expansion of (1 + W)^x
            std::vector<KPoly> qm;
            qm.reserve(q.size());
            for (const auto& c : q) qm.push_back(map_poly(c, M2, genimg));
            for (long x = 0; x <= n; ++x) {
                if (qm[(size_t)x].is_zero()) continue;
                KPoly cs = stretch_s(qm[(size_t)x], b); // c(sigma^b)
                // multiply by sigma^(a*x) * eta^x, divide totally by sigma^v later
                NFElem etax(1);
                for (long i = 0; i < x; ++i) etax = etax * eta;
                long sh = a * x - v; // net sigma shift after dividing
                for (long i = 0; i <= x; ++i) {
                    Int bin;
                    mpz_bin_uiui(bin.get_mpz_t(), (unsigned long)x, (unsigned long)i);
                    KPoly term = cs * (etax * NFElem(Rat(bin)));
                    if (sh >= 0) {
                        term = term * KPoly::monomial(NFElem(1), (size_t)sh);
                    } else {
                        term = divide_by_s_power(term, -sh);
                    }
                    q2[(size_t)i] = q2[(size_t)i] + term;
                }
            }
            auto sub = places_of_vanishing_roots(std::move(q2), M2, depth + 1);
            long subtotal = 0;
            for (long e : sub) subtotal += e;
            if (subtotal != (long)mult) fail(errc::internal, "puiseux: refinement count mismatch");
            for (long i = 0; i < psi.degree(); ++i)
                for (long e : sub) out.push_back(b * e);
        }
    }

    long total = 0;
    for (long e : out) total += e;
    if (total != m) fail(errc::internal, "puiseux: segment place total mismatch");
    return out;
}

} // namespace

std::vector<long> local_place_degrees(const std::vector<KPoly>& q, const FieldPtr& M) {
    if (q.empty()) return {};
    if (!(q.back() == KPoly::constant(NFElem(1))))
        fail(errc::degenerate, "local_place_degrees expects a monic model");
    auto out = places_all(q, M, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gencover
