#include "gencover/cover.hpp"

#include <algorithm>

namespace gencover {

namespace {

struct IBox {
    Rat lo, hi;
};

IBox iadd(const IBox& a, const IBox& b) { return {a.lo + b.lo, a.hi + b.hi}; }

IBox imul(const IBox& a, const IBox& b) {
    Rat v1 = a.lo * b.lo, v2 = a.lo * b.hi, v3 = a.hi * b.lo, v4 = a.hi * b.hi;
    Rat lo = std::min(std::min(v1, v2), std::min(v3, v4));
    Rat hi = std::max(std::max(v1, v2), std::max(v3, v4));
    return {lo, hi};
}

// interval evaluation of the representation polynomial at the field's
// embedding rectangle; loose but correct
Box embed_box(const NFElem& e) {
    if (e.is_rational()) return Box::point(e.as_rat());
    const Box& g = e.field()->embedding();
    IBox re{Rat(0), Rat(0)}, im{Rat(0), Rat(0)};
    IBox gre{g.re_lo, g.re_hi}, gim{g.im_lo, g.im_hi};
    for (size_t i = e.rep().size(); i-- > 0;) {
        IBox nre = iadd(imul(re, gre), imul(IBox{-Rat(1), -Rat(1)}, imul(im, gim)));
        IBox nim = iadd(imul(re, gim), imul(im, gre));
        Rat c = e.rep()[i];
        re = iadd(nre, IBox{c, c});
        im = nim;
    }
    return Box{re.lo, re.hi, im.lo, im.hi};
}

} // namespace

AlgPoint AlgPoint::from_value(const NFElem& v) {
    AlgPoint p;
    p.rational = true;
    p.value = v;
    p.box = embed_box(v);
    return p;
}

BiPoly invert_at_infinity(const BiPoly& p) {
    long n = p.deg_y();
    if (n < 1 || !p.monic_in_y()) fail(errc::degenerate, "invert_at_infinity wants monic-in-Y");
    auto cs = p.y_coeffs();
    long m = 0;
    for (long j = 0; j < n; ++j) {
        if (cs[(size_t)j].is_zero()) continue;
        long d = cs[(size_t)j].degree();
        m = std::max(m, (d + (n - j) - 1) / (n - j));
    }
    std::vector<KPoly> out((size_t)n + 1);
    out[(size_t)n] = KPoly::constant(NFElem(1));
    for (long j = 0; j < n; ++j) {
        if (cs[(size_t)j].is_zero()) continue;
        long d = cs[(size_t)j].degree();
        long sh = m * (n - j) - d;
        out[(size_t)j] = cs[(size_t)j].reversed() * KPoly::monomial(NFElem(1), (size_t)sh);
    }
    return BiPoly::from_y_coeffs(out, p.field());
}

namespace {

// p(theta + s, Z) over the flattened orbit field
std::vector<KPoly> localize_at(const BiPoly& p, const FieldPtr& M, const NFElem& gen_image,
                               const NFElem& theta) {
    long n = p.deg_y();
    std::vector<KPoly> q((size_t)n + 1);
    KPoly shift{theta, NFElem(1)}; // theta + s
    for (long j = 0; j <= n; ++j) {
        KPoly c = map_poly(p.y_coeff(j), M, gen_image);
        q[(size_t)j] = c.compose(shift);
    }
    return q;
}

long lcm_of(const std::vector<long>& v) {
    Int l = 1;
    for (long x : v) l = lcm(l, Int(x));
    return (long)l.get_si();
}

InertiaClass inertia_from_degrees(const std::vector<long>& degs) {
    InertiaClass c;
    c.cycle_type = degs;
    c.order = lcm_of(degs);
    c.label = "C" + std::to_string(c.order);
    return c;
}

int point_rank(const BranchPointRecord& r) {
    if (r.point.rational) return 0;
    if (!r.point.at_infinity) return 1;
    return 2;
}

bool record_less(const BranchPointRecord& a, const BranchPointRecord& b) {
    if (point_rank(a) != point_rank(b)) return point_rank(a) < point_rank(b);
    if (a.point.rational && b.point.rational) return nf_order(a.point.value, b.point.value) < 0;
    if (a.point.min_poly && b.point.min_poly) {
        const KPoly &x = *a.point.min_poly, &y = *b.point.min_poly;
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        for (long i = x.degree(); i >= 0; --i) {
            int c = nf_order(x.coeff((size_t)i), y.coeff((size_t)i));
            if (c != 0) return c < 0;
        }
        return box_order(a.point.box, b.point.box) < 0;
    }
    return false;
}

} // namespace

std::vector<BranchPointRecord> branch_data(const BiPoly& p, const FieldPtr& k) {
    long n = p.deg_y();
    if (n < 1 || !p.monic_in_y()) fail(errc::degenerate, "branch_data wants monic-in-Y");
    if (n > 8) fail(errc::degree_too_large, "branch_data supports deg_Y <= 8");
    KPoly d = disc_y(p);
    if (d.is_zero()) fail(errc::inseparable, "polynomial is inseparable over k(T)");
    if (!is_irreducible_over_kT(p)) fail(errc::reducible, "polynomial is reducible over k(T)");

    std::vector<BranchPointRecord> out;

    if (d.degree() >= 1) {
        KPoly sf = squarefree_part(d);
        auto fac = factor_over_field(sf, k);
        for (const auto& [orbit, mult] : fac.factors) {
            (void)mult;
            FieldExtension ext = extend_field(k, orbit);
            auto q = localize_at(p, ext.field, ext.base_gen_image, ext.root);
            auto degs = local_place_degrees(q, ext.field);
            long e = lcm_of(degs);
            if (e == 1) continue; // unramified: spurious discriminant root

            InertiaClass cls = inertia_from_degrees(degs);
            if (orbit.degree() == 1) {
                BranchPointRecord rec;
                rec.point = AlgPoint::from_value(-orbit.coeff(0) / orbit.coeff(1));
                rec.ram_index = e;
                rec.inertia = cls;
                out.push_back(std::move(rec));
            } else {
                std::vector<Box> boxes;
                if (!k) {
                    boxes = isolate_roots(rational_poly(orbit));
                } else {
                    // boxes of the Q-conjugate orbit; root-to-box matching is
                    // not pinned over non-rational base fields
                    QPoly nq = min_poly_over_Q(ext.root);
                    boxes = isolate_roots(nq);
                }
                for (long i = 0; i < orbit.degree(); ++i) {
                    BranchPointRecord rec;
                    rec.point.min_poly = orbit;
                    rec.point.box = boxes[(size_t)i % boxes.size()];
                    rec.orbit_poly = orbit;
                    rec.ram_index = e;
                    rec.inertia = cls;
                    out.push_back(std::move(rec));
                }
            }
        }
    }

    // infinity
    {
        BiPoly inv = invert_at_infinity(p);
        std::vector<KPoly> q;
        long nn = inv.deg_y();
        for (long j = 0; j <= nn; ++j) {
            KPoly c = inv.y_coeff(j);
            q.push_back(k ? map_poly(c, k, NFElem::generator(k)) : c);
        }
        auto degs = local_place_degrees(q, k);
        long e = lcm_of(degs);
        if (e > 1) {
            BranchPointRecord rec;
            rec.point = AlgPoint::infinity();
            rec.ram_index = e;
            rec.inertia = inertia_from_degrees(degs);
            out.push_back(std::move(rec));
        }
    }

    std::sort(out.begin(), out.end(), record_less);
    return out;
}

long genus_galois(long group_order, const std::vector<long>& e_tuple) {
    if (group_order < 1) fail(errc::degenerate, "genus_galois needs |G| >= 1");
    for (long e : e_tuple) {
        if (e < 2) fail(errc::degenerate, "ramification indices are >= 2");
        if (group_order % e != 0) fail(errc::non_integral_genus, "e does not divide |G|");
    }
    // 2g - 2 = |G| (-2 + sum (1 - 1/e))
    Rat rhs = Rat(-2);
    for (long e : e_tuple) rhs += Rat(1) - make_rat(Int(1), Int(e));
    rhs *= Rat(group_order);
    Rat g = (rhs + 2) / 2;
    if (!is_integer(g) || g < 0) fail(errc::non_integral_genus, "Riemann-Hurwitz gave a non-genus");
    return (long)num(g).get_si();
}

bool genus_zero_shape(const GroupId& g, const std::vector<long>& e_tuple) {
    std::vector<long> e = e_tuple;
    std::sort(e.begin(), e.end());
    if (auto n = g.cyclic_n()) return e == std::vector<long>{*n, *n};
    if (auto n = g.dihedral_n()) return e == std::vector<long>{2, 2, *n};
    if (g.tag == GroupId::Tag::V4) return e == std::vector<long>{2, 2, 2};
    if (g.tag == GroupId::Tag::A4) return e == std::vector<long>{2, 3, 3};
    if (g.tag == GroupId::Tag::S4 || (g.tag == GroupId::Tag::Sn && g.n == 4))
        return e == std::vector<long>{2, 3, 4};
    if (g.tag == GroupId::Tag::A5) return e == std::vector<long>{2, 3, 5};
    return false;
}

bool branch_rationality(const std::vector<BranchPointRecord>& branch, const FieldPtr& k) {
    (void)k;
    for (const auto& rec : branch)
        if (!rec.point.at_infinity && !rec.point.rational) return false;
    return true;
}

} // namespace gencover
