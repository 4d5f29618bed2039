#include "gencover/numfield.hpp"

#include <algorithm>

namespace gencover {

FieldPtr NumberField::make(const QPoly& defining, size_t root_index, long cap) {
    if (defining.degree() < 1) fail(errc::wrong_degree, "number field needs degree >= 1");
    if (defining.degree() > cap) fail(errc::degree_too_large, "number field degree cap exceeded");
    QPoly f = defining.monic();
    auto fac = factor_over_Q_internal(f);
    if (fac.factors.size() != 1 || fac.factors[0].second != 1)
        fail(errc::reducible, "defining polynomial is reducible");
    auto boxes = isolate_roots(f);
    if (root_index >= boxes.size()) fail(errc::degenerate, "root index out of range");
    return FieldPtr(new NumberField(f, boxes[root_index], root_index));
}

FieldPtr NumberField::create(const QPoly& defining, size_t root_index) {
    return make(defining, root_index, kPublicDegreeCap);
}

FieldPtr NumberField::create_internal(const QPoly& defining, size_t root_index) {
    return make(defining, root_index, kInternalDegreeCap);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a && !b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

namespace {

FieldPtr common_field(const NFElem& a, const NFElem& b) {
    if (!a.field()) return b.field();
    if (!b.field()) return a.field();
    if (!same_field(a.field(), b.field())) fail(errc::internal, "mixed number fields");
    return a.field();
}

std::vector<Rat> add_reps(const std::vector<Rat>& a, const std::vector<Rat>& b, int bsign) {
    std::vector<Rat> r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += bsign > 0 ? b[i] : -b[i];
    }
    return r;
}

} // namespace

NFElem NFElem::operator-() const {
    std::vector<Rat> r(rep_);
    for (auto& x : r) x = -x;
    return NFElem(fld_, std::move(r));
}

NFElem operator+(const NFElem& a, const NFElem& b) {
    FieldPtr f = common_field(a, b);
    return NFElem(f, add_reps(a.rep_, b.rep_, +1));
}

NFElem operator-(const NFElem& a, const NFElem& b) {
    FieldPtr f = common_field(a, b);
    return NFElem(f, add_reps(a.rep_, b.rep_, -1));
}

NFElem operator*(const NFElem& a, const NFElem& b) {
    FieldPtr f = common_field(a, b);
    if (a.rep_.empty() || b.rep_.empty()) return NFElem();
    std::vector<Rat> r(a.rep_.size() + b.rep_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.rep_.size(); ++i)
        for (size_t j = 0; j < b.rep_.size(); ++j) r[i + j] += a.rep_[i] * b.rep_[j];
    QPoly prod{std::vector<Rat>(r)};
    if (f && prod.degree() >= f->degree()) prod = prod % f->defining();
    std::vector<Rat> rep(prod.coeffs());
    return NFElem(f, std::move(rep));
}

NFElem NFElem::inverse() const {
    if (is_zero()) fail(errc::degenerate, "division by zero");
    if (is_rational()) return NFElem(Rat(1) / as_rat());
    QPoly r{std::vector<Rat>(rep_)};
    QPoly u, v;
    QPoly g = poly_ext_gcd(r, fld_->defining(), u, v);
    if (g.degree() != 0) fail(errc::internal, "non-invertible element");
    QPoly inv = u / g.coeff(0);
    inv = inv % fld_->defining();
    return NFElem(fld_, std::vector<Rat>(inv.coeffs()));
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

bool operator==(const NFElem& a, const NFElem& b) {
    if (a.rep_.size() != b.rep_.size()) return false;
    for (size_t i = 0; i < a.rep_.size(); ++i)
        if (a.rep_[i] != b.rep_[i]) return false;
    // reps equal; rationals compare equal regardless of ambient field
    if (a.rep_.size() <= 1) return true;
    return same_field(a.fld_, b.fld_);
}

int nf_order(const NFElem& a, const NFElem& b) {
    const auto& x = a.rep();
    const auto& y = b.rep();
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    for (size_t i = x.size(); i-- > 0;) {
        if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    }
    return 0;
}

KPoly lift_to_field(const QPoly& f) {
    std::vector<NFElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) c.emplace_back(q);
    return KPoly(std::move(c));
}

QPoly rational_poly(const KPoly& f) {
    std::vector<Rat> c;
    c.reserve(f.coeffs().size());
    for (const auto& e : f.coeffs()) c.push_back(e.as_rat());
    return QPoly(std::move(c));
}

namespace {

QPoly rep_as_qpoly(const NFElem& e) {
    return QPoly{std::vector<Rat>(e.rep().begin(), e.rep().end())};
}

// Norm of a monic g over k: Res_y(m(y), g-with-alpha->y evaluated at x),
// interpolated in x. m monic, so the resultant is the plain root product.
QPoly trager_norm(const KPoly& g, const FieldPtr& k) {
    const QPoly& m = k->defining();
    long dn = m.degree() * g.degree();
    std::vector<std::pair<Rat, Rat>> pts;
    for (long i = 0; i <= dn; ++i) {
        Rat x0((long)i);
        NFElem val = g.eval(NFElem(x0));
        QPoly c = rep_as_qpoly(val);
        Rat r = c.is_zero() ? Rat(0) : resultant(m, c);
        pts.emplace_back(x0, r);
    }
    return interpolate(pts);
}

std::vector<KPoly> trager_squarefree(const KPoly& g, const FieldPtr& k) {
    if (g.degree() == 1) return {g};
    NFElem alpha = NFElem::generator(k);
    for (long si = 0; si < 41; ++si) {
        long s = (si % 2 == 0) ? si / 2 : -(si / 2 + 1);
        KPoly inner{NFElem(Rat(-s)) * alpha, NFElem(1)};
        KPoly gs = g.compose(inner); // g(x - s*alpha)
        QPoly N = trager_norm(gs, k);
        if (N.degree() != k->degree() * g.degree()) continue;
        if (!is_separable(N)) continue;
        auto fac = factor_over_Q_internal(N);
        std::vector<KPoly> out;
        for (const auto& [ni, mult] : fac.factors) {
            (void)mult;
            KPoly shifted = lift_to_field(ni).compose(KPoly{NFElem(Rat(s)) * alpha, NFElem(1)});
            KPoly h = poly_gcd(g, shifted);
            if (h.degree() >= 1) out.push_back(h.monic());
        }
        // sanity: factors multiply back to g
        KPoly prod = KPoly::constant(NFElem(1));
        long dsum = 0;
        for (const auto& h : out) dsum += h.degree();
        if (dsum != g.degree()) continue;
        for (const auto& h : out) prod = prod * h;
        if (!(prod == g)) continue;
        std::sort(out.begin(), out.end(), [](const KPoly& a, const KPoly& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            for (long i = a.degree(); i >= 0; --i) {
                int c = nf_order(a.coeff((size_t)i), b.coeff((size_t)i));
                if (c != 0) return c < 0;
            }
            return false;
        });
        return out;
    }
    fail(errc::internal, "trager: no squarefree norm found");
}

} // namespace

KFactorization factor_over_field(const KPoly& f, const FieldPtr& k) {
    if (f.is_zero()) fail(errc::zero_polynomial, "factor_over_field(0)");
    KFactorization out;
    out.constant = f.lc();
    if (f.degree() == 0) return out;
    if (!k) {
        auto fq = factor_over_Q_internal(rational_poly(f));
        out.constant = NFElem(fq.constant);
        for (const auto& [g, m] : fq.factors) out.factors.emplace_back(lift_to_field(g), m);
        return out;
    }
    if (k->degree() * f.degree() > NumberField::kInternalDegreeCap)
        fail(errc::degree_too_large, "norm degree exceeds internal cap");
    for (const auto& [sf, mult] : squarefree_decomposition_t(f)) {
        for (auto& h : trager_squarefree(sf, k)) out.factors.emplace_back(h, mult);
    }
    return out;
}

bool is_irreducible_over_field(const KPoly& f, const FieldPtr& k) {
    if (f.degree() < 1) return false;
    auto fac = factor_over_field(f, k);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::vector<NFElem> roots_in_field(const KPoly& f, const FieldPtr& k) {
    std::vector<NFElem> out;
    if (f.degree() < 1) return out;
    auto fac = factor_over_field(f, k);
    for (const auto& [g, m] : fac.factors) {
        (void)m;
        if (g.degree() == 1) out.push_back(-g.coeff(0));
    }
    std::sort(out.begin(), out.end(), [](const NFElem& a, const NFElem& b) { return nf_order(a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<NFElem> root_in_field(const QPoly& f, const FieldPtr& k) {
    if (f.is_zero()) fail(errc::zero_polynomial, "root_in_field(0)");
    if (f.degree() > kFactorDegreeCap) fail(errc::degree_too_large, "root_in_field degree cap");
    auto fac = factor_over_Q(f);
    std::vector<NFElem> candidates;
    bool capped = false;
    for (const auto& [g, m] : fac.factors) {
        (void)m;
        if (g.degree() == 1) {
            candidates.emplace_back(-g.coeff(0));
            continue;
        }
        if (!k) continue;
        if (k->degree() % g.degree() != 0) continue;
        if (g.degree() * k->degree() > NumberField::kInternalDegreeCap) {
            capped = true;
            continue;
        }
        for (const auto& r : roots_in_field(lift_to_field(g), k)) candidates.push_back(r);
    }
    if (candidates.empty()) {
        if (capped) fail(errc::degree_too_large, "root_in_field norm cap");
        return std::nullopt;
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const NFElem& a, const NFElem& b) { return nf_order(a, b) < 0; });
    return candidates.front();
}

std::optional<NFElem> sqrt_in_field(const NFElem& c, const FieldPtr& k) {
    if (c.is_zero()) return NFElem(0);
    KPoly f{-c, NFElem(0), NFElem(1)};
    auto roots = roots_in_field(f, k);
    if (roots.empty()) return std::nullopt;
    // prefer the canonically larger representative for a stable "positive" pick
    return roots.back();
}

bool is_square_in_field(const NFElem& c, const FieldPtr& k) { return sqrt_in_field(c, k).has_value(); }

bool has_root_of_unity(const FieldPtr& k, unsigned n) {
    if (n == 0) fail(errc::degenerate, "has_root_of_unity(0)");
    if (n <= 2) return true;
    unsigned phi = euler_phi(n);
    long dk = k ? k->degree() : 1;
    if ((long)phi > dk) return false;
    return root_in_field(cyclotomic(n), k).has_value();
}

bool has_cos_of_root_of_unity(const FieldPtr& k, unsigned n) {
    if (n == 0) fail(errc::degenerate, "has_cos_of_root_of_unity(0)");
    if (n <= 2) return true;
    QPoly psi = cos2pi_min_poly(n);
    long dk = k ? k->degree() : 1;
    if (psi.degree() > dk) return false;
    return root_in_field(psi, k).has_value();
}

NFElem map_elem(const NFElem& e, const FieldPtr& M, const NFElem& base_gen_image) {
    (void)M;
    NFElem acc(0);
    for (size_t i = e.rep().size(); i-- > 0;) acc = acc * base_gen_image + NFElem(e.rep()[i]);
    return acc;
}

KPoly map_poly(const KPoly& f, const FieldPtr& M, const NFElem& base_gen_image) {
    std::vector<NFElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& e : f.coeffs()) c.push_back(map_elem(e, M, base_gen_image));
    return KPoly(std::move(c));
}

QPoly min_poly_over_Q(const NFElem& e) {
    if (e.is_rational()) return QPoly{-e.as_rat(), Rat(1)};
    const QPoly& m = e.field()->defining();
    QPoly er = rep_as_qpoly(e);
    long dn = m.degree();
    std::vector<std::pair<Rat, Rat>> pts;
    for (long i = 0; i <= dn; ++i) {
        Rat x0((long)i);
        // Res_y(m(y), x0 - e(y))
        QPoly c = QPoly::constant(x0) - er;
        pts.emplace_back(x0, c.is_zero() ? Rat(0) : resultant(m, c));
    }
    QPoly charpoly = interpolate(pts);
    QPoly mp = squarefree_part(charpoly);
    return mp.monic();
}

FieldExtension extend_field(const FieldPtr& k, const KPoly& h) {
    if (h.degree() < 1) fail(errc::wrong_degree, "extend_field needs degree >= 1");
    if (h.degree() == 1) {
        NFElem root = -h.coeff(0) / h.coeff(1);
        NFElem gen = k ? NFElem::generator(k) : NFElem(0);
        return {k, gen, root};
    }
    if (!k) {
        QPoly hq = rational_poly(h).monic();
        FieldPtr M = NumberField::create_internal(hq);
        return {M, NFElem(0), NFElem::generator(M)};
    }
    long dtot = k->degree() * h.degree();
    if (dtot > NumberField::kInternalDegreeCap)
        fail(errc::degree_too_large, "flattened field degree exceeds cap");
    const QPoly& m = k->defining();
    KPoly hm = h.monic();
    for (long ci = 1; ci < 41; ++ci) {
        long c = (ci % 2 == 1) ? (ci + 1) / 2 : -(ci / 2);
        // R(x) = Res_y(m(y), H(y, x - c*y)), interpolated in x
        std::vector<std::pair<Rat, Rat>> pts;
        bool bad = false;
        for (long i = 0; i <= dtot; ++i) {
            Rat x0((long)i);
            QPoly inner{x0, Rat(-c)}; // x0 - c*y as poly in y
            QPoly acc;                // H(y, x0 - c*y)
            for (size_t j = hm.coeffs().size(); j-- > 0;) {
                acc = acc * inner + rep_as_qpoly(hm.coeff(j));
            }
            pts.emplace_back(x0, acc.is_zero() ? Rat(0) : resultant(m, acc));
        }
        QPoly R = interpolate(pts);
        if (R.degree() != dtot || !is_separable(R)) continue;
        auto fac = factor_over_Q_internal(R);
        const QPoly* full = nullptr;
        for (const auto& [g, mu] : fac.factors) {
            (void)mu;
            if (g.degree() == dtot) {
                full = &g;
                break;
            }
        }
        if (!full) continue;
        FieldPtr M = NumberField::create_internal(full->monic());
        NFElem beta = NFElem::generator(M);
        // recover alpha = root of gcd(m(y), H(y, beta - c*y)) over M
        KPoly inner{beta, NFElem(Rat(-c))};
        KPoly acc;
        for (size_t j = hm.coeffs().size(); j-- > 0;)
            acc = acc * inner + lift_to_field(rep_as_qpoly(hm.coeff(j)));
        KPoly g = poly_gcd(lift_to_field(m), acc);
        if (g.degree() != 1) continue;
        NFElem alphaM = -g.coeff(0) / g.coeff(1);
        NFElem gammaM = beta - NFElem(Rat(c)) * alphaM;
        if (!(lift_to_field(m).eval(alphaM) == NFElem(0))) fail(errc::internal, "extend_field: alpha check");
        if (!(map_poly(hm, M, alphaM).eval(gammaM) == NFElem(0))) fail(errc::internal, "extend_field: gamma check");
        return {M, alphaM, gammaM};
    }
    fail(errc::internal, "extend_field: no primitive shift found");
}

} // namespace gencover
