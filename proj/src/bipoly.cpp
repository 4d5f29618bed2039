#include "gencover/bipoly.hpp"

#include <algorithm>

namespace gencover {

BiPoly BiPoly::from_y_coeffs(const std::vector<KPoly>& ys, FieldPtr field) {
    BiPoly p(std::move(field));
    for (size_t j = 0; j < ys.size(); ++j)
        for (size_t i = 0; i < ys[j].coeffs().size(); ++i) p.set_coeff((long)i, (long)j, ys[j].coeff(i));
    return p;
}

long BiPoly::deg_y() const {
    long d = -1;
    for (const auto& [k, v] : c_) {
        (void)v;
        d = std::max(d, k.second);
    }
    return d;
}

long BiPoly::deg_t() const {
    long d = -1;
    for (const auto& [k, v] : c_) {
        (void)v;
        d = std::max(d, k.first);
    }
    return d;
}

NFElem BiPoly::coeff(long dt, long dy) const {
    auto it = c_.find({dt, dy});
    return it == c_.end() ? NFElem(0) : it->second;
}

void BiPoly::set_coeff(long dt, long dy, const NFElem& v) {
    if (dt < 0 || dy < 0) fail(errc::internal, "negative exponent");
    if (v.is_zero())
        c_.erase({dt, dy});
    else
        c_[{dt, dy}] = v;
}

KPoly BiPoly::y_coeff(long j) const {
    std::vector<NFElem> cs;
    for (const auto& [k, v] : c_) {
        if (k.second != j) continue;
        if ((size_t)k.first >= cs.size()) cs.resize((size_t)k.first + 1, NFElem(0));
        cs[(size_t)k.first] = v;
    }
    return KPoly(std::move(cs));
}

std::vector<KPoly> BiPoly::y_coeffs() const {
    long n = deg_y();
    std::vector<KPoly> out;
    for (long j = 0; j <= n; ++j) out.push_back(y_coeff(j));
    return out;
}

bool BiPoly::monic_in_y() const {
    long n = deg_y();
    if (n < 0) return false;
    return y_coeff(n) == KPoly::constant(NFElem(1));
}

KPoly BiPoly::eval_t(const NFElem& t0) const {
    long n = deg_y();
    std::vector<NFElem> cs((size_t)(n + 1), NFElem(0));
    for (const auto& [k, v] : c_) {
        NFElem tp(1);
        for (long i = 0; i < k.first; ++i) tp = tp * t0;
        cs[(size_t)k.second] = cs[(size_t)k.second] + v * tp;
    }
    return KPoly(std::move(cs));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    if (!r.field_) r.field_ = b.field_;
    for (const auto& [k, v] : b.c_) r.set_coeff(k.first, k.second, r.coeff(k.first, k.second) + v);
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r(a.field_ ? a.field_ : b.field_);
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_) {
            long dt = ka.first + kb.first, dy = ka.second + kb.second;
            r.set_coeff(dt, dy, r.coeff(dt, dy) + va * vb);
        }
    return r;
}

BiPoly derivative_y(const BiPoly& p) {
    BiPoly r(p.field());
    for (const auto& [k, v] : p.terms())
        if (k.second >= 1) r.set_coeff(k.first, k.second - 1, v * NFElem(Rat(k.second)));
    return r;
}

KPoly disc_y(const BiPoly& p) {
    long n = p.deg_y();
    if (n < 1) fail(errc::wrong_degree, "disc_y needs deg_Y >= 1");
    if (!p.monic_in_y()) fail(errc::degenerate, "disc_y expects a monic-in-Y polynomial");
    if (n == 1) return KPoly::constant(NFElem(1));
    long dt = std::max(p.deg_t(), 0L);
    long bound = (2 * n - 1) * dt;
    std::vector<std::pair<NFElem, NFElem>> pts;
    for (long i = 0; i <= bound; ++i) {
        NFElem t0{Rat(i)};
        pts.emplace_back(t0, discriminant(p.eval_t(t0)));
    }
    return interpolate_t(pts);
}

bool is_separable_y(const BiPoly& p) { return !disc_y(p).is_zero(); }

std::vector<KPoly> polynomial_roots_in_T(const BiPoly& p) {
    long n = p.deg_y();
    if (n < 1 || !p.monic_in_y()) fail(errc::degenerate, "polynomial_roots_in_T wants monic-in-Y");
    const FieldPtr& k = p.field();
    // degree bound for an integral root y(T)
    long m = 0;
    for (long j = 0; j < n; ++j) {
        KPoly cj = p.y_coeff(j);
        if (cj.is_zero()) continue;
        long b = (cj.degree() + (n - j) - 1) / (n - j);
        m = std::max(m, b);
    }
    std::vector<std::vector<NFElem>> root_sets;
    for (long i = 0; i <= m; ++i) {
        KPoly spec = p.eval_t(NFElem(Rat(i)));
        root_sets.push_back(roots_in_field(spec, k));
        if (root_sets.back().empty()) return {};
    }
    size_t combos = 1;
    for (const auto& rs : root_sets) {
        combos *= rs.size();
        if (combos > 20000) fail(errc::degree_too_large, "root interpolation combination blowup");
    }
    std::vector<KPoly> out;
    std::vector<size_t> idx(root_sets.size(), 0);
    while (true) {
        std::vector<std::pair<NFElem, NFElem>> pts;
        for (size_t i = 0; i < idx.size(); ++i)
            pts.emplace_back(NFElem(Rat((long)i)), root_sets[i][idx[i]]);
        KPoly cand = interpolate_t(pts);
        if (cand.degree() <= m) {
            // verify p(T, cand(T)) == 0
            KPoly acc;
            for (long j = n; j >= 0; --j) acc = acc * cand + p.y_coeff(j);
            if (acc.is_zero() && std::find(out.begin(), out.end(), cand) == out.end())
                out.push_back(cand);
        }
        size_t i = 0;
        while (i < idx.size() && ++idx[i] == root_sets[i].size()) {
            idx[i] = 0;
            ++i;
        }
        if (i == idx.size()) break;
    }
    return out;
}

// p(T, Z + s(T)) for a polynomial shift of the Y-variable
std::vector<KPoly> shift_y_coeffs(const std::vector<KPoly>& cs, const KPoly& s) {
    long n = (long)cs.size() - 1;
    std::vector<KPoly> out((size_t)n + 1);
    // binomial expansion
    std::vector<std::vector<Int>> binom((size_t)n + 1);
    for (long j = 0; j <= n; ++j) {
        binom[(size_t)j].resize((size_t)j + 1);
        for (long i = 0; i <= j; ++i) {
            Int b;
            mpz_bin_uiui(b.get_mpz_t(), (unsigned long)j, (unsigned long)i);
            binom[(size_t)j][(size_t)i] = b;
        }
    }
    for (long j = 0; j <= n; ++j) {
        KPoly spow = KPoly::constant(NFElem(1));
        for (long i = j; i >= 0; --i) {
            // coefficient of Z^i gets C(j, i) * c_j * s^(j-i)
            KPoly add = cs[(size_t)j] * NFElem(Rat(binom[(size_t)j][(size_t)i])) * spow;
            out[(size_t)i] = out[(size_t)i] + add;
            spow = spow * s;
        }
    }
    return out;
}

BiPoly map_bipoly(const BiPoly& p, const FieldPtr& M, const NFElem& base_gen_image) {
    std::vector<KPoly> ys;
    for (const auto& c : p.y_coeffs()) ys.push_back(map_poly(c, M, base_gen_image));
    return BiPoly::from_y_coeffs(ys, M);
}

bool is_irreducible_over_kT(const BiPoly& p) {
    long n = p.deg_y();
    if (n < 1) return false;
    if (!p.monic_in_y()) fail(errc::degenerate, "irreducibility test wants monic-in-Y");
    if (n == 1) return true;
    if (!polynomial_roots_in_T(p).empty()) return false;
    if (n == 2 || n == 3) return true;
    if (n == 4) {
        // quadratic-pair split via the alpha^2 resolvent on the depressed model
        auto cs = p.y_coeffs();
        KPoly a3 = cs[3];
        KPoly s = KPoly() - a3 / NFElem(Rat(4));
        auto d = shift_y_coeffs(cs, s);
        const KPoly &P = d[2], &Q = d[1], &R = d[0];
        if (Q.is_zero()) {
            // (Y^2 + b)(Y^2 + c) split: z^2 - P z + R must split over k(T)
            KPoly disc = P * P - R * NFElem(Rat(4));
            if (disc.is_zero()) return false;
            if (rat_func_is_square(disc, KPoly::constant(NFElem(1)), false, p.field())) return false;
            // also (Y^2 + aY + b)(Y^2 - aY + b) with a != 0: S-resolvent below
        }
        // S(y) = y^3 + 2P y^2 + (P^2 - 4R) y - Q^2, roots are alpha^2
        BiPoly S(p.field());
        auto put = [&](const KPoly& c, long ydeg) {
            for (size_t i = 0; i < c.coeffs().size(); ++i) {
                NFElem prev = S.coeff((long)i, ydeg);
                S.set_coeff((long)i, ydeg, prev + c.coeff(i));
            }
        };
        put(KPoly::constant(NFElem(1)), 3);
        put(P * NFElem(2), 2);
        put(P * P - R * NFElem(4), 1);
        put(KPoly() - Q * Q, 0);
        for (const auto& A : polynomial_roots_in_T(S)) {
            if (A.is_zero()) continue; // alpha = 0 handled above
            if (rat_func_is_square(A, KPoly::constant(NFElem(1)), false, p.field())) return false;
        }
        return true;
    }
    // deg 5..8: certify irreducibility through a specialization
    long kd = p.field() ? p.field()->degree() : 1;
    if (kd * n > NumberField::kInternalDegreeCap)
        fail(errc::degree_too_large, "irreducibility test cap");
    KPoly d = disc_y(p);
    for (long i = 0; i <= 60; ++i) {
        NFElem t0{Rat(i)};
        if (d.eval(t0).is_zero()) continue;
        KPoly spec = p.eval_t(t0);
        if (is_irreducible_over_field(spec, p.field())) return true;
    }
    return false;
}

bool rat_func_is_square(const KPoly& f, const KPoly& g, bool over_closure, const FieldPtr& k) {
    if (g.is_zero()) fail(errc::degenerate, "rat_func_is_square: zero denominator");
    if (f.is_zero()) return true;

    auto key_less = [](const KPoly& a, const KPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (long i = a.degree(); i >= 0; --i) {
            int c = nf_order(a.coeff((size_t)i), b.coeff((size_t)i));
            if (c != 0) return c < 0;
        }
        return false;
    };
    std::map<KPoly, long, decltype(key_less)> mults(key_less);

    auto ff = factor_over_field(f, k);
    auto fg = factor_over_field(g, k);
    for (const auto& [h, m] : ff.factors) mults[h] += (long)m;
    for (const auto& [h, m] : fg.factors) mults[h] -= (long)m;
    for (const auto& [h, m] : mults) {
        (void)h;
        if (m % 2 != 0) return false;
    }
    if (over_closure) return true;
    NFElem c = ff.constant / fg.constant;
    return is_square_in_field(c, k);
}

} // namespace gencover
