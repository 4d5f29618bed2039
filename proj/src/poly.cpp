#include "gencover/poly.hpp"

#include <algorithm>

namespace gencover {

std::pair<QPoly, Rat> primitive_integer(const QPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "primitive_integer(0)");
    Int d = 1;
    for (const auto& c : f.coeffs()) d = lcm(d, den(c));
    Int g = 0;
    for (const auto& c : f.coeffs()) g = gcd(g, num(c * Rat(d)));
    if (g == 0) g = 1;
    Rat scale = make_rat(d, g);
    QPoly h = f * Rat(scale);
    if (sign(h.lc()) < 0) {
        h = -h;
        scale = -scale;
    }
    return {h, Rat(1) / scale};
}

std::vector<Int> integer_coeffs(const QPoly& f) {
    std::vector<Int> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        if (!is_integer(c)) fail(errc::internal, "integer_coeffs on non-integral polynomial");
        out.push_back(num(c));
    }
    return out;
}

std::vector<std::pair<QPoly, unsigned>> squarefree_decomposition(const QPoly& f) {
    // Yun's algorithm, char 0.
    std::vector<std::pair<QPoly, unsigned>> out;
    if (f.is_zero()) fail(errc::zero_polynomial, "squarefree_decomposition(0)");
    QPoly g = f.monic();
    if (g.degree() == 0) return out;
    QPoly a = poly_gcd(g, g.derivative());
    QPoly b = g / a;
    QPoly d = g.derivative() / a - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        QPoly w = poly_gcd(b, d);
        if (w.degree() > 0) out.emplace_back(w.monic(), i);
        b = b / w;
        QPoly c = d / w;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

int sign_at(const QPoly& f, const Rat& x) { return sign(f.eval(x)); }

std::vector<QPoly> sturm_sequence(const QPoly& f) {
    std::vector<QPoly> s;
    s.push_back(f);
    s.push_back(f.derivative());
    while (!s.back().is_zero()) {
        QPoly r = s[s.size() - 2] % s.back();
        s.push_back(-r);
    }
    s.pop_back();
    return s;
}

int sign_changes(const std::vector<QPoly>& seq, const Rat& x) {
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace

int sturm_count(const QPoly& f, const Rat& a, const Rat& b) {
    auto seq = sturm_sequence(f);
    return sign_changes(seq, a) - sign_changes(seq, b);
}

int count_real_roots(const QPoly& f) {
    if (f.degree() <= 0) return 0;
    Rat b = root_bound(f);
    return sturm_count(f, -b, b);
}

Rat root_bound(const QPoly& f) {
    if (f.degree() < 1) fail(errc::wrong_degree, "root_bound needs degree >= 1");
    Rat m(0);
    for (long i = 0; i < f.degree(); ++i) {
        Rat a = abs(f.coeff((size_t)i) / f.lc());
        if (a > m) m = a;
    }
    return m + 1;
}

std::vector<Rat> rational_roots(const QPoly& f) {
    // Divisor enumeration on the primitive integer model.
    std::vector<Rat> out;
    if (f.degree() < 1) return out;
    auto [g, c] = primitive_integer(f);
    (void)c;
    // strip x^v
    long v = g.valuation();
    QPoly h = g;
    if (v > 0) {
        std::vector<Rat> cs(g.coeffs().begin() + v, g.coeffs().end());
        h = QPoly(std::move(cs));
        out.push_back(Rat(0));
    }
    if (h.degree() < 1) return out;
    Int a0 = num(h.coeff(0));
    Int an = num(h.lc());
    std::vector<Int> ps, qs;
    for (const auto& [p, e] : factor_integer(a0)) {
        (void)e;
        ps.push_back(p);
    }
    // enumerate divisors
    auto divisors = [](const Int& n) {
        std::vector<Int> ds{1};
        for (const auto& [p, e] : factor_integer(n)) {
            size_t sz = ds.size();
            Int pk = 1;
            for (unsigned i = 1; i <= e; ++i) {
                pk *= p;
                for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
            }
        }
        return ds;
    };
    for (const Int& r : divisors(abs(a0)))
        for (const Int& s : divisors(abs(an))) {
            if (gcd(r, s) != 1) continue;
            for (int sg : {1, -1}) {
                Rat cand = make_rat(sg * r, s);
                if (h.eval(cand) == 0) out.push_back(cand);
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace gencover
