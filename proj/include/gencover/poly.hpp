#ifndef GENCOVER_POLY_HPP
#define GENCOVER_POLY_HPP

#include "gencover/errors.hpp"
#include "gencover/rat.hpp"

#include <vector>

namespace gencover {

// Dense univariate polynomial over a field K, lowest degree first.
// K must be constructible from long and support field arithmetic and ==.
// Degrees here are small (<= 24), so clarity wins over asymptotics.
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const K& v) { return Poly(std::vector<K>{v}); }
    static Poly var() { return Poly(std::vector<K>{K(0), K(1)}); }
    // c * x^n
    static Poly monomial(const K& c, size_t n) {
        std::vector<K> v(n + 1, K(0));
        v[n] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return (long)c_.size() - 1; }
    const K& lc() const {
        if (is_zero()) fail(errc::zero_polynomial, "leading coefficient of 0");
        return c_.back();
    }
    K coeff(size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const std::vector<K>& coeffs() const { return c_; }

    void set_coeff(size_t i, const K& v) {
        if (i >= c_.size()) c_.resize(i + 1, K(0));
        c_[i] = v;
        trim();
    }

    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !is_zero() && lc() == K(1); }

    // s-adic valuation: index of lowest nonzero coefficient.
    long valuation() const {
        if (is_zero()) fail(errc::zero_polynomial, "valuation of 0");
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == K(0))) return (long)i;
        return -1;
    }

    Poly operator-() const {
        std::vector<K> v(c_);
        for (auto& x : v) x = K(0) - x;
        return Poly(std::move(v));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> v(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const K& s) {
        std::vector<K> v(a.c_);
        for (auto& x : v) x = x * s;
        return Poly(std::move(v));
    }
    friend Poly operator*(const K& s, const Poly& a) { return a * s; }
    friend Poly operator/(const Poly& a, const K& s) {
        std::vector<K> v(a.c_);
        for (auto& x : v) x = x / s;
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; b != 0.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) fail(errc::zero_polynomial, "division by zero polynomial");
        Poly q, r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            K f = r.lc() / b.lc();
            size_t k = (size_t)(r.degree() - b.degree());
            Poly t = Poly::monomial(f, k);
            q = q + t;
            r = r - t * b;
        }
        return {q, r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    K eval(const K& x) const {
        K acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> v(c_.size() - 1, K(0));
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * K((long)i);
        return Poly(std::move(v));
    }

    Poly compose(const Poly& inner) const {
        Poly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly::constant(c_[i]);
        return acc;
    }

    // x -> x + a
    Poly shift(const K& a) const { return compose(Poly(std::vector<K>{a, K(1)})); }

    // x^deg * f(1/x)
    Poly reversed() const {
        std::vector<K> v(c_.rbegin(), c_.rend());
        return Poly(std::move(v));
    }

    Poly monic() const {
        if (is_zero()) fail(errc::zero_polynomial, "monic of 0");
        return *this / lc();
    }

    Poly pow(unsigned long e) const {
        Poly r = Poly::constant(K(1));
        Poly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.monic();
}

template <class K>
K resultant(Poly<K> a, Poly<K> b) {
    if (a.is_zero() || b.is_zero()) return K(0);
    if (a.degree() == 0 && b.degree() == 0) return K(1);
    K s(1);
    while (b.degree() > 0) {
        Poly<K> r = a % b;
        if (r.is_zero()) return K(0);
        long da = a.degree(), db = b.degree(), dr = r.degree();
        if ((da * db) % 2 == 1) s = K(0) - s;
        K l = b.lc();
        for (long i = 0; i < da - dr; ++i) s = s * l;
        a = b;
        b = r;
    }
    // b is a nonzero constant
    K l = b.coeff(0);
    K t(1);
    for (long i = 0; i < a.degree(); ++i) t = t * l;
    return s * t;
}

template <class K>
K discriminant(const Poly<K>& f) {
    if (f.degree() < 1) fail(errc::wrong_degree, "discriminant needs degree >= 1");
    if (f.degree() == 1) return K(1);
    K r = resultant(f, f.derivative());
    long d = f.degree();
    K s = ((d * (d - 1) / 2) % 2 == 0) ? K(1) : K(-1);
    return s * r / f.lc();
}

// Monic product of the distinct irreducible factors: f / gcd(f, f').
template <class K>
Poly<K> squarefree_part(const Poly<K>& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "squarefree_part(0)");
    if (f.degree() == 0) return Poly<K>::constant(K(1));
    Poly<K> g = poly_gcd(f, f.derivative());
    return (f / g).monic();
}

template <class K>
bool is_separable(const Poly<K>& f) {
    if (f.degree() < 1) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

// Extended Euclid: g = gcd(a, b) monic with u*a + v*b = g.
template <class K>
Poly<K> poly_ext_gcd(const Poly<K>& a, const Poly<K>& b, Poly<K>& u, Poly<K>& v) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0 = Poly<K>::constant(K(1)), s1;
    Poly<K> t0, t1 = Poly<K>::constant(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly<K> s2 = s0 - q * s1;
        Poly<K> t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) {
        u = s0;
        v = t0;
        return r0;
    }
    K l = r0.lc();
    u = s0 / l;
    v = t0 / l;
    return r0 / l;
}

// Lagrange interpolation over any field.
template <class K>
Poly<K> interpolate_t(const std::vector<std::pair<K, K>>& pts) {
    Poly<K> acc;
    for (size_t i = 0; i < pts.size(); ++i) {
        Poly<K> term = Poly<K>::constant(K(1));
        K denom(1);
        for (size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            term = term * Poly<K>{K(0) - pts[j].first, K(1)};
            denom = denom * (pts[i].first - pts[j].first);
        }
        acc = acc + term * (pts[i].second / denom);
    }
    return acc;
}

// Yun's squarefree decomposition over any field of characteristic 0.
template <class K>
std::vector<std::pair<Poly<K>, unsigned>> squarefree_decomposition_t(const Poly<K>& f) {
    std::vector<std::pair<Poly<K>, unsigned>> out;
    if (f.is_zero()) fail(errc::zero_polynomial, "squarefree_decomposition(0)");
    Poly<K> g = f.monic();
    if (g.degree() == 0) return out;
    Poly<K> a = poly_gcd(g, g.derivative());
    Poly<K> b = g / a;
    Poly<K> d = g.derivative() / a - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        Poly<K> w = poly_gcd(b, d);
        if (w.degree() > 0) out.emplace_back(w.monic(), i);
        b = b / w;
        Poly<K> c = d / w;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

using QPoly = Poly<Rat>;

// --- Q-specific helpers (implemented in poly.cpp) ---

// Primitive integer multiple: returns (g, c) with f = c * g, g integer
// coefficients, content 1, lc(g) > 0.
std::pair<QPoly, Rat> primitive_integer(const QPoly& f);

std::vector<Int> integer_coeffs(const QPoly& f); // requires integral f

// Yun squarefree decomposition: list of (monic squarefree factor, multiplicity).
std::vector<std::pair<QPoly, unsigned>> squarefree_decomposition(const QPoly& f);

// Sturm sequence root counting on (a, b]; f squarefree.
int sturm_count(const QPoly& f, const Rat& a, const Rat& b);
int count_real_roots(const QPoly& f);

// Cauchy-style bound: all complex roots have |z| < bound.
Rat root_bound(const QPoly& f);

// Rational roots of f (exact).
std::vector<Rat> rational_roots(const QPoly& f);

} // namespace gencover

#endif
