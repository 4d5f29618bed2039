#include "gencover/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace gencover {

namespace {

// ---- arithmetic mod a small odd prime ----------------------------------

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Zp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return (u64)((u128)a * b % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a % p, p - 2); }
};

// dense, low-first, trimmed
struct PolyP {
    std::vector<u64> c;
    long degree() const { return (long)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    u64 lc() const { return c.back(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

PolyP p_add(const Zp& F, const PolyP& a, const PolyP& b) {
    PolyP r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        u64 x = i < a.c.size() ? a.c[i] : 0;
        u64 y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = F.add(x, y);
    }
    r.trim();
    return r;
}

PolyP p_sub(const Zp& F, const PolyP& a, const PolyP& b) {
    PolyP r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        u64 x = i < a.c.size() ? a.c[i] : 0;
        u64 y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = F.sub(x, y);
    }
    r.trim();
    return r;
}

PolyP p_mul(const Zp& F, const PolyP& a, const PolyP& b) {
    PolyP r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    r.trim();
    return r;
}

PolyP p_scale(const Zp& F, const PolyP& a, u64 s) {
    PolyP r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    r.trim();
    return r;
}

std::pair<PolyP, PolyP> p_divmod(const Zp& F, PolyP a, const PolyP& b) {
    PolyP q;
    if (b.is_zero()) fail(errc::internal, "mod-p division by zero");
    u64 binv = F.inv(b.lc());
    if (a.degree() >= b.degree()) q.c.assign((size_t)(a.degree() - b.degree() + 1), 0);
    while (!a.is_zero() && a.degree() >= b.degree()) {
        u64 f = F.mul(a.lc(), binv);
        size_t k = (size_t)(a.degree() - b.degree());
        q.c[k] = f;
        for (size_t i = 0; i < b.c.size(); ++i)
            a.c[i + k] = F.sub(a.c[i + k], F.mul(f, b.c[i]));
        a.trim();
    }
    q.trim();
    return {q, a};
}

PolyP p_mod(const Zp& F, const PolyP& a, const PolyP& b) { return p_divmod(F, a, b).second; }

PolyP p_gcd(const Zp& F, PolyP a, PolyP b) {
    while (!b.is_zero()) {
        PolyP r = p_mod(F, a, b);
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = p_scale(F, a, F.inv(a.lc()));
    return a;
}

PolyP p_monic(const Zp& F, const PolyP& a) { return p_scale(F, a, F.inv(a.lc())); }

PolyP p_deriv(const Zp& F, const PolyP& a) {
    PolyP r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = F.mul(a.c[i], i % F.p);
    r.trim();
    return r;
}

PolyP p_powmod(const Zp& F, PolyP base, const Int& e, const PolyP& m) {
    PolyP r;
    r.c = {1};
    base = p_mod(F, base, m);
    for (long i = (long)mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; --i) {
        r = p_mod(F, p_mul(F, r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), (mp_bitcnt_t)i)) r = p_mod(F, p_mul(F, r, base), m);
    }
    return r;
}

PolyP p_xpow(const Zp& F, const Int& e, const PolyP& m) {
    PolyP x;
    x.c = {0, 1};
    return p_powmod(F, x, e, m);
}

// Cantor–Zassenhaus equal-degree splitting; f monic squarefree, all factors deg d.
void equal_degree(const Zp& F, const PolyP& f, long d, u64& seed, std::vector<PolyP>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    Int pd = pow_int(Int((long)F.p), (unsigned long)d);
    Int e = (pd - 1) / 2;
    while (true) {
        // pseudo-random polynomial of degree < 2d
        PolyP a;
        a.c.resize((size_t)(2 * d), 0);
        for (auto& x : a.c) {
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            x = (seed >> 16) % F.p;
        }
        a.trim();
        if (a.degree() < 1) continue;
        PolyP g = p_gcd(F, a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(F, g, d, seed, out);
            equal_degree(F, p_divmod(F, f, g).first, d, seed, out);
            return;
        }
        PolyP b = p_powmod(F, a, e, f);
        if (b.is_zero()) continue;
        b.c[0] = F.sub(b.c[0], 1);
        b.trim();
        g = p_gcd(F, b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(F, g, d, seed, out);
            equal_degree(F, p_divmod(F, f, g).first, d, seed, out);
            return;
        }
    }
}

// f monic squarefree mod p -> monic irreducible factors
std::vector<PolyP> factor_mod_p(const Zp& F, PolyP f) {
    std::vector<PolyP> out;
    u64 seed = 0x9E3779B97F4A7C15ULL ^ F.p;
    PolyP x;
    x.c = {0, 1};
    PolyP w = x;
    long d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.push_back(f);
            break;
        }
        w = p_powmod(F, w, Int((long)F.p), f);
        PolyP diff = p_sub(F, w, x);
        PolyP g = diff.is_zero() ? f : p_gcd(F, diff, f);
        if (g.degree() > 0) {
            equal_degree(F, g, d, seed, out);
            f = p_divmod(F, f, g).first;
            w = p_mod(F, w, f);
        }
    }
    return out;
}

// ---- integer polynomials mod p^k ----------------------------------------

using ZPoly = std::vector<Int>; // low-first, trimmed

void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long z_deg(const ZPoly& a) { return (long)a.size() - 1; }

ZPoly z_from_qpoly(const QPoly& f) {
    ZPoly r;
    for (const auto& c : f.coeffs()) r.push_back(num(c));
    return r;
}

QPoly z_to_qpoly(const ZPoly& a) {
    std::vector<Rat> c;
    c.reserve(a.size());
    for (const auto& x : a) c.emplace_back(x);
    return QPoly(std::move(c));
}

ZPoly z_reduce(ZPoly a, const Int& m) {
    for (auto& x : a) {
        x %= m;
        if (x < 0) x += m;
    }
    z_trim(a);
    return a;
}

// symmetric representative in (-m/2, m/2]
ZPoly z_symmetric(ZPoly a, const Int& m) {
    Int half = m / 2;
    for (auto& x : a) {
        x %= m;
        if (x < 0) x += m;
        if (x > half) x -= m;
    }
    z_trim(a);
    return a;
}

ZPoly z_add(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return z_reduce(std::move(r), m);
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return z_reduce(std::move(r), m);
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return z_reduce(std::move(r), m);
}

// division by monic b, everything mod m
std::pair<ZPoly, ZPoly> z_divmod_monic(ZPoly a, const ZPoly& b, const Int& m) {
    ZPoly q;
    if (z_deg(a) >= z_deg(b)) q.assign((size_t)(z_deg(a) - z_deg(b) + 1), Int(0));
    while (z_deg(a) >= z_deg(b)) {
        Int f = a.back();
        size_t k = (size_t)(z_deg(a) - z_deg(b));
        q[k] = f;
        for (size_t i = 0; i < b.size(); ++i) {
            a[i + k] -= f * b[i];
            a[i + k] %= m;
        }
        z_trim(a);
        a = z_reduce(std::move(a), m);
    }
    return {z_reduce(std::move(q), m), std::move(a)};
}

ZPoly z_of_polyp(const PolyP& a) {
    ZPoly r;
    for (u64 x : a.c) r.emplace_back((unsigned long)x);
    return r;
}

// One quadratic Hensel step: modulus m -> m^2 (capped at M).
// In: C == g*h (mod m), s*g + t*h == 1 (mod m), C, g, h monic.
void hensel_step(const ZPoly& C, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
    Int m2 = m * m;
    ZPoly e = z_sub(C, z_mul(g, h, m2), m2);
    auto [q, r] = z_divmod_monic(z_mul(s, e, m2), h, m2);
    ZPoly gnew = z_add(g, z_add(z_mul(t, e, m2), z_mul(q, g, m2), m2), m2);
    ZPoly hnew = z_add(h, r, m2);
    ZPoly b = z_sub(z_add(z_mul(s, gnew, m2), z_mul(t, hnew, m2), m2), ZPoly{Int(1)}, m2);
    auto [c, d] = z_divmod_monic(z_mul(s, b, m2), hnew, m2);
    ZPoly snew = z_sub(s, d, m2);
    ZPoly tnew = z_sub(z_sub(t, z_mul(t, b, m2), m2), z_mul(c, gnew, m2), m2);
    g = std::move(gnew);
    h = std::move(hnew);
    s = std::move(snew);
    t = std::move(tnew);
}

// Extended Euclid mod p for the initial Bezout pair.
void bezout_mod_p(const Zp& F, const PolyP& g, const PolyP& h, ZPoly& s, ZPoly& t) {
    PolyP r0 = g, r1 = h;
    PolyP s0, s1, t0, t1;
    s0.c = {1};
    t1.c = {1};
    while (!r1.is_zero()) {
        auto [q, r] = p_divmod(F, r0, r1);
        PolyP s2 = p_sub(F, s0, p_mul(F, q, s1));
        PolyP t2 = p_sub(F, t0, p_mul(F, q, t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    // r0 = gcd = nonzero constant
    u64 inv = F.inv(r0.c[0]);
    s = z_of_polyp(p_scale(F, s0, inv));
    t = z_of_polyp(p_scale(F, t0, inv));
}

// Lift C == prod(fs) (mod p) to mod p^K, C monic over Z. Returns factors mod p^K.
std::vector<ZPoly> hensel_lift_list(const ZPoly& C, const std::vector<PolyP>& fs, const Zp& F,
                                    const Int& pK) {
    if (fs.size() == 1) return {z_reduce(C, pK)};
    size_t half = fs.size() / 2;
    PolyP gp, hp;
    gp.c = {1};
    hp.c = {1};
    for (size_t i = 0; i < half; ++i) gp = p_mul(F, gp, fs[i]);
    for (size_t i = half; i < fs.size(); ++i) hp = p_mul(F, hp, fs[i]);
    ZPoly g = z_of_polyp(gp), h = z_of_polyp(hp), s, t;
    bezout_mod_p(F, gp, hp, s, t);
    Int m((long)F.p);
    while (m < pK) {
        hensel_step(z_reduce(C, m * m), g, h, s, t, m);
        m = m * m;
    }
    g = z_reduce(std::move(g), pK);
    h = z_reduce(std::move(h), pK);
    std::vector<PolyP> left(fs.begin(), fs.begin() + (long)half);
    std::vector<PolyP> right(fs.begin() + (long)half, fs.end());
    auto lg = hensel_lift_list(g, left, F, pK);
    auto lh = hensel_lift_list(h, right, F, pK);
    lg.insert(lg.end(), lh.begin(), lh.end());
    return lg;
}

Int mignotte_bound(const ZPoly& G) {
    Int sq = 0;
    for (const auto& c : G) sq += c * c;
    Int norm = isqrt(sq) + 1;
    return (pow_int(Int(2), (unsigned long)z_deg(G)) * norm) + 1;
}

// Factor a monic squarefree integer polynomial.
std::vector<QPoly> factor_monic_squarefree_z(const ZPoly& G) {
    if (z_deg(G) <= 1) return {z_to_qpoly(G)};
    // pick a prime where G stays squarefree
    static const unsigned long primes[] = {3,    5,    7,    11,   13,   17,   19,  23,  29,
                                           31,   37,   41,   43,   47,   53,   59,  61,  67,
                                           71,   73,   79,   83,   89,   97,   101, 103, 107,
                                           109,  113,  127,  131,  137,  139,  149, 151, 157,
                                           163,  167,  173,  179,  181,  191,  193, 197, 199,
                                           211,  223,  227,  229,  233,  239,  241, 251, 257,
                                           263,  269,  271,  277,  281,  283,  293, 307, 311};
    for (unsigned long pl : primes) {
        Zp F{pl};
        PolyP fp;
        for (const auto& c : G) {
            Int r = c % Int((long)pl);
            if (r < 0) r += Int((long)pl);
            fp.c.push_back(r.get_ui());
        }
        fp.trim();
        if (fp.degree() != z_deg(G)) continue; // lc vanished (monic: cannot) — defensive
        PolyP d = p_deriv(F, fp);
        if (d.is_zero()) continue;
        if (p_gcd(F, fp, d).degree() != 0) continue;

        auto mods = factor_mod_p(F, p_monic(F, fp));
        if (mods.size() == 1) return {z_to_qpoly(G)};
        std::sort(mods.begin(), mods.end(),
                  [](const PolyP& a, const PolyP& b) { return a.degree() < b.degree(); });

        Int B = mignotte_bound(G);
        Int pK((long)pl);
        while (pK <= 2 * B) pK = pK * pK;
        auto lifted = hensel_lift_list(z_reduce(G, pK), mods, F, pK);

        // recombination over subsets
        std::vector<QPoly> out;
        ZPoly rem = G;
        std::vector<ZPoly> pool = lifted;
        size_t take = 1;
        while (2 * take <= pool.size()) {
            bool found = false;
            std::vector<size_t> idx(take);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                ZPoly cand{Int(1)};
                for (size_t i : idx) cand = z_mul(cand, pool[i], pK);
                cand = z_symmetric(std::move(cand), pK);
                QPoly candq = z_to_qpoly(cand);
                QPoly remq = z_to_qpoly(rem);
                auto [q, r] = divmod(remq, candq);
                if (r.is_zero()) {
                    out.push_back(candq);
                    rem = z_from_qpoly(q);
                    std::vector<ZPoly> np;
                    for (size_t i = 0; i < pool.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
                    pool = std::move(np);
                    found = true;
                    break;
                }
                // next combination
                long j = (long)take - 1;
                while (j >= 0 && idx[(size_t)j] == pool.size() - take + (size_t)j) --j;
                if (j < 0) break;
                ++idx[(size_t)j];
                for (size_t l = (size_t)j + 1; l < take; ++l) idx[l] = idx[l - 1] + 1;
            }
            if (!found) ++take;
        }
        if (z_deg(rem) > 0) out.push_back(z_to_qpoly(rem));
        return out;
    }
    fail(errc::internal, "no usable prime for modular factorization");
}

} // namespace

std::vector<long> factor_degrees_mod_p(const QPoly& f, unsigned long p) {
    if (f.degree() < 1) return {};
    Zp F{p};
    Int pz((long)p);
    PolyP fp;
    for (const auto& c : f.coeffs()) {
        if (den(c) % pz == 0) return {};
        Int dinv;
        mpz_invert(dinv.get_mpz_t(), den(c).get_mpz_t(), pz.get_mpz_t());
        Int r = (num(c) % pz) * dinv % pz;
        if (r < 0) r += pz;
        fp.c.push_back(r.get_ui());
    }
    fp.trim();
    if (fp.degree() != f.degree()) return {};
    PolyP d = p_deriv(F, fp);
    if (d.is_zero()) return {};
    if (p_gcd(F, fp, d).degree() != 0) return {};

    // distinct-degree split is enough for the degree multiset
    std::vector<long> out;
    PolyP g = p_monic(F, fp);
    PolyP x;
    x.c = {0, 1};
    PolyP w = x;
    long deg = 0;
    while (g.degree() > 0) {
        ++deg;
        if (2 * deg > g.degree()) {
            out.push_back(g.degree());
            break;
        }
        w = p_powmod(F, w, Int((long)p), g);
        PolyP diff = p_sub(F, w, x);
        PolyP h = diff.is_zero() ? g : p_gcd(F, diff, g);
        if (h.degree() > 0) {
            for (long i = 0; i < h.degree() / deg; ++i) out.push_back(deg);
            g = p_divmod(F, g, h).first;
            w = p_mod(F, w, g);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

QFactorization factor_over_Q(const QPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "factor_over_Q(0)");
    if (f.degree() > kFactorDegreeCap)
        fail(errc::degree_too_large, "factor cap is degree 12");
    return factor_over_Q_internal(f);
}

QFactorization factor_over_Q_internal(const QPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "factor_over_Q(0)");
    QFactorization out;
    out.constant = f.lc();
    if (f.degree() == 0) return out;

    for (const auto& [sf, mult] : squarefree_decomposition(f)) {
        // x^v factor
        QPoly g = sf;
        long v = g.valuation();
        if (v > 0) {
            out.factors.emplace_back(QPoly::var(), mult * (unsigned)v);
            std::vector<Rat> cs(g.coeffs().begin() + v, g.coeffs().end());
            g = QPoly(std::move(cs));
        }
        if (g.degree() < 1) continue;
        // monic change of variable y = lc * x to reach a monic integer model
        auto [gi, c0] = primitive_integer(g);
        (void)c0;
        Int lcz = num(gi.lc());
        QPoly gm;
        {
            // G(y) = lc^(n-1) * g(y/lc), monic integer
            long n = gi.degree();
            std::vector<Rat> cs((size_t)n + 1);
            for (long i = 0; i <= n; ++i)
                cs[(size_t)i] = gi.coeff((size_t)i) * Rat(pow_int(lcz, (unsigned long)(n - 1 - i >= 0 ? n - 1 - i : 0)));
            // for i = n this is lc^(−1)*lc = 1 handled below
            cs[(size_t)n] = Rat(1);
            gm = QPoly(std::move(cs));
        }
        auto irr = factor_monic_squarefree_z(z_from_qpoly(gm));
        for (auto& h : irr) {
            // map back: roots of g are y/lc for y a root of h
            long dh = h.degree();
            std::vector<Rat> cs((size_t)dh + 1);
            for (long i = 0; i <= dh; ++i)
                cs[(size_t)i] = h.coeff((size_t)i) * Rat(pow_int(lcz, (unsigned long)i));
            QPoly hb = QPoly(std::move(cs)).monic();
            out.factors.emplace_back(hb, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (long i = a.first.degree(); i >= 0; --i) {
            const Rat x = a.first.coeff((size_t)i), y = b.first.coeff((size_t)i);
            if (x != y) return x < y;
        }
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible_over_Q(const QPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_over_Q(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

unsigned euler_phi(unsigned n) {
    unsigned r = n;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) r -= r / n;
    return r;
}

QPoly cyclotomic(unsigned n) {
    // x^n - 1 divided by the proper cyclotomic divisors
    std::vector<Rat> cs((size_t)n + 1, Rat(0));
    cs[0] = Rat(-1);
    cs[n] = Rat(1);
    QPoly f(std::move(cs));
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) f = f / cyclotomic(d);
    return f;
}

QPoly cos2pi_min_poly(unsigned n) {
    if (n == 0) fail(errc::degenerate, "cos2pi_min_poly(0)");
    if (n == 1) return QPoly{Rat(-2), Rat(1)};
    if (n == 2) return QPoly{Rat(2), Rat(1)};
    QPoly phi = cyclotomic(n);
    // resultant_y(Phi_n(y), y^2 - z*y + 1), interpolated in z
    unsigned dz = euler_phi(n);
    std::vector<std::pair<Rat, Rat>> pts;
    for (unsigned i = 0; i <= dz; ++i) {
        Rat z((long)i);
        QPoly quad{Rat(1), -z, Rat(1)};
        pts.emplace_back(z, resultant(phi, quad));
    }
    QPoly res = interpolate(pts);
    QPoly psi = squarefree_part(res);
    if (psi.degree() != (long)(dz / 2)) fail(errc::internal, "cos2pi_min_poly degree mismatch");
    return psi;
}

QPoly interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
    QPoly acc;
    for (size_t i = 0; i < pts.size(); ++i) {
        QPoly term = QPoly::constant(Rat(1));
        Rat denom(1);
        for (size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            term = term * QPoly{-pts[j].first, Rat(1)};
            denom *= (pts[i].first - pts[j].first);
        }
        acc = acc + term * (pts[i].second / denom);
    }
    return acc;
}

} // namespace gencover
