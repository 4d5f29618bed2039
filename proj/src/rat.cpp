#include "gencover/rat.hpp"

#include "gencover/errors.hpp"

#include <algorithm>

namespace gencover {

const char* errc_name(errc c) {
    switch (c) {
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::degree_too_large: return "DegreeTooLarge";
        case errc::inseparable: return "Inseparable";
        case errc::reducible: return "Reducible";
        case errc::non_integral_genus: return "NonIntegralGenus";
        case errc::branch_point: return "BranchPoint";
        case errc::group_too_large: return "GroupTooLarge";
        case errc::cyclotomic_obstruction: return "CyclotomicObstruction";
        case errc::unsupported: return "Unsupported";
        case errc::degenerate: return "Degenerate";
        case errc::wrong_degree: return "WrongDegree";
        case errc::singular: return "Singular";
        case errc::not_squarefree: return "NotSquarefree";
        case errc::unsupported_m: return "UnsupportedM";
        case errc::additive_small_prime: return "AdditiveSmallPrime";
        case errc::precision_exceeded: return "PrecisionExceeded";
        case errc::syntax_error: return "SyntaxError";
        case errc::unknown_variable: return "UnknownVariable";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) fail(errc::degenerate, "0^negative");
        return Rat(1) / pow_rat(base, -e);
    }
    Rat r = make_rat(pow_int(num(base), (unsigned long)e), pow_int(den(base), (unsigned long)e));
    return r;
}

Int height(const Rat& q) {
    Int n = abs(num(q));
    Int d = den(q);
    return std::max(n, d);
}

bool is_square(const Int& n) {
    if (sgn(n) < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(const Rat& q) { return is_square(num(q)) && is_square(den(q)); }

std::optional<Int> sqrt_exact(const Int& n) {
    if (!is_square(n)) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rat> sqrt_exact(const Rat& q) {
    auto n = sqrt_exact(num(q));
    auto d = sqrt_exact(den(q));
    if (!n || !d) return std::nullopt;
    return make_rat(*n, *d);
}

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int squarefree_part(const Int& n) {
    if (n == 0) return 0;
    Int d = n > 0 ? 1 : -1;
    for (const auto& [p, e] : factor_integer(abs(n)))
        if (e % 2 == 1) d *= p;
    return d;
}

bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

namespace {

Int pollard_rho(const Int& n) {
    // n composite, odd, not a perfect power of interest; returns a factor.
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEUL);
    while (true) {
        Int x = rng.get_z_range(n - 2) + 2;
        Int y = x;
        Int c = rng.get_z_range(n - 1) + 1;
        Int d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_rec(Int n, std::vector<Int>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

} // namespace

std::vector<std::pair<Int, unsigned>> factor_integer(Int n) {
    std::vector<std::pair<Int, unsigned>> out;
    if (n == 0) fail(errc::degenerate, "factor_integer(0)");
    n = abs(n);
    if (n == 1) return out;
    std::vector<Int> primes;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
        while (n % p == 0) {
            primes.push_back(Int(p));
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.emplace_back(primes[i], unsigned(j - i));
        i = j;
    }
    return out;
}

unsigned long val_p(const Int& n, const Int& p) {
    if (n == 0) fail(errc::degenerate, "val_p(0)");
    unsigned long v = 0;
    Int m = abs(n);
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

std::vector<Rat> rationals_of_height_upto(const Int& bound) {
    std::vector<Rat> out;
    for (Int h = 0; h <= bound; ++h) {
        if (h == 0) continue;
        // height exactly h: denominators first (smaller d first), then |num|.
        for (Int d = 1; d <= h; ++d) {
            if (d == h) {
                // |a| <= h with gcd(a, h) = 1, plus a = 0 when h = 1
                if (h == 1) out.push_back(Rat(0));
                for (Int a = 1; a <= h; ++a) {
                    if (gcd(a, d) != 1) continue;
                    out.push_back(make_rat(a, d));
                    out.push_back(make_rat(-a, d));
                }
            } else {
                // |a| = h exactly (otherwise height < h), gcd(a, d) = 1
                if (gcd(h, d) != 1) continue;
                out.push_back(make_rat(h, d));
                out.push_back(make_rat(-h, d));
            }
        }
    }
    return out;
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& n) { return n.get_str(); }

} // namespace gencover
