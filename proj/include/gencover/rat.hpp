#ifndef GENCOVER_RAT_HPP
#define GENCOVER_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gencover {

// Exact arithmetic is GMP throughout: mpz_class for integers, mpq_class for
// rationals. mpq_class keeps gcd(|num|, den) = 1 and den > 0 canonically.
using Int = mpz_class;
using Rat = mpq_class;

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

inline Rat make_rat(const Int& n, const Int& d) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline Rat rat_of(long n) { return Rat(n); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& n) { return sgn(n); }

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Floor of the exact rational quotient.
Int floor_div(const Int& a, const Int& b);

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

// max(|num|, den); the search-order height used by the enumerators.
Int height(const Rat& q);

bool is_square(const Int& n);
bool is_square(const Rat& q);

// Exact square root when n is a perfect square.
std::optional<Int> sqrt_exact(const Int& n);
std::optional<Rat> sqrt_exact(const Rat& q);

// Largest s with s^2 <= n (n >= 0).
Int isqrt(const Int& n);

// Squarefree part d of n: n = d*m^2 with d squarefree, sign kept on d.
Int squarefree_part(const Int& n);

bool is_prime(const Int& n);

// Trial division + Pollard rho; ascending (p, multiplicity) pairs.
std::vector<std::pair<Int, unsigned>> factor_integer(Int n);

unsigned long val_p(const Int& n, const Int& p);

// Reduced rationals ordered by height(q) = max(|num|, den), then smaller
// denominator, then smaller |numerator|, then positive before negative.
std::vector<Rat> rationals_of_height_upto(const Int& bound);

std::string to_string(const Rat& q);
std::string to_string(const Int& n);

} // namespace gencover

#endif
