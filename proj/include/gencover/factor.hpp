#ifndef GENCOVER_FACTOR_HPP
#define GENCOVER_FACTOR_HPP

#include "gencover/poly.hpp"

namespace gencover {

inline constexpr long kFactorDegreeCap = 12;

struct QFactorization {
    Rat constant; // input = constant * prod factor^mult
    std::vector<std::pair<QPoly, unsigned>> factors; // monic irreducible, multiplicity
};

// Zassenhaus: squarefree split, factor mod p, Hensel lift, recombine.
// Degrees above kFactorDegreeCap are rejected with DegreeTooLarge.
QFactorization factor_over_Q(const QPoly& f);

// Same engine without the public degree cap; reserved for internal towers
// (flattened working fields go up to degree 24).
QFactorization factor_over_Q_internal(const QPoly& f);

bool is_irreducible_over_Q(const QPoly& f);

unsigned euler_phi(unsigned n);

QPoly cyclotomic(unsigned n);

// Minimal polynomial of 2cos(2*pi/n) over Q; degree phi(n)/2 for n >= 3.
QPoly cos2pi_min_poly(unsigned n);

// Lagrange interpolation through distinct sample points.
QPoly interpolate(const std::vector<std::pair<Rat, Rat>>& pts);

// Degrees of the irreducible factors of f mod p (distinct-degree split);
// empty when p is unusable (divides lc or a denominator, or f mod p is not
// squarefree).
std::vector<long> factor_degrees_mod_p(const QPoly& f, unsigned long p);

} // namespace gencover

#endif
