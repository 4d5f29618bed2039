#ifndef GENCOVER_BIPOLY_HPP
#define GENCOVER_BIPOLY_HPP

#include "gencover/numfield.hpp"

#include <map>

namespace gencover {

// P(T, Y) over k, sparse (deg_T, deg_Y) -> coefficient. The toolkit's
// central input object; most algorithms view it through y_coeff(j), the
// coefficient of Y^j as a polynomial in T.
class BiPoly {
  public:
    using Key = std::pair<long, long>; // (deg_T, deg_Y)

    BiPoly() = default;
    explicit BiPoly(FieldPtr field) : field_(std::move(field)) {}

    static BiPoly from_y_coeffs(const std::vector<KPoly>& ys, FieldPtr field = nullptr);

    const FieldPtr& field() const { return field_; }
    const std::map<Key, NFElem>& terms() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    long deg_y() const;
    long deg_t() const;
    NFElem coeff(long dt, long dy) const;
    void set_coeff(long dt, long dy, const NFElem& v);

    KPoly y_coeff(long j) const;
    std::vector<KPoly> y_coeffs() const; // index = Y-degree

    bool monic_in_y() const;

    // specialize T = t0; result is a polynomial in Y over k
    KPoly eval_t(const NFElem& t0) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

  private:
    std::map<Key, NFElem> c_;
    FieldPtr field_;
};

// Discriminant of P with respect to Y, a polynomial in T over k.
// Zero iff P is inseparable over k(T).
KPoly disc_y(const BiPoly& p);

BiPoly derivative_y(const BiPoly& p);

bool is_separable_y(const BiPoly& p);

// All roots y(T) in k[T] of P monic in Y (rational-function roots are
// integral, hence polynomial). Interpolation through specializations.
std::vector<KPoly> polynomial_roots_in_T(const BiPoly& p);

// Exact irreducibility of P over k(T) for deg_Y <= 4 (linear factors by
// interpolation, quadratic splits by the alpha^2-resolvent). For deg_Y 5..8
// certifies irreducibility via an irreducible specialization when one is
// found; a certified-reducible answer exhibits a factor.
bool is_irreducible_over_kT(const BiPoly& p);

// f/g is a square in k(T) (over_closure = false) or in kbar(T)
// (over_closure = true: every irreducible factor to even multiplicity).
bool rat_func_is_square(const KPoly& f, const KPoly& g, bool over_closure, const FieldPtr& k);

// Y-coefficients of p(T, Z + s(T)) given those of p.
std::vector<KPoly> shift_y_coeffs(const std::vector<KPoly>& cs, const KPoly& s);

// Coefficient-wise image of p in a larger field.
BiPoly map_bipoly(const BiPoly& p, const FieldPtr& M, const NFElem& base_gen_image);

} // namespace gencover

#endif
