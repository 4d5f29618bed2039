#ifndef GENCOVER_TEST_HELPERS_HPP
#define GENCOVER_TEST_HELPERS_HPP

#include "gencover/bipoly.hpp"

#include <initializer_list>

namespace gencover::testing {

inline QPoly qp(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return QPoly(std::move(v));
}

inline KPoly kp(std::initializer_list<long> cs) {
    std::vector<NFElem> v;
    for (long c : cs) v.emplace_back(c);
    return KPoly(std::move(v));
}

// BiPoly from Y-coefficients given as rational polynomials in T
inline BiPoly bp(std::initializer_list<QPoly> ys, FieldPtr field = nullptr) {
    std::vector<KPoly> v;
    for (const auto& c : ys) v.push_back(lift_to_field(c));
    return BiPoly::from_y_coeffs(v, std::move(field));
}

// --- fixture polynomials -------------------------------------------------

// Y^2 - T
inline BiPoly kummer2(FieldPtr k = nullptr) { return bp({qp({0, -1}), qp({0}), qp({1})}, k); }

// Y^n - T
inline BiPoly kummer(long n, FieldPtr k = nullptr) {
    std::vector<KPoly> ys((size_t)n + 1);
    ys[0] = kp({0, 1});
    ys[0] = KPoly() - ys[0];
    ys[(size_t)n] = kp({1});
    return BiPoly::from_y_coeffs(ys, std::move(k));
}

// Y^3 - T*Y^2 + (T - 3)*Y + 1
inline BiPoly shanks(FieldPtr k = nullptr) {
    return bp({qp({1}), qp({-3, 1}), qp({0, -1}), qp({1})}, k);
}

// Y^3 + T*Y + T
inline BiPoly s3cubic(FieldPtr k = nullptr) {
    return bp({qp({0, 1}), qp({0, 1}), qp({0}), qp({1})}, k);
}

// Y^2 - (T^3 - T^2 - 7T + 41/4)
inline BiPoly lawful_evil_cover(FieldPtr k = nullptr) {
    QPoly q{make_rat(Int(-41), Int(4)), Rat(7), Rat(1), Rat(-1)};
    return bp({q, qp({0}), qp({1})}, k);
}

// Y^2 - (T^2 + 1)
inline BiPoly gauss_branch(FieldPtr k = nullptr) { return bp({qp({-1, 0, -1}), qp({0}), qp({1})}, k); }

} // namespace gencover::testing

#endif
