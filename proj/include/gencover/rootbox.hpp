#ifndef GENCOVER_ROOTBOX_HPP
#define GENCOVER_ROOTBOX_HPP

#include "gencover/poly.hpp"

namespace gencover {

// Axis-aligned rectangle with rational corners in the complex plane.
struct Box {
    Rat re_lo, re_hi, im_lo, im_hi;

    Rat re_center() const { return (re_lo + re_hi) / 2; }
    Rat im_center() const { return (im_lo + im_hi) / 2; }
    bool is_real() const { return im_lo <= 0 && 0 <= im_hi; }
    bool is_point() const { return re_lo == re_hi && im_lo == im_hi; }

    static Box point(const Rat& re, const Rat& im = Rat(0)) { return {re, re, im, im}; }

    friend bool operator==(const Box& a, const Box& b) {
        return a.re_lo == b.re_lo && a.re_hi == b.re_hi && a.im_lo == b.im_lo && a.im_hi == b.im_hi;
    }
};

// (re, im) lexicographic on centers; total order for deterministic output.
int box_order(const Box& a, const Box& b);

// Isolating rectangles for all complex roots of an irreducible f over Q,
// in canonical order: real roots ascending, then non-real roots by
// (Re, Im) center lexicographic. Each box contains exactly one root, boxes
// are pairwise disjoint, conjugate roots get mirrored boxes.
//
// Numeric seeds only propose candidates; every accept decision is made with
// exact rational arithmetic against a root-separation lower bound.
std::vector<Box> isolate_roots(const QPoly& f);

// Rational complex evaluation |f(re + i*im)|^2, exact.
Rat abs2_eval(const QPoly& f, const Rat& re, const Rat& im);

// Rational lower bound for the minimal distance between distinct roots of a
// squarefree f (Mahler).
Rat separation_lower_bound(const QPoly& f);

} // namespace gencover

#endif
