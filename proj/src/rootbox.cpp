#include "gencover/rootbox.hpp"

#include <algorithm>
#include <complex>

namespace gencover {

int box_order(const Box& a, const Box& b) {
    Rat ar = a.re_center(), br = b.re_center();
    if (ar != br) return ar < br ? -1 : 1;
    Rat ai = a.im_center(), bi = b.im_center();
    if (ai != bi) return ai < bi ? -1 : 1;
    return 0;
}

Rat abs2_eval(const QPoly& f, const Rat& re, const Rat& im) {
    // Horner over Q(i)
    Rat ar(0), ai(0);
    for (size_t k = f.coeffs().size(); k-- > 0;) {
        Rat nr = ar * re - ai * im + f.coeff(k);
        Rat ni = ar * im + ai * re;
        ar = nr;
        ai = ni;
    }
    return ar * ar + ai * ai;
}

namespace {

// Rational lower bound for sqrt(x), x >= 0; within a factor ~1e-6 of exact.
Rat sqrt_lower(const Rat& x) {
    if (x <= 0) return Rat(0);
    Int scale = pow_int(Int(10), 12);
    Int n = num(x) * scale / den(x); // floor(x * 10^12)
    if (n == 0) {
        // very small: crude but valid lower bound x/2 <= sqrt(x) fails for x<... use x itself
        return x / 2 < 1 ? x / 2 : Rat(1); // x < 1e-12 here, sqrt(x) > x > x/2
    }
    return make_rat(isqrt(n), pow_int(Int(10), 6));
}

// Rational upper bound for sqrt(x).
Rat sqrt_upper(const Rat& x) {
    if (x <= 0) return Rat(0);
    Int scale = pow_int(Int(10), 12);
    Int n = num(x) * scale / den(x) + 1;
    return make_rat(isqrt(n) + 1, pow_int(Int(10), 6));
}

struct RC {
    Rat re, im;
};

RC newton_step(const QPoly& f, const QPoly& fp, const RC& z) {
    // z - f(z)/f'(z) in exact rational complex arithmetic
    Rat fr(0), fi(0), dr(0), di(0);
    for (size_t k = f.coeffs().size(); k-- > 0;) {
        Rat nr = fr * z.re - fi * z.im + f.coeff(k);
        Rat ni = fr * z.im + fi * z.re;
        fr = nr;
        fi = ni;
    }
    for (size_t k = fp.coeffs().size(); k-- > 0;) {
        Rat nr = dr * z.re - di * z.im + fp.coeff(k);
        Rat ni = dr * z.im + di * z.re;
        dr = nr;
        di = ni;
    }
    Rat d2 = dr * dr + di * di;
    if (d2 == 0) return z;
    // f/f' = (fr + i fi) * conj(dr + i di) / |d|^2
    Rat qr = (fr * dr + fi * di) / d2;
    Rat qi = (fi * dr - fr * di) / d2;
    return {z.re - qr, z.im - qi};
}

Rat round_to_grid(const Rat& x, const Int& grid) {
    // nearest multiple of 1/grid
    Int n = num(x) * grid;
    Int d = den(x);
    Int q = floor_div(2 * n + d, 2 * d); // round(n/d)
    return make_rat(q, grid);
}

std::vector<std::complex<double>> durand_kerner(const QPoly& f) {
    size_t d = (size_t)f.degree();
    std::vector<std::complex<double>> c(d + 1);
    double scale = 0;
    for (size_t i = 0; i <= d; ++i) scale = std::max(scale, std::abs(f.coeff(i).get_d()));
    if (scale == 0) scale = 1;
    for (size_t i = 0; i <= d; ++i) c[i] = f.coeff(i).get_d() / scale;
    for (size_t i = 0; i <= d; ++i) c[i] /= c[d];

    std::vector<std::complex<double>> z(d);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1, 0);
    for (size_t i = 0; i < d; ++i) {
        acc *= seed;
        z[i] = acc;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> r = 0;
        for (size_t i = d + 1; i-- > 0;) r = r * x + c[i];
        return r;
    };
    for (int it = 0; it < 600; ++it) {
        double moved = 0;
        for (size_t i = 0; i < d; ++i) {
            std::complex<double> denom(1, 0);
            for (size_t j = 0; j < d; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (denom == std::complex<double>(0, 0)) denom = 1e-12;
            std::complex<double> delta = eval(z[i]) / denom;
            z[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return z;
}

} // namespace

Rat separation_lower_bound(const QPoly& f) {
    // Mahler: sep(f) > sqrt(3*|disc|/ d^(d+2)) / ||f||_2^(d-1), integer model.
    auto [g, c] = primitive_integer(f);
    (void)c;
    long d = g.degree();
    if (d < 2) return Rat(1);
    Rat disc = discriminant(g);
    if (disc == 0) fail(errc::inseparable, "separation bound needs a squarefree polynomial");
    Rat q = Rat(3) * abs(disc) / Rat(pow_int(Int(d), (unsigned long)(d + 2)));
    Rat lo = sqrt_lower(q);
    Int n2 = 0;
    for (const auto& co : g.coeffs()) n2 += num(co) * num(co);
    Rat norm_up = sqrt_upper(Rat(n2));
    Rat denom = pow_rat(norm_up, d - 1);
    Rat sep = lo / denom;
    if (sep <= 0) fail(errc::internal, "separation bound collapsed");
    return sep;
}

std::vector<Box> isolate_roots(const QPoly& f) {
    if (f.degree() < 1) fail(errc::wrong_degree, "isolate_roots needs degree >= 1");
    long d = f.degree();
    if (d == 1) {
        Rat r = -f.coeff(0) / f.coeff(1);
        return {Box::point(r)};
    }
    if (!is_separable(f)) fail(errc::inseparable, "isolate_roots needs a squarefree polynomial");

    Rat sep = separation_lower_bound(f);
    Rat tol = sep / 100;
    Rat tol2 = tol * tol;
    Rat lc2 = f.lc() * f.lc();
    // accept z when (|f(z)|/|lc|)^(1/d) <= tol, i.e. |f(z)|^2 <= lc^2 * tol^(2d)
    Rat accept = lc2 * pow_rat(tol2, d);

    // Real roots by Sturm bisection: exact, independent of numerics.
    std::vector<Box> out;
    Rat bound = root_bound(f);
    int nreal = sturm_count(f, -bound, bound);
    std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}}, real_ivals;
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int cnt = sturm_count(f, a, b);
        if (cnt == 0) continue;
        if (cnt == 1 && (b - a) < sep / 4) {
            real_ivals.emplace_back(a, b);
            continue;
        }
        Rat mid = (a + b) / 2;
        if (f.eval(mid) == 0) {
            // rational root: exact point interval
            if (cnt == 1) {
                real_ivals.emplace_back(mid, mid);
                continue;
            }
            // shift the cut slightly off the root
            mid = mid + (b - a) / 1000;
        }
        stack.emplace_back(a, mid);
        stack.emplace_back(mid, b);
    }
    if ((long)real_ivals.size() != nreal) fail(errc::internal, "real root isolation miscount");

    long npairs = (d - nreal) / 2;
    if (nreal + 2 * npairs != d) fail(errc::internal, "real/complex root count mismatch");

    std::vector<RC> centers;
    if (npairs > 0) {
        auto seeds = durand_kerner(f);
        QPoly fp = f.derivative();
        // keep numeric roots with positive imaginary part
        std::vector<RC> cand;
        for (const auto& s : seeds) {
            if (s.imag() <= 0) continue;
            Int grid = pow_int(Int(2), 48);
            RC z{round_to_grid(Rat(s.real()), grid), round_to_grid(Rat(s.imag()), grid)};
            for (int round_bits = 64; round_bits <= 1024; round_bits *= 2) {
                if (abs2_eval(f, z.re, z.im) <= accept) break;
                Int g2 = pow_int(Int(2), (unsigned long)round_bits);
                RC nz = newton_step(f, fp, z);
                z = {round_to_grid(nz.re, g2), round_to_grid(nz.im, g2)};
            }
            if (abs2_eval(f, z.re, z.im) <= accept && z.im > sep / 4) cand.push_back(z);
        }
        // certified centers within sep/2 of each other approximate the same
        // root (distinct roots are >= sep apart): dedup, then count must match
        Rat sep2 = sep * sep / 4;
        std::vector<RC> uniq;
        for (const auto& z : cand) {
            bool dup = false;
            for (const auto& w : uniq) {
                Rat dr = z.re - w.re, di = z.im - w.im;
                if (dr * dr + di * di < sep2) {
                    dup = true;
                    break;
                }
            }
            if (!dup) uniq.push_back(z);
        }
        if ((long)uniq.size() != npairs) fail(errc::precision_exceeded, "complex root certification failed");
        centers = std::move(uniq);
    }

    Rat h = sep / 4;
    for (const auto& [a, b] : real_ivals) out.push_back(Box{a, b, -h, h});
    std::sort(out.begin(), out.end(), [](const Box& x, const Box& y) { return box_order(x, y) < 0; });

    std::vector<Box> cplx;
    for (const auto& z : centers) {
        cplx.push_back(Box{z.re - h, z.re + h, z.im - h, z.im + h});
        cplx.push_back(Box{z.re - h, z.re + h, -z.im - h, -z.im + h});
    }
    std::sort(cplx.begin(), cplx.end(), [](const Box& x, const Box& y) { return box_order(x, y) < 0; });
    out.insert(out.end(), cplx.begin(), cplx.end());
    return out;
}

} // namespace gencover
