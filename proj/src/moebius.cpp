#include "gencover/build.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace gencover {

MoebiusMap MoebiusMap::make(const NFElem& a, const NFElem& b, const NFElem& c, const NFElem& d) {
    MoebiusMap m{a, b, c, d};
    if (m.det().is_zero()) fail(errc::degenerate, "Moebius map needs ad - bc != 0");
    // canonical scaling: first nonzero of (a, b, c, d) becomes 1
    const NFElem* lead = nullptr;
    for (const NFElem* x : {&m.a, &m.b, &m.c, &m.d})
        if (!x->is_zero()) {
            lead = x;
            break;
        }
    NFElem inv = lead->inverse();
    m.a = m.a * inv;
    m.b = m.b * inv;
    m.c = m.c * inv;
    m.d = m.d * inv;
    return m;
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& o) const {
    // matrix product [this][o]
    return make(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

std::optional<NFElem> MoebiusMap::apply_point(const std::optional<NFElem>& t) const {
    if (!t) {
        // image of infinity
        if (c.is_zero()) return std::nullopt;
        return a / c;
    }
    NFElem den = c * *t + d;
    if (den.is_zero()) return std::nullopt;
    return (a * *t + b) / den;
}

BiPoly moebius_apply(const BiPoly& p, const MoebiusMap& m) {
    long n = p.deg_y();
    if (n < 1 || !p.monic_in_y()) fail(errc::degenerate, "moebius_apply wants monic-in-Y");
    if (m.det().is_zero()) fail(errc::degenerate, "degenerate Moebius map");

    KPoly num{m.b, m.a};  // aT + b, low-first
    KPoly den{m.d, m.c};  // cT + d

    // c_j(m(T)) = chat_j(T) / den^(deg c_j)
    auto cs = p.y_coeffs();
    std::vector<KPoly> chat((size_t)n + 1);
    std::vector<long> D((size_t)n + 1, 0);
    for (long j = 0; j <= n; ++j) {
        const KPoly& c = cs[(size_t)j];
        if (c.is_zero()) continue;
        long dj = c.degree();
        D[(size_t)j] = dj;
        // homogeneous substitution: sum c_i * num^i * den^(dj - i)
        KPoly acc;
        for (long i = 0; i <= dj; ++i) {
            KPoly term = KPoly::constant(c.coeff((size_t)i));
            term = term * num.pow((unsigned long)i) * den.pow((unsigned long)(dj - i));
            acc = acc + term;
        }
        chat[(size_t)j] = acc;
    }

    // rescale Y by the minimal power of (cT + d) that clears denominators
    long mexp = 0;
    for (long j = 0; j < n; ++j)
        if (!chat[(size_t)j].is_zero()) mexp = std::max(mexp, (D[(size_t)j] + (n - j) - 1) / (n - j));

    std::vector<KPoly> out((size_t)n + 1);
    for (long j = 0; j <= n; ++j) {
        if (chat[(size_t)j].is_zero()) continue;
        long e = mexp * (n - j) - D[(size_t)j];
        out[(size_t)j] = chat[(size_t)j] * den.pow((unsigned long)e);
    }
    BiPoly r = BiPoly::from_y_coeffs(out, p.field());
    if (!r.monic_in_y()) fail(errc::internal, "moebius_apply: lost monicity");
    return r;
}

namespace {

// Gaussian elimination over Q; returns one solution of A x = b or nullopt.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
    size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    std::vector<long> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && A[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        std::swap(b[piv], b[r]);
        Rat inv = Rat(1) / A[r][c];
        for (size_t j = c; j < cols; ++j) A[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rat f = A[i][c];
            for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back((long)c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[(size_t)pivot_col[i]] = b[i];
    return x;
}

struct PointSet {
    std::vector<Rat> rationals;      // finite rational points, sorted
    bool has_infinity = false;
    std::vector<QPoly> orbits;       // irreducible minimal polynomials, deg >= 2
};

PointSet classify_points(const std::vector<AlgPoint>& s, const FieldPtr& k) {
    PointSet out;
    std::set<std::string> seen;
    for (const auto& p : s) {
        if (p.at_infinity) {
            out.has_infinity = true;
        } else if (p.rational) {
            if (!p.value.is_rational()) fail(errc::unsupported, "moebius_between needs base field Q");
            out.rationals.push_back(p.value.as_rat());
        } else {
            if (k) fail(errc::unsupported, "moebius_between orbits need base field Q");
            QPoly m = rational_poly(*p.min_poly).monic();
            std::string key;
            for (const auto& c : m.coeffs()) key += to_string(c) + ",";
            if (seen.insert(key).second) out.orbits.push_back(m);
        }
    }
    std::sort(out.rationals.begin(), out.rationals.end());
    out.rationals.erase(std::unique(out.rationals.begin(), out.rationals.end()), out.rationals.end());
    return out;
}

size_t total_points(const PointSet& s) {
    size_t n = s.rationals.size() + (s.has_infinity ? 1 : 0);
    for (const auto& m : s.orbits) n += (size_t)m.degree();
    return n;
}

// candidate maps sending an ordered rational/infinity triple to another
using PPoint = std::optional<Rat>; // nullopt = infinity

MoebiusMap three_point_map(const std::array<PPoint, 3>& from, const std::array<PPoint, 3>& to) {
    // W sends (p1, p2, p3) to (0, 1, infinity); M = W_to^{-1} o W_from
    auto standard = [](const std::array<PPoint, 3>& p) {
        // rows of the matrix for W(x) = ((x - p1)(p2 - p3)) / ((x - p3)(p2 - p1))
        // with the usual limits when one of the points is infinity
        Rat a, b, c, d;
        if (!p[0]) { // p1 = inf: W = (p2 - p3)/(x - p3)
            a = 0, b = *p[1] - *p[2], c = 1, d = -*p[2];
        } else if (!p[1]) { // p2 = inf: W = (x - p1)/(x - p3)
            a = 1, b = -*p[0], c = 1, d = -*p[2];
        } else if (!p[2]) { // p3 = inf: W = (x - p1)/(p2 - p1)
            a = 1, b = -*p[0], c = 0, d = *p[1] - *p[0];
        } else {
            a = *p[1] - *p[2], b = -*p[0] * (*p[1] - *p[2]);
            c = *p[1] - *p[0], d = -*p[2] * (*p[1] - *p[0]);
        }
        return MoebiusMap::make(NFElem(a), NFElem(b), NFElem(c), NFElem(d));
    };
    MoebiusMap wf = standard(from), wt = standard(to);
    return wt.inverse().compose(wf);
}

long support_size(const MoebiusMap& m) {
    long s = 0;
    for (const NFElem* x : {&m.a, &m.b, &m.c, &m.d})
        if (!x->is_zero()) ++s;
    return s;
}

// canonical choice among valid maps: affine first, then fewest nonzero
// entries, then entrywise order
bool map_less(const MoebiusMap& x, const MoebiusMap& y) {
    bool ax = x.c.is_zero(), ay = y.c.is_zero();
    if (ax != ay) return ax;
    if (support_size(x) != support_size(y)) return support_size(x) < support_size(y);
    for (auto [px, py] : {std::pair{&x.a, &y.a}, {&x.b, &y.b}, {&x.c, &y.c}, {&x.d, &y.d}}) {
        int c = nf_order(*px, *py);
        if (c != 0) return c < 0;
    }
    return false;
}

bool maps_point_set(const MoebiusMap& m, const PointSet& s1, const PointSet& s2) {
    // rational points + infinity must map bijectively
    std::vector<PPoint> to;
    for (const auto& r : s2.rationals) to.push_back(r);
    if (s2.has_infinity) to.push_back(std::nullopt);
    auto find_and_erase = [&](const PPoint& v) {
        auto it = std::find(to.begin(), to.end(), v);
        if (it == to.end()) return false;
        to.erase(it);
        return true;
    };
    for (const auto& r : s1.rationals) {
        auto img = m.apply_point(NFElem(r));
        PPoint v = img ? PPoint(img->as_rat()) : PPoint();
        if (!find_and_erase(v)) return false;
    }
    if (s1.has_infinity) {
        auto img = m.apply_point(std::nullopt);
        PPoint v = img ? PPoint(img->as_rat()) : PPoint();
        if (!find_and_erase(v)) return false;
    }
    return to.empty();
}

} // namespace

std::optional<MoebiusMap> moebius_between(const std::vector<AlgPoint>& s1,
                                          const std::vector<AlgPoint>& s2, const FieldPtr& k) {
    if (s1.size() != s2.size() || s1.size() > 3) fail(errc::degenerate, "moebius_between needs |s1| = |s2| <= 3");
    PointSet a = classify_points(s1, k), b = classify_points(s2, k);
    if (total_points(a) != s1.size() || total_points(b) != s2.size())
        fail(errc::degenerate, "point sets must be Galois-stable and duplicate-free");

    // orbit degree multisets must match
    auto degs = [](const PointSet& s) {
        std::vector<long> d;
        for (const auto& m : s.orbits) d.push_back(m.degree());
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return std::nullopt;
    if (a.rationals.size() != b.rationals.size() || a.has_infinity != b.has_infinity)
        return std::nullopt;

    std::vector<MoebiusMap> candidates;

    size_t nrat = a.rationals.size() + (a.has_infinity ? 1 : 0);
    std::vector<PPoint> pa, pb;
    for (const auto& r : a.rationals) pa.push_back(r);
    if (a.has_infinity) pa.push_back(std::nullopt);
    for (const auto& r : b.rationals) pb.push_back(r);
    if (b.has_infinity) pb.push_back(std::nullopt);

    if (a.orbits.empty()) {
        if (nrat == 3) {
            std::vector<size_t> idx{0, 1, 2};
            do {
                candidates.push_back(three_point_map({pa[0], pa[1], pa[2]},
                                                     {pb[idx[0]], pb[idx[1]], pb[idx[2]]}));
            } while (std::next_permutation(idx.begin(), idx.end()));
        } else if (nrat == 2) {
            // compose the standard 2-point normalizers through (0, infinity)
            auto to01 = [](const PPoint& u, const PPoint& v) {
                // sends u -> 0, v -> infinity
                if (!u) return MoebiusMap::make(NFElem(0), NFElem(1), NFElem(1), NFElem(-*v)); // 1/(x - v)
                if (!v) return MoebiusMap::translation(NFElem(-*u));
                return MoebiusMap::make(NFElem(1), NFElem(-*u), NFElem(1), NFElem(-*v));
            };
            for (int swap = 0; swap < 2; ++swap) {
                PPoint t1 = swap ? pb[1] : pb[0];
                PPoint t2 = swap ? pb[0] : pb[1];
                candidates.push_back(to01(t1, t2).inverse().compose(to01(pa[0], pa[1])));
            }
        } else if (nrat == 1) {
            if (!pa[0] && !pb[0])
                candidates.push_back(MoebiusMap::identity());
            else if (pa[0] && pb[0])
                candidates.push_back(MoebiusMap::translation(NFElem(*pb[0] - *pa[0])));
            else if (pa[0] && !pb[0])
                candidates.push_back(MoebiusMap::make(NFElem(0), NFElem(1), NFElem(1), NFElem(-*pa[0])));
            else
                candidates.push_back(MoebiusMap::make(NFElem(*pb[0]), NFElem(1), NFElem(1), NFElem(0)));
        }
    } else {
        // orbits present: set up M(gamma1) = gamma2' as linear conditions over Q
        const QPoly& m1 = a.orbits[0];
        const QPoly& m2 = b.orbits[0];
        if (a.orbits.size() != 1) fail(errc::unsupported, "at most one non-rational orbit supported");
        FieldPtr K1 = NumberField::create_internal(m1);
        auto images = roots_in_field(lift_to_field(m2), K1);
        for (const auto& gamma2 : images) {
            // unknowns (alpha, beta, c, d): alpha*gamma + beta = gamma2 * (c*gamma + d)
            // in the basis of K1; plus optional rational point condition
            long deg = K1->degree();
            NFElem gamma = NFElem::generator(K1);
            std::vector<std::vector<Rat>> A;
            std::vector<Rat> rhs;
            auto coeffs_of = [&](const NFElem& e) {
                std::vector<Rat> v((size_t)deg, Rat(0));
                for (size_t i = 0; i < e.rep().size(); ++i) v[i] = e.rep()[i];
                return v;
            };
            auto gvec = coeffs_of(gamma);
            auto g2vec = coeffs_of(gamma2);
            auto g2g = coeffs_of(gamma2 * gamma);
            for (long i = 0; i < deg; ++i) {
                // row: alpha*gamma_i + beta*delta_{i0} - c*(gamma2*gamma)_i - d*(gamma2)_i = 0
                A.push_back({gvec[(size_t)i], i == 0 ? Rat(1) : Rat(0), -g2g[(size_t)i], -g2vec[(size_t)i]});
                rhs.push_back(Rat(0));
            }
            if (!pa.empty()) {
                // rational point condition: alpha*u + beta = v*(c*u + d), or the
                // infinity variants
                const PPoint& u = pa[0];
                const PPoint& v = pb[0];
                if (u && v) {
                    A.push_back({*u, Rat(1), -(*v) * (*u), -(*v)});
                    rhs.push_back(Rat(0));
                } else if (!u && !v) {
                    // M(inf) = inf: c = 0
                    A.push_back({Rat(0), Rat(0), Rat(1), Rat(0)});
                    rhs.push_back(Rat(0));
                } else if (u && !v) {
                    // M(u) = inf: c*u + d = 0
                    A.push_back({Rat(0), Rat(0), *u, Rat(1)});
                    rhs.push_back(Rat(0));
                } else {
                    // M(inf) = v: alpha = v*c
                    A.push_back({Rat(1), Rat(0), -(*v), Rat(0)});
                    rhs.push_back(Rat(0));
                }
            }
            // kernel vector: append a normalization row per free variable guess
            for (int pin = 0; pin < 4; ++pin) {
                auto A2 = A;
                auto r2 = rhs;
                std::vector<Rat> row(4, Rat(0));
                row[(size_t)pin] = Rat(1);
                A2.push_back(row);
                r2.push_back(Rat(1));
                auto sol = solve_linear(A2, r2);
                if (!sol) continue;
                NFElem aa((*sol)[0]), bb((*sol)[1]), cc((*sol)[2]), dd((*sol)[3]);
                if ((aa * dd - bb * cc).is_zero()) continue;
                candidates.push_back(MoebiusMap::make(aa, bb, cc, dd));
            }
        }
    }

    std::vector<MoebiusMap> valid;
    for (const auto& m : candidates) {
        if (!maps_point_set(m, a, b)) continue;
        // orbit images: M maps the roots of m1 onto roots of m2 exactly when
        // the numerator of m2((aT+b)/(cT+d)) is divisible by m1
        bool ok = true;
        for (const auto& mo : a.orbits) {
            // the candidate construction already enforces this; verify anyway
            KPoly num{NFElem(0) - m.b, m.a};
            (void)num;
            FieldPtr K1 = NumberField::create_internal(mo);
            NFElem gamma = NFElem::generator(K1);
            NFElem den = m.c * gamma + m.d;
            if (den.is_zero()) {
                ok = false;
                break;
            }
            NFElem img = (m.a * gamma + m.b) / den;
            bool hit = false;
            for (const auto& mb : b.orbits) {
                if (lift_to_field(mb).eval(img).is_zero()) hit = true;
            }
            if (!hit) ok = false;
        }
        if (ok) valid.push_back(m);
    }
    if (valid.empty()) return std::nullopt;
    std::sort(valid.begin(), valid.end(), map_less);
    return valid.front();
}

} // namespace gencover
