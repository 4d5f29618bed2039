#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gencover/factor.hpp"
#include "gencover/numfield.hpp"
#include "gencover/poly.hpp"
#include "gencover/rootbox.hpp"

using namespace gencover;

namespace {

QPoly qp(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return QPoly(std::move(v));
}

FieldPtr Qi() { return NumberField::create(qp({1, 0, 1}), 0); }
FieldPtr Qsqrt5() { return NumberField::create(qp({-5, 0, 1}), 1); } // +sqrt(5)
FieldPtr Qzeta3() { return NumberField::create(qp({1, 1, 1}), 0); }

} // namespace

TEST_CASE("rational invariants and helpers") {
    Rat q = make_rat(Int(6), Int(-4));
    CHECK(num(q) == -3);
    CHECK(den(q) == 2);
    CHECK(height(q) == 3);
    CHECK(is_square(Rat(Int(49), Int(4))));
    CHECK(!is_square(Rat(-4)));
    CHECK(squarefree_part(Int(72)) == 2);   // 72 = 2 * 36
    CHECK(squarefree_part(Int(-75)) == -3); // -75 = -3 * 25
    auto fs = factor_integer(Int(5451776));
    // 2^12 * 11^3
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].first == 2);
    CHECK(fs[0].second == 12);
    CHECK(fs[1].first == 11);
    CHECK(fs[1].second == 3);
}

TEST_CASE("height enumeration order") {
    auto v = rationals_of_height_upto(Int(2));
    REQUIRE(v.size() >= 7);
    CHECK(v[0] == Rat(0));
    CHECK(v[1] == Rat(1));
    CHECK(v[2] == Rat(-1));
    CHECK(v[3] == Rat(2));
    CHECK(v[4] == Rat(-2));
    CHECK(v[5] == make_rat(Int(1), Int(2)));
    CHECK(v[6] == make_rat(Int(-1), Int(2)));
}

TEST_CASE("polynomial arithmetic, resultant, discriminant") {
    QPoly f = qp({-1, 0, 1}); // x^2 - 1
    QPoly g = qp({1, 1});     // x + 1
    CHECK((f % g).is_zero());
    CHECK(resultant(qp({1, 0, 1}), qp({-3, 1})) == Rat(10)); // (3-i)(3+i)

    // disc(x^3 + px + q) = -4p^3 - 27q^2
    QPoly cubic = qp({1, 1, 0, 1});
    CHECK(discriminant(cubic) == Rat(-4 - 27));
    CHECK(discriminant(qp({-5, 0, 1})) == Rat(20));
}

TEST_CASE("squarefree machinery") {
    // spec: squarefree_part(-4T^3 - 27T^2) = T(T + 27/4)
    QPoly f{Rat(0), Rat(0), Rat(-27), Rat(-4)};
    QPoly sf = squarefree_part(f);
    QPoly expect{Rat(0), make_rat(Int(27), Int(4)), Rat(1)};
    CHECK(sf == expect);
    CHECK(squarefree_part(qp({0, 0, 1})) == qp({0, 1}));
    CHECK(squarefree_part(qp({5})) == qp({1}));

    auto dec = squarefree_decomposition(qp({0, 0, -27, -4}) * qp({0, 0, -27, -4}));
    unsigned total = 0;
    for (auto& [p, m] : dec) total += (unsigned)p.degree() * m;
    CHECK(total == 6);
}

TEST_CASE("factorization over Q: spec fixtures") {
    // T^2 - 1 -> (T-1)(T+1)
    auto f1 = factor_over_Q(qp({-1, 0, 1}));
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0].first == qp({-1, 1}));
    CHECK(f1.factors[1].first == qp({1, 1}));

    // T^2 - 3T + 9 irreducible (no rational roots, negative discriminant)
    CHECK(rational_roots(qp({9, -3, 1})).empty());
    auto f2 = factor_over_Q(qp({9, -3, 1}));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].first.degree() == 2);

    // T(T + 27/4)
    QPoly f{Rat(0), make_rat(Int(27), Int(4)), Rat(1)};
    auto f3 = factor_over_Q(f);
    REQUIRE(f3.factors.size() == 2);
    CHECK(f3.factors[0].first == qp({0, 1}));
    CHECK(f3.factors[1].first == QPoly{make_rat(Int(27), Int(4)), Rat(1)});

    CHECK_THROWS_AS((void)factor_over_Q(QPoly::var().pow(13)), error);
}

TEST_CASE("factorization reconstructs the input") {
    // a few deliberately awkward products
    std::vector<QPoly> polys = {
        qp({-1, 0, 1}) * qp({9, -3, 1}) * qp({9, -3, 1}),
        qp({2, 3}) * qp({-7, 0, 0, 2}) * qp({1, 1}),
        qp({1, 2, 3, 4, 5}),
        qp({-2, 0, 1}) * qp({-3, 0, 1}) * qp({-6, 0, 1}), // biquadratic-ish product
        qp({1, 1, 1, 1, 1, 1, 1}),                        // Phi_7
    };
    for (const auto& f : polys) {
        auto fac = factor_over_Q(f);
        QPoly prod = QPoly::constant(fac.constant);
        for (const auto& [g, m] : fac.factors) {
            CHECK(is_irreducible_over_Q(g));
            prod = prod * g.pow(m);
        }
        CHECK(prod == f);
    }
}

TEST_CASE("cyclotomic and cosine minimal polynomials") {
    CHECK(cyclotomic(1) == qp({-1, 1}));
    CHECK(cyclotomic(4) == qp({1, 0, 1}));
    CHECK(cyclotomic(12) == qp({1, 0, -1, 0, 1}));
    CHECK(cos2pi_min_poly(3) == qp({1, 1}));
    CHECK(cos2pi_min_poly(5) == qp({-1, 1, 1})); // x^2 + x - 1
    CHECK(cos2pi_min_poly(12) == qp({-3, 0, 1}));
}

TEST_CASE("real and complex root isolation") {
    // x^2 - 5: two real roots
    auto boxes = isolate_roots(qp({-5, 0, 1}));
    REQUIRE(boxes.size() == 2);
    CHECK(boxes[0].re_center() < 0);
    CHECK(boxes[1].re_center() > 0);
    CHECK(boxes[0].is_real());

    // x^2 + 1: conjugate pair
    auto bi = isolate_roots(qp({1, 0, 1}));
    REQUIRE(bi.size() == 2);
    CHECK(!bi[0].is_real());
    CHECK(bi[0].im_center() == -bi[1].im_center());

    // T^2 - 3T + 9: roots 3/2 +- (3*sqrt(3)/2) i
    auto bs = isolate_roots(qp({9, -3, 1}));
    REQUIRE(bs.size() == 2);
    CHECK(bs[0].re_center() == bs[1].re_center());
    Rat re = bs[0].re_center();
    CHECK(re > 1);
    CHECK(re < 2);

    // quintic with mixed roots
    auto b5 = isolate_roots(qp({-2, 1, -2, 1, 0, 1}));
    CHECK(b5.size() == 5);
}

TEST_CASE("number field arithmetic") {
    auto k = Qsqrt5();
    NFElem w = NFElem::generator(k);
    CHECK(w * w == NFElem(Rat(5)));
    NFElem inv = (w + NFElem(1)).inverse();
    CHECK((w + NFElem(1)) * inv == NFElem(1));

    // golden ratio satisfies x^2 + x - 1 = 0 for (-1+sqrt5)/2
    NFElem phi = (NFElem(-1) + w) / NFElem(2);
    CHECK(phi * phi + phi - NFElem(1) == NFElem(0));
    CHECK(min_poly_over_Q(phi) == qp({-1, 1, 1}));
}

TEST_CASE("root_in_field: spec fixtures") {
    auto k5 = Qsqrt5();
    auto r = root_in_field(qp({-5, 0, 1}), k5);
    REQUIRE(r.has_value());
    CHECK(*r * *r == NFElem(Rat(5)));

    CHECK(!root_in_field(qp({1, 0, 1}), nullptr).has_value());

    auto g = root_in_field(qp({-1, 1, 1}), k5);
    REQUIRE(g.has_value());
    CHECK(g->field() != nullptr);
    CHECK(*g * *g + *g - NFElem(1) == NFElem(0));
}

TEST_CASE("factor over a number field") {
    auto k5 = Qsqrt5();
    auto fac = factor_over_field(lift_to_field(qp({-5, 0, 1})), k5);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first.degree() == 1);
    CHECK(fac.factors[1].first.degree() == 1);

    // x^2 + 1 stays irreducible over Q(sqrt5)
    CHECK(is_irreducible_over_field(lift_to_field(qp({1, 0, 1})), k5));

    // multiplicities survive
    auto fac2 = factor_over_field(lift_to_field(qp({-5, 0, 1}) * qp({-5, 0, 1})), k5);
    unsigned total = 0;
    for (auto& [p, m] : fac2.factors) total += (unsigned)p.degree() * m;
    CHECK(total == 4);
}

TEST_CASE("roots of unity and cosines in small fields") {
    CHECK(has_root_of_unity(nullptr, 2));
    CHECK(!has_root_of_unity(nullptr, 4));
    CHECK(has_root_of_unity(Qi(), 4));
    CHECK(has_cos_of_root_of_unity(nullptr, 3));
    CHECK(!has_cos_of_root_of_unity(nullptr, 5));
    CHECK(has_cos_of_root_of_unity(Qsqrt5(), 5));
    CHECK(has_root_of_unity(Qzeta3(), 3));
    CHECK(has_root_of_unity(Qzeta3(), 6)); // -zeta3 is a primitive 6th root
}

TEST_CASE("zeta_n in k implies cos(2pi/n) in k, n = 1..20") {
    std::vector<FieldPtr> fields = {nullptr, Qi(), Qsqrt5(), Qzeta3()};
    for (const auto& k : fields)
        for (unsigned n = 1; n <= 20; ++n)
            if (has_root_of_unity(k, n)) CHECK(has_cos_of_root_of_unity(k, n));
}

TEST_CASE("flattening a tower") {
    auto k2 = NumberField::create(qp({-2, 0, 1}), 1); // Q(sqrt2), positive root
    auto ext = extend_field(k2, lift_to_field(qp({-3, 0, 1})));
    REQUIRE(ext.field);
    CHECK(ext.field->degree() == 4);
    CHECK(ext.base_gen_image * ext.base_gen_image == NFElem(Rat(2)));
    CHECK(ext.root * ext.root == NFElem(Rat(3)));
}

TEST_CASE("squares in fields") {
    auto k5 = Qsqrt5();
    CHECK(is_square_in_field(NFElem(Rat(5)), k5));
    CHECK(!is_square_in_field(NFElem(Rat(2)), k5));
    CHECK(is_square_in_field(NFElem(Rat(4)), nullptr));
    auto s = sqrt_in_field(NFElem(Rat(5)), k5);
    REQUIRE(s.has_value());
    CHECK(*s * *s == NFElem(Rat(5)));
}
