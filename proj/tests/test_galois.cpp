#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gencover/galois.hpp"
#include "helpers.hpp"

using namespace gencover;
using namespace gencover::testing;

namespace {

FieldPtr Qi() { return NumberField::create(qp({1, 0, 1}), 0); }
FieldPtr Qsqrt5() { return NumberField::create(qp({-5, 0, 1}), 1); }

} // namespace

TEST_CASE("groups over k(T): fixtures") {
    CHECK(group_over_function_field(kummer2(), nullptr).group == GroupId::cyclic(2));
    CHECK(group_over_function_field(s3cubic(), nullptr).group == GroupId::symmetric(3));
    CHECK(group_over_function_field(s3cubic(), nullptr).group.order() == 6);
    CHECK(group_over_function_field(shanks(), nullptr).group == GroupId::cyclic(3));
    auto d4 = group_over_function_field(kummer(4), nullptr);
    CHECK(d4.group == GroupId::dihedral(4));
    CHECK(d4.group.order() == 8);
    CHECK(d4.certified);
    // same polynomial over Q(i) is cyclic
    CHECK(group_over_function_field(kummer(4, Qi()), Qi()).group == GroupId::cyclic(4));
}

TEST_CASE("quintic heuristics carry their marker") {
    auto f20 = group_over_function_field(kummer(5), nullptr);
    CHECK(!f20.certified);
    CHECK(f20.group.order() == 20);
}

TEST_CASE("specialization groups") {
    CHECK(group_of_specialization(kummer2(), NFElem(Rat(4)), nullptr) == GroupId::cyclic(1));
    CHECK(group_of_specialization(shanks(), NFElem(Rat(0)), nullptr) == GroupId::cyclic(3));
    CHECK(group_of_specialization(s3cubic(), NFElem(Rat(1)), nullptr) == GroupId::symmetric(3));
    // discriminant facts behind those answers
    CHECK(discriminant(qp({1, -3, 0, 1})) == Rat(81));
    CHECK(discriminant(qp({1, 1, 0, 1})) == Rat(-31));
}

TEST_CASE("specialization at a branch point is a typed error") {
    CHECK_THROWS_AS((void)group_of_specialization(kummer2(), NFElem(Rat(0)), nullptr), error);
    try {
        (void)group_of_specialization(kummer2(), NFElem(Rat(0)), nullptr);
    } catch (const error& e) {
        CHECK(e.code() == errc::branch_point);
    }
}

TEST_CASE("splitting field descriptors") {
    auto d5 = specialization_field(kummer2(), NFElem(Rat(5)), nullptr);
    CHECK(d5.degree == 2);
    REQUIRE(d5.kernel.has_value());
    CHECK(d5.kernel->as_rat() == Rat(5));

    auto d9 = specialization_field(kummer2(), NFElem(Rat(9)), nullptr);
    CHECK(d9.degree == 1);

    auto s3 = specialization_field(s3cubic(), NFElem(Rat(1)), nullptr);
    CHECK(s3.degree == 6);
    CHECK(s3.group == GroupId::symmetric(3));
    REQUIRE(s3.defining.has_value());
    CHECK(s3.defining->degree() == 6);
    CHECK(is_separable(*s3.defining));
    REQUIRE(s3.kernel.has_value());
    CHECK(s3.kernel->as_rat() == Rat(-31));

    // kernel is stable under recomputation and square scaling
    auto again = specialization_field(kummer2(), NFElem(Rat(5)), nullptr);
    CHECK(*again.kernel == *d5.kernel);
    CHECK(kernel_class(NFElem(Rat(20)), nullptr) == NFElem(Rat(5)));
    CHECK(kernel_class(NFElem(make_rat(Int(5), Int(4))), nullptr) == NFElem(Rat(5)));
}

TEST_CASE("specialization compatibility with base change (splitting fields)") {
    // kernel 5 at t0 = 5 becomes split over Q(sqrt5)
    auto k5 = Qsqrt5();
    CHECK(group_of_specialization(kummer2(), NFElem(Rat(5)), nullptr) == GroupId::cyclic(2));
    CHECK(group_of_specialization(kummer2(k5), NFElem(Rat(5)), k5) == GroupId::cyclic(1));
    // kernels 2 and 3 stay quadratic over Q(sqrt5)
    for (long t : {2, 3}) {
        CHECK(group_of_specialization(kummer2(k5), NFElem(Rat(t)), k5) == GroupId::cyclic(2));
        auto desc = specialization_field(kummer2(), NFElem(Rat(t)), nullptr);
        CHECK(desc.kernel->as_rat() == Rat(t));
    }
}

TEST_CASE("Hilbert smoke test: sampled specialization groups divide |G|") {
    struct Case {
        BiPoly p;
        long order;
    };
    std::vector<Case> cases = {{kummer2(), 2}, {shanks(), 3}, {s3cubic(), 6}, {kummer(4), 8}};
    for (const auto& c : cases) {
        int attained = 0, sampled = 0;
        for (const Rat& t0 : rationals_of_height_upto(Int(12))) {
            if (sampled >= 50) break;
            long o;
            try {
                o = group_of_specialization(c.p, NFElem(t0), nullptr).order();
            } catch (const error&) {
                continue; // branch point or inseparable sample
            }
            ++sampled;
            CHECK(c.order % o == 0);
            if (o == c.order) ++attained;
        }
        CHECK(sampled == 50);
        CHECK(attained >= 1);
    }
}

TEST_CASE("inertia invariant fixtures") {
    auto multiset_labels = [](const std::vector<InertiaClass>& v) {
        std::multiset<std::string> out;
        for (const auto& c : v) out.insert(c.label);
        return out;
    };
    CHECK(multiset_labels(inertia_invariant(s3cubic(), nullptr)) ==
          std::multiset<std::string>{"C2", "C2", "C3"});
    CHECK(multiset_labels(inertia_invariant(kummer2(), nullptr)) ==
          std::multiset<std::string>{"C2", "C2"});
    CHECK(multiset_labels(inertia_invariant(shanks(), nullptr)) ==
          std::multiset<std::string>{"C3", "C3"});
}

TEST_CASE("regularity and geometric orders") {
    CHECK(regularity(kummer2(), nullptr) == TriBool::True);
    CHECK(regularity(shanks(), nullptr) == TriBool::True);
    CHECK(regularity(s3cubic(), nullptr) == TriBool::True);
    // constant coefficients: Y^2 + 1 over Q is a constant extension
    BiPoly yi = bp({qp({1}), qp({0}), qp({1})});
    CHECK(regularity(yi, nullptr) == TriBool::False);
    CHECK(geometric_group_order(yi, nullptr) == 1);
    // Y^4 - T: arithmetic D4, geometric C4
    CHECK(geometric_group_order(kummer(4), nullptr) == 4);
    CHECK(regularity(kummer(4), nullptr) == TriBool::False);
    CHECK(regularity(kummer(4, Qi()), Qi()) == TriBool::True);
    // Y^4 - 2T^2: splits over Qbar(T) into conjugate quadratics, C2 geometric
    BiPoly w = bp({qp({0, 0, -2}), qp({0}), qp({0}), qp({0}), qp({1})});
    CHECK(group_over_function_field(w, nullptr).group == GroupId::dihedral(4));
    CHECK(geometric_group_order(w, nullptr) == 2);
    CHECK(regularity(lawful_evil_cover(), nullptr) == TriBool::True);
}

TEST_CASE("cover invariants assembly") {
    auto inv = cover_invariants(s3cubic(), nullptr);
    CHECK(inv.group == GroupId::symmetric(3));
    CHECK(inv.r == 3);
    CHECK(inv.e_tuple == std::vector<long>{2, 2, 3});
    CHECK(inv.genus == 0);
    CHECK(inv.regular == TriBool::True);
    CHECK(inv.all_branch_in_k);

    auto le = cover_invariants(lawful_evil_cover(), nullptr);
    CHECK(le.genus == 1);
    CHECK(le.r == 4);

    auto k4 = cover_invariants(kummer(4), nullptr);
    CHECK(k4.group.order() == 8);
    CHECK(k4.geometric_order == 4);
    CHECK(k4.genus == 0);
    CHECK(k4.regular == TriBool::False);
}
