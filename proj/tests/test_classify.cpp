#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gencover/classify.hpp"
#include "helpers.hpp"

#include <algorithm>

using namespace gencover;
using namespace gencover::testing;

namespace {

FieldPtr Qi() { return NumberField::create(qp({1, 0, 1}), 0); }

bool has_label(const ObstructionVerdict& v, ObstructionLabel l) {
    return std::find(v.labels.begin(), v.labels.end(), l) != v.labels.end();
}

} // namespace

TEST_CASE("the three generic fixtures classify with their cases") {
    auto a = decide_genericity(kummer2(), nullptr);
    CHECK(a.generic);
    CHECK(a.case_label == 'a');
    CHECK(a.certified);

    auto b = decide_genericity(shanks(), nullptr);
    CHECK(b.generic);
    CHECK(b.case_label == 'b');

    auto c = decide_genericity(s3cubic(), nullptr);
    CHECK(c.generic);
    CHECK(c.case_label == 'c');
}

TEST_CASE("negative controls") {
    auto v4 = decide_genericity(kummer(4), nullptr);
    CHECK(!v4.generic);
    bool mentions_group = false;
    for (const auto& f : v4.failures)
        if (f.find("D4") != std::string::npos || f.find("cyclic") != std::string::npos)
            mentions_group = true;
    CHECK(mentions_group);

    auto vg = decide_genericity(gauss_branch(), nullptr);
    CHECK(!vg.generic); // branch points +-i not rational

    // but Y^4 - T becomes generic over Q(i) (case a)
    auto va = decide_genericity(kummer(4, Qi()), Qi());
    CHECK(va.generic);
    CHECK(va.case_label == 'a');
}

TEST_CASE("generic implies genus-zero shape and no obstructions") {
    for (auto& p : {kummer2(), shanks(), s3cubic()}) {
        auto v = decide_genericity(p, nullptr);
        REQUIRE(v.generic);
        CHECK(genus_zero_shape(v.invariants.group, v.invariants.e_tuple));
        auto o = obstruction_report(p, nullptr);
        CHECK(o.labels.empty());
    }
}

TEST_CASE("obstruction labels: genus-one cover") {
    auto v = obstruction_report(lawful_evil_cover(), nullptr);
    CHECK(has_label(v, ObstructionLabel::NotParametricOver_K_U_for_ample_K));
    CHECK(!has_label(v, ObstructionLabel::NotParametricOver_KVU_for_alg_closed_K));
}

TEST_CASE("obstruction labels: D4 quartic") {
    auto v = obstruction_report(kummer(4), nullptr);
    CHECK(has_label(v, ObstructionLabel::NotParametricOver_KVU_for_alg_closed_K));
}

TEST_CASE("obstruction labels: irrational quadratic branch") {
    auto v = obstruction_report(gauss_branch(), nullptr);
    CHECK(has_label(v, ObstructionLabel::NotParametricOver_k_U));
    CHECK(!has_label(v, ObstructionLabel::NotParametricOver_K_U_for_ample_K));
}

TEST_CASE("any emitted label forces NotGeneric") {
    for (auto& p : {lawful_evil_cover(), kummer(4), gauss_branch()}) {
        auto o = obstruction_report(p, nullptr);
        if (!o.labels.empty()) CHECK(!decide_genericity(p, nullptr).generic);
    }
}

TEST_CASE("non-cyclic abelian subgroup detection") {
    CHECK(!has_noncyclic_abelian(GroupId::cyclic(12)));
    CHECK(has_noncyclic_abelian(GroupId::dihedral(4)));
    CHECK(!has_noncyclic_abelian(GroupId::dihedral(3)));
    CHECK(!has_noncyclic_abelian(GroupId::symmetric(3)));
    CHECK(has_noncyclic_abelian(GroupId::v4()));
    CHECK(has_noncyclic_abelian(GroupId::a4()));
    CHECK(has_noncyclic_abelian(GroupId::s4()));
    CHECK(has_noncyclic_abelian(GroupId::a5()));
    CHECK_THROWS_AS((void)has_noncyclic_abelian(GroupId::other(8)), error);
}

TEST_CASE("Kummer families are generic exactly when the cyclotomic condition holds") {
    // n = 2 over Q
    CHECK(decide_genericity(kummer(2), nullptr).generic);
    // n = 4 over Q(i)
    CHECK(decide_genericity(kummer(4, Qi()), Qi()).generic);
    // n = 6 over Q(zeta3)
    auto z3 = NumberField::create(qp({1, 1, 1}), 0);
    auto v6 = decide_genericity(kummer(6, z3), z3);
    CHECK(v6.generic);
    CHECK(v6.case_label == 'a');
    // n = 4 over Q fails
    CHECK(!decide_genericity(kummer(4), nullptr).generic);
}
