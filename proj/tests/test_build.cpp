#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gencover/build.hpp"
#include "helpers.hpp"

using namespace gencover;
using namespace gencover::testing;

namespace {

FieldPtr Qi() { return NumberField::create(qp({1, 0, 1}), 0); }

std::vector<long> e_of(const BiPoly& p) {
    std::vector<long> e;
    for (const auto& r : branch_data(p, p.field())) e.push_back(r.ram_index);
    std::sort(e.begin(), e.end());
    return e;
}

MoebiusMap qmap(long a, long b, long c, long d) {
    return MoebiusMap::make(NFElem(a), NFElem(b), NFElem(c), NFElem(d));
}

// deterministic pseudo-random invertible maps with small rational entries
std::vector<MoebiusMap> random_maps(size_t count, unsigned seed) {
    std::vector<MoebiusMap> out;
    unsigned long long s = seed * 2654435761ULL + 12345;
    auto next = [&]() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return (long)((s >> 33) % 7) - 3;
    };
    while (out.size() < count) {
        long a = next(), b = next(), c = next(), d = next();
        if (a * d - b * c == 0) continue;
        out.push_back(qmap(a, b, c, d));
    }
    return out;
}

} // namespace

TEST_CASE("moebius apply: spec fixtures") {
    CHECK(moebius_apply(kummer2(), MoebiusMap::identity()) == kummer2());
    // T -> T + 1 turns Y^2 - T into Y^2 - T - 1
    BiPoly shifted = moebius_apply(kummer2(), MoebiusMap::translation(NFElem(1)));
    CHECK(shifted == bp({qp({-1, -1}), qp({0}), qp({1})}));
    // T -> 1/T normalizes back to Y^2 - T
    CHECK(moebius_apply(kummer2(), MoebiusMap::inversion()) == kummer2());
}

TEST_CASE("moebius apply is a group action on branch data") {
    auto maps = random_maps(6, 7);
    for (size_t i = 0; i + 1 < maps.size(); i += 2) {
        const auto& m1 = maps[i];
        const auto& m2 = maps[i + 1];
        BiPoly lhs = moebius_apply(moebius_apply(s3cubic(), m1), m2);
        BiPoly rhs = moebius_apply(s3cubic(), m1.compose(m2));
        // the Y-rescalings need not telescope; the branch data must agree
        CHECK(e_of(lhs) == e_of(rhs));
    }
}

TEST_CASE("moebius invariance of verdict, group, e-tuple, genus") {
    std::vector<BiPoly> fixtures = {kummer2(), shanks(), s3cubic(), kummer(4), gauss_branch()};
    for (const auto& p : fixtures) {
        auto base_inv = cover_invariants(p, nullptr);
        auto base_v = decide_genericity(p, nullptr);
        for (const auto& m : random_maps(10, 1234)) {
            BiPoly q = moebius_apply(p, m);
            auto inv = cover_invariants(q, nullptr);
            CHECK(inv.group == base_inv.group);
            CHECK(inv.e_tuple == base_inv.e_tuple);
            CHECK(inv.genus == base_inv.genus);
            CHECK(inv.regular == base_inv.regular);
            auto v = decide_genericity(q, nullptr);
            CHECK(v.generic == base_v.generic);
            CHECK(v.case_label == base_v.case_label);
        }
    }
}

TEST_CASE("moebius_between: rational point sets") {
    auto inf = AlgPoint::infinity();
    auto pt = [](long v) { return AlgPoint::from_value(NFElem(v)); };
    auto ptq = [](const Rat& v) { return AlgPoint::from_value(NFElem(v)); };

    // ({0, inf}, {1, inf}) -> T + 1
    auto m = moebius_between({pt(0), inf}, {pt(1), inf}, nullptr);
    REQUIRE(m.has_value());
    CHECK(*m == MoebiusMap::translation(NFElem(1)));

    // ({0, 1, inf}, {0, -27/4, inf}) -> -27T/4
    auto m2 = moebius_between({pt(0), pt(1), inf}, {pt(0), ptq(make_rat(Int(-27), Int(4))), inf},
                              nullptr);
    REQUIRE(m2.has_value());
    CHECK(*m2 == MoebiusMap::scaling(NFElem(make_rat(Int(-27), Int(4)))));
    // and it maps the set correctly
    CHECK(m2->apply_point(NFElem(1))->as_rat() == make_rat(Int(-27), Int(4)));
}

TEST_CASE("moebius_between: conjugate orbits") {
    // {i, -i} -> {0, inf} has no map over Q (orbit types differ)
    AlgPoint conj;
    conj.min_poly = lift_to_field(qp({1, 0, 1}));
    AlgPoint conj2 = conj;
    auto none = moebius_between({conj, conj2}, {AlgPoint::from_value(NFElem(0)), AlgPoint::infinity()},
                                nullptr);
    CHECK(!none.has_value());

    // roots of T^2+1 -> roots of T^2+4 via T -> 2T
    AlgPoint target;
    target.min_poly = lift_to_field(qp({4, 0, 1}));
    auto m = moebius_between({conj, conj}, {target, target}, nullptr);
    REQUIRE(m.has_value());
    NFElem i_img = *m->apply_point(NFElem::generator(NumberField::create(qp({1, 0, 1}), 0)));
    CHECK(lift_to_field(qp({4, 0, 1})).eval(i_img).is_zero());

    // whenever a map is returned it maps s1 onto s2 (checked for the Shanks orbit)
    AlgPoint shanks_orbit;
    shanks_orbit.min_poly = lift_to_field(qp({9, -3, 1}));
    auto ms = moebius_between({shanks_orbit, shanks_orbit}, {conj, conj}, nullptr);
    if (ms) {
        auto K = NumberField::create(qp({9, -3, 1}), 0);
        NFElem img = *ms->apply_point(NFElem::generator(K));
        CHECK(lift_to_field(qp({1, 0, 1})).eval(img).is_zero());
    }
}

TEST_CASE("construct_generic families") {
    CHECK(construct_generic(GroupId::cyclic(2), nullptr) == kummer2());
    CHECK(construct_generic(GroupId::cyclic(3), nullptr) == shanks());
    CHECK(construct_generic(GroupId::dihedral(3), nullptr) == s3cubic());
    CHECK(construct_generic(GroupId::cyclic(4), Qi()) == kummer(4, Qi()));

    CHECK_THROWS_AS((void)construct_generic(GroupId::cyclic(4), nullptr), error);
    try {
        (void)construct_generic(GroupId::cyclic(4), nullptr);
    } catch (const error& e) {
        CHECK(e.code() == errc::cyclotomic_obstruction);
    }
    try {
        (void)construct_generic(GroupId::dihedral(5), nullptr);
    } catch (const error& e) {
        CHECK(e.code() == errc::cyclotomic_obstruction);
    }
    // admissible but not implemented
    auto k5 = NumberField::create(qp({-5, 0, 1}), 1);
    try {
        (void)construct_generic(GroupId::dihedral(5), k5);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::unsupported);
    }
    // every constructed family re-classifies as generic
    for (auto& [g, k] : std::vector<std::pair<GroupId, FieldPtr>>{{GroupId::cyclic(2), nullptr},
                                                                  {GroupId::cyclic(3), nullptr},
                                                                  {GroupId::dihedral(3), nullptr},
                                                                  {GroupId::cyclic(4), Qi()}}) {
        BiPoly p = construct_generic(g, k);
        auto v = decide_genericity(p, k);
        CHECK(v.generic);
    }
}

TEST_CASE("solve_parameter fixtures") {
    // Y^2 - T reaches Q(sqrt5) at t0 = 5
    TargetExtension t5{lift_to_field(qp({-5, 0, 1})), GroupId::cyclic(2)};
    auto r = solve_parameter(kummer2(), t5, nullptr, Int(10));
    REQUIRE(r.has_value());
    CHECK(*r == Rat(5));

    // Shanks reaches the splitting field of x^3 - 3x - 1 at t0 = 0
    TargetExtension tc{lift_to_field(qp({-1, -3, 0, 1})), GroupId::cyclic(3)};
    auto rc = solve_parameter(shanks(), tc, nullptr, Int(10));
    REQUIRE(rc.has_value());
    CHECK(*rc == Rat(0));

    // round trip: Y^3 + TY + T at t0 = 1 hits the splitting field of Y^3+Y+1
    TargetExtension ts{lift_to_field(qp({1, 1, 0, 1})), GroupId::symmetric(3)};
    auto rs = solve_parameter(s3cubic(), ts, nullptr, Int(5));
    REQUIRE(rs.has_value());
    CHECK(*rs == Rat(1));

    // witnesses satisfy the contract
    CHECK(group_of_specialization(kummer2(), NFElem(Rat(5)), nullptr) == GroupId::cyclic(2));

    // unreachable target within the bound
    TargetExtension tfar{lift_to_field(qp({-9973, 0, 1})), GroupId::cyclic(2)};
    CHECK(!solve_parameter(kummer2(), tfar, nullptr, Int(8)).has_value());
}
