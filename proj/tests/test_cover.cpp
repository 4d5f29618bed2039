#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gencover/cover.hpp"
#include "helpers.hpp"

#include <set>

using namespace gencover;
using namespace gencover::testing;

namespace {

std::vector<long> e_multiset(const std::vector<BranchPointRecord>& recs) {
    std::vector<long> e;
    for (const auto& r : recs) e.push_back(r.ram_index);
    std::sort(e.begin(), e.end());
    return e;
}

// finite rational branch values
std::vector<Rat> rational_points(const std::vector<BranchPointRecord>& recs) {
    std::vector<Rat> out;
    for (const auto& r : recs)
        if (r.point.rational) out.push_back(r.point.value.as_rat());
    std::sort(out.begin(), out.end());
    return out;
}

bool has_infinity(const std::vector<BranchPointRecord>& recs) {
    for (const auto& r : recs)
        if (r.point.at_infinity) return true;
    return false;
}

long ram_at(const std::vector<BranchPointRecord>& recs, const Rat& t) {
    for (const auto& r : recs)
        if (r.point.rational && r.point.value == NFElem(t)) return r.ram_index;
    return 0;
}

long ram_at_infinity(const std::vector<BranchPointRecord>& recs) {
    for (const auto& r : recs)
        if (r.point.at_infinity) return r.ram_index;
    return 0;
}

void check_rh_parity(long order, const std::vector<long>& es) {
    long total = 0;
    for (long e : es) total += (order / e) * (e - 1);
    CHECK(total % 2 == 0);
}

} // namespace

TEST_CASE("branch data: Y^2 - T") {
    auto recs = branch_data(kummer2(), nullptr);
    REQUIRE(recs.size() == 2);
    CHECK(ram_at(recs, Rat(0)) == 2);
    CHECK(ram_at_infinity(recs) == 2);
}

TEST_CASE("branch data: Y^3 + TY + T") {
    auto recs = branch_data(s3cubic(), nullptr);
    REQUIRE(recs.size() == 3);
    // branch set {0, -27/4, infinity}, e-multiset (2,2,3)
    CHECK(rational_points(recs) == std::vector<Rat>{make_rat(Int(-27), Int(4)), Rat(0)});
    CHECK(has_infinity(recs));
    CHECK(e_multiset(recs) == std::vector<long>{2, 2, 3});
    // the total ramification of the cubic subfield pins the assignment
    CHECK(ram_at(recs, Rat(0)) == 3);
    CHECK(ram_at(recs, make_rat(Int(-27), Int(4))) == 2);
    CHECK(ram_at_infinity(recs) == 2);
    // inertia labels
    std::multiset<std::string> labels;
    for (const auto& r : recs) labels.insert(r.inertia.label);
    CHECK(labels == std::multiset<std::string>{"C2", "C2", "C3"});
}

TEST_CASE("branch data: Shanks simplest cubic") {
    auto recs = branch_data(shanks(), nullptr);
    REQUIRE(recs.size() == 2);
    CHECK(!has_infinity(recs));
    CHECK(e_multiset(recs) == std::vector<long>{3, 3});
    for (const auto& r : recs) {
        REQUIRE(r.orbit_poly.has_value());
        CHECK(rational_poly(*r.orbit_poly) == qp({9, -3, 1}));
        CHECK(r.inertia.label == "C3");
    }
}

TEST_CASE("branch data: genus-one quadratic cover") {
    auto recs = branch_data(lawful_evil_cover(), nullptr);
    REQUIRE(recs.size() == 4); // three roots of Q and infinity
    CHECK(has_infinity(recs));
    CHECK(e_multiset(recs) == std::vector<long>{2, 2, 2, 2});
    long cubic_points = 0;
    for (const auto& r : recs)
        if (r.orbit_poly && r.orbit_poly->degree() == 3) ++cubic_points;
    CHECK(cubic_points == 3);
}

TEST_CASE("branch data: Y^4 - T and Y^2 - (T^2+1)") {
    auto r4 = branch_data(kummer(4), nullptr);
    REQUIRE(r4.size() == 2);
    CHECK(ram_at(r4, Rat(0)) == 4);
    CHECK(ram_at_infinity(r4) == 4);

    auto rg = branch_data(gauss_branch(), nullptr);
    REQUIRE(rg.size() == 2);
    CHECK(!has_infinity(rg));
    for (const auto& r : rg) {
        REQUIRE(r.orbit_poly.has_value());
        CHECK(rational_poly(*r.orbit_poly) == qp({1, 0, 1}));
        CHECK(r.ram_index == 2);
    }
}

TEST_CASE("spurious discriminant roots are discarded") {
    // Y^2 - T^2(T+1): disc root 0 is a node, only -1 and infinity ramify
    BiPoly p = bp({qp({0, 0, -1, -1}), qp({0}), qp({1})});
    auto recs = branch_data(p, nullptr);
    REQUIRE(recs.size() == 2);
    CHECK(ram_at(recs, Rat(-1)) == 2);
    CHECK(ram_at_infinity(recs) == 2);
    CHECK(ram_at(recs, Rat(0)) == 0);
}

TEST_CASE("branch points shift with T -> T + c") {
    for (long c : {1, -2, 5}) {
        auto base = branch_data(s3cubic(), nullptr);
        // substitute T -> T + c
        auto ys = s3cubic().y_coeffs();
        std::vector<KPoly> shifted;
        for (auto& y : ys) shifted.push_back(y.compose(KPoly{NFElem(Rat(c)), NFElem(1)}));
        auto moved = branch_data(BiPoly::from_y_coeffs(shifted), nullptr);
        REQUIRE(moved.size() == base.size());
        CHECK(e_multiset(moved) == e_multiset(base));
        for (const auto& r : base) {
            if (!r.point.rational) continue;
            Rat target = r.point.value.as_rat() - Rat(c);
            CHECK(ram_at(moved, target) == r.ram_index);
        }
    }
}

TEST_CASE("genus by Riemann-Hurwitz") {
    CHECK(genus_galois(2, {2, 2}) == 0);
    CHECK(genus_galois(2, {2, 2, 2, 2}) == 1);
    CHECK(genus_galois(6, {2, 2, 3}) == 0);
    CHECK(genus_galois(2, {2, 2, 2, 2, 2, 2}) == 2);
    for (long n = 2; n <= 12; ++n) CHECK(genus_galois(n, {n, n}) == 0);
    CHECK(genus_galois(12, {2, 3, 3}) == 0);
    CHECK(genus_galois(24, {2, 3, 4}) == 0);
    CHECK(genus_galois(60, {2, 3, 5}) == 0);
    CHECK(genus_galois(3, {3, 3, 3}) == 1);
    CHECK_THROWS_AS(genus_galois(4, {3}), error);
}

TEST_CASE("genus-zero shapes") {
    CHECK(genus_zero_shape(GroupId::a5(), {2, 3, 5}));
    CHECK(genus_zero_shape(GroupId::s4(), {2, 3, 4}));
    CHECK(genus_zero_shape(GroupId::a4(), {2, 3, 3}));
    CHECK(genus_zero_shape(GroupId::cyclic(7), {7, 7}));
    CHECK(genus_zero_shape(GroupId::dihedral(5), {2, 2, 5}));
    CHECK(genus_zero_shape(GroupId::symmetric(3), {2, 2, 3}));
    CHECK(!genus_zero_shape(GroupId::cyclic(3), {3, 3, 3}));
    CHECK(!genus_zero_shape(GroupId::s4(), {2, 3, 3}));
}

TEST_CASE("Riemann-Hurwitz parity across fixtures") {
    check_rh_parity(2, e_multiset(branch_data(kummer2(), nullptr)));
    check_rh_parity(6, e_multiset(branch_data(s3cubic(), nullptr)));
    check_rh_parity(3, e_multiset(branch_data(shanks(), nullptr)));
    check_rh_parity(2, e_multiset(branch_data(lawful_evil_cover(), nullptr)));
}

TEST_CASE("branch rationality") {
    CHECK(branch_rationality(branch_data(s3cubic(), nullptr), nullptr));
    CHECK(!branch_rationality(branch_data(shanks(), nullptr), nullptr));
    CHECK(!branch_rationality(branch_data(gauss_branch(), nullptr), nullptr));
    CHECK(branch_rationality(branch_data(kummer2(), nullptr), nullptr));
}

TEST_CASE("Shanks branch points generate Q(zeta_3)") {
    auto recs = branch_data(shanks(), nullptr);
    auto zeta3 = NumberField::create(qp({1, 1, 1}), 0);
    CHECK(root_in_field(rational_poly(*recs[0].orbit_poly), zeta3).has_value());
}

TEST_CASE("preconditions are typed errors") {
    // reducible: Y^2 - T^2
    BiPoly red = bp({qp({0, 0, -1}), qp({0}), qp({1})});
    CHECK_THROWS_AS((void)branch_data(red, nullptr), error);
    // inseparable: (Y - T)^2 = Y^2 - 2TY + T^2
    BiPoly insep = bp({qp({0, 0, 1}), qp({0, -2}), qp({1})});
    CHECK_THROWS_AS((void)branch_data(insep, nullptr), error);
}
