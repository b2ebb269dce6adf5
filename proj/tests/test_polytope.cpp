#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gcq/common.hpp"
#include "gcq/polytope.hpp"
#include "oracles.hpp"

using namespace gcq;

namespace {

DominantWeight W(std::initializer_list<std::int64_t> w) {
    return DominantWeight(std::vector<std::int64_t>(w));
}

} // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) == Rational(2, 4));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5) < Rational(1, 100));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("closure membership") {
    CHECK(contains(W({1, 0}), {Rational(0)}));
    CHECK(contains(W({1, 0}), {Rational(1)}));
    CHECK(contains(W({1, 0}), {Rational(1, 2)}));
    CHECK(!contains(W({1, 0}), {Rational(2)}));
    CHECK(contains(W({5}), {}));
    CHECK_THROWS_AS(contains(W({1, 0}), RationalPoint{}), std::domain_error);
}

TEST_CASE("interior membership") {
    CHECK(contains_interior(W({2, 0}), {Rational(1)}));
    CHECK(contains_interior(W({2, 0}), {Rational(1, 3)}));
    CHECK(!contains_interior(W({2, 0}), {Rational(2)}));
    CHECK(!contains_interior(W({2, 0}), {Rational(0)}));
    for (std::int64_t q = -3; q <= 3; ++q)
        CHECK(!contains_interior(W({1, 0}), {Rational(q)}));
    // Repeated top-row entries freeze the polytope: no interior points.
    CHECK(!contains_interior(W({1, 1}), {Rational(1)}));
    CHECK(contains(W({1, 1}), {Rational(1)}));
}

TEST_CASE("approximate membership for float points") {
    CHECK(contains_approx(W({2, 0}), {2.0 + 5e-9}, 1e-8));
    CHECK(!contains_approx(W({2, 0}), {2.0 + 5e-7}, 1e-8));
}

TEST_CASE("enumeration of integral points") {
    const auto pats10 = enumerate_integral_points(W({1, 0}));
    REQUIRE(pats10.size() == 2);
    CHECK(pats10[0].rows()[1] == std::vector<std::int64_t>{0});
    CHECK(pats10[1].rows()[1] == std::vector<std::int64_t>{1});

    const auto single = enumerate_integral_points(W({9}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].sub_rows_flat().empty());

    const auto pats210 = enumerate_integral_points(W({2, 1, 0}));
    CHECK(pats210.size() == 8);
    const auto expected = oracles::gc_points({2, 1, 0}, false);
    REQUIRE(expected.size() == 8);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(pats210[i].sub_rows_flat() == expected[i]);

    // Lexicographic order of the flattened rows.
    const auto flat_less = [](const GCPattern& a, const GCPattern& b) {
        return a.sub_rows_flat() < b.sub_rows_flat();
    };
    CHECK(std::is_sorted(pats210.begin(), pats210.end(), flat_less));
}

TEST_CASE("interior enumeration") {
    CHECK(enumerate_integral_points(W({1, 0}), Region::interior).empty());
    const auto interior = enumerate_integral_points(W({2, 0, -2}), Region::interior);
    REQUIRE(interior.size() == 1);
    CHECK(interior[0].sub_rows_flat() == std::vector<std::int64_t>{1, -1, 0});
    CHECK(interior[0].strictly_interior());

    const auto strict_oracle = oracles::gc_points({2, 0, -2}, true);
    REQUIRE(strict_oracle.size() == 1);
    CHECK(strict_oracle[0] == interior[0].sub_rows_flat());
}

TEST_CASE("counting agrees with enumeration and the brute-force scan") {
    CHECK(count_integral_points(W({1, 0})) == BigUint(2));
    CHECK(count_integral_points(W({3, 3})) == BigUint(1));
    CHECK(count_integral_points(W({2, 1, 0})) == BigUint(8));

    for (const auto& alpha : dominant_weights_in_box(3, 2)) {
        const auto pats = enumerate_integral_points(alpha);
        const auto scan = oracles::gc_points(alpha.alpha(), false);
        CHECK(count_integral_points(alpha) == BigUint(scan.size()));
        CHECK(pats.size() == scan.size());
        const auto strict_scan = oracles::gc_points(alpha.alpha(), true);
        CHECK(count_integral_points(alpha, Region::interior) ==
              BigUint(strict_scan.size()));
    }
}

TEST_CASE("weyl dimension formula") {
    CHECK(weyl_dim(W({1, 0})) == BigUint(2));
    CHECK(weyl_dim(W({-7})) == BigUint(1));
    CHECK(weyl_dim(W({2, 1, 0})) == BigUint(8));
    CHECK(weyl_dim(W({3, 1, 0, -2})) == BigUint(300));

    for (int n = 1; n <= 4; ++n)
        for (const auto& alpha : dominant_weights_in_box(n, 3))
            CHECK(weyl_dim(alpha) ==
                  BigUint(static_cast<std::uint64_t>(oracles::weyl_dim(alpha.alpha()))));
}

TEST_CASE("lattice count equals the Weyl dimension") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& alpha : dominant_weights_in_box(n, 2))
            CHECK(count_integral_points(alpha) == weyl_dim(alpha));
}

TEST_CASE("dual weight") {
    CHECK(dual_weight(W({1, 0})) == W({0, -1}));
    CHECK(dual_weight(W({4, 4})) == W({-4, -4}));
    for (const auto& alpha : dominant_weights_in_box(3, 2)) {
        CHECK(dual_weight(dual_weight(alpha)) == alpha);
        CHECK(count_integral_points(alpha) == count_integral_points(dual_weight(alpha)));
        CHECK(weyl_dim(alpha) == weyl_dim(dual_weight(alpha)));
    }
}

TEST_CASE("translation invariance of the count") {
    for (const auto& alpha : dominant_weights_in_box(3, 1)) {
        for (std::int64_t c : {-5, 1, 12}) {
            std::vector<std::int64_t> shifted = alpha.alpha();
            for (auto& v : shifted) v += c;
            CHECK(count_integral_points(DominantWeight(shifted)) ==
                  count_integral_points(alpha));
        }
    }
}

TEST_CASE("every enumerated pattern is a member; interior iff strict") {
    for (const auto& alpha : dominant_weights_in_box(3, 1)) {
        for (const auto& pat : enumerate_integral_points(alpha)) {
            const auto flat = pat.sub_rows_flat();
            const RationalPoint p(flat.begin(), flat.end());
            CHECK(contains(alpha, p));
            CHECK(contains_interior(alpha, p) == pat.strictly_interior());
        }
    }
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_integral_points(W({2, 1, 0}), Region::closure, 3),
                    CapacityError);
    CHECK_NOTHROW(enumerate_integral_points(W({2, 1, 0}), Region::closure, 8));
}

TEST_CASE("weight boxes") {
    const auto weights = dominant_weights_in_box(2, 1);
    const std::vector<DominantWeight> expected = {W({1, 1}),  W({1, 0}),  W({1, -1}),
                                                  W({0, 0}),  W({0, -1}), W({-1, -1})};
    CHECK(weights == expected);

    const auto strict = dominant_weights_in_box(2, 1, true);
    const std::vector<DominantWeight> expected_strict = {W({1, 0}), W({1, -1}),
                                                         W({0, -1})};
    CHECK(strict == expected_strict);

    CHECK(dominant_weights_in_box(3, 1).size() == 10);
    CHECK_THROWS_AS(dominant_weights_in_box(3, 3, false, 5), CapacityError);
}

TEST_CASE("validators") {
    CHECK_THROWS_AS(DominantWeight({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(DominantWeight(std::vector<std::int64_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(GCPattern({{2, 0}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(GCPattern({{2, 0}, {1, 1}}), std::invalid_argument);
    CHECK_NOTHROW(GCPattern({{2, 0}, {1}}));
}
