#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include <Eigen/Dense>

#include "gcq/common.hpp"
#include "gcq/gc_map.hpp"
#include "oracles.hpp"

using namespace gcq;

namespace {

using V = std::vector<std::int64_t>;

constexpr auto kStrict = BSVariant::strict_regular;
constexpr auto kClosure = BSVariant::closure;

} // namespace

TEST_CASE("membership at n=1") {
    for (std::int64_t k = -5; k <= 5; ++k) {
        CHECK(is_bs_point(V{k, -k}, kClosure));
        CHECK(is_bs_point(V{k, -k}, kStrict));
        if (k != 0) CHECK(!is_bs_point(V{k, k}, kClosure));
    }
}

TEST_CASE("membership at n=2") {
    // Boundary pattern: inside the closed polytope, not the interior.
    CHECK(is_bs_point(V{1, 0, 0, 0, -1, 0}, kClosure));
    CHECK(!is_bs_point(V{1, 0, 0, 0, -1, 0}, kStrict));

    // Dual pattern out of range vs corrected dual pattern.
    CHECK(!is_bs_point(V{2, 0, 1, 0, -2, 1}, kClosure));
    CHECK(!is_bs_point(V{2, 0, 1, 0, -2, 1}, kStrict));
    CHECK(is_bs_point(V{2, 0, 1, 0, -2, -1}, kClosure));
    CHECK(is_bs_point(V{2, 0, 1, 0, -2, -1}, kStrict));

    // Weight must be non-increasing.
    CHECK(!is_bs_point(V{0, 1, 0, -1, 0, 0}, kClosure));
    // Pairing violation.
    CHECK(!is_bs_point(V{1, 0, 0, 0, 1, 0}, kClosure));

    CHECK_THROWS_AS(is_bs_point(V{1, 2, 3, 4, 5}, kClosure), std::domain_error);
}

TEST_CASE("bs point structure") {
    const BSPoint p(V{1, 0, 0, 0, -1, 0});
    CHECK(p.n() == 2);
    CHECK(p.b() == 3);
    CHECK(std::equal(p.weight().begin(), p.weight().end(), V{1, 0}.begin()));
    CHECK(std::equal(p.pattern().begin(), p.pattern().end(), V{0}.begin()));
    CHECK(std::equal(p.dual_weight().begin(), p.dual_weight().end(), V{0, -1}.begin()));
    CHECK(std::equal(p.dual_pattern().begin(), p.dual_pattern().end(), V{0}.begin()));

    CHECK_THROWS_AS(BSPoint(V{0, 1, 0, -1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(BSPoint(V{1, 0, 0, 0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(BSPoint(V{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("enumeration at n=1 matches the integer lattice on the line") {
    for (std::int64_t N : {0, 2, 10}) {
        for (auto variant : {kClosure, kStrict}) {
            const auto points = enumerate_bs_points(1, N, variant);
            REQUIRE(points.size() == static_cast<std::size_t>(2 * N + 1));
            std::set<V> got;
            for (const auto& p : points) got.insert(p.values());
            for (std::int64_t k = -N; k <= N; ++k)
                CHECK(got.count(V{k, -k}) == 1);
            CHECK(count_bs_points(1, N, variant) ==
                  BigUint(static_cast<std::uint64_t>(2 * N + 1)));
        }
    }
    // Declared order: weights descending.
    const auto pts = enumerate_bs_points(1, 2, kClosure);
    CHECK(pts.front().values() == V{2, -2});
    CHECK(pts.back().values() == V{-2, 2});
}

TEST_CASE("enumeration fixtures at n=2") {
    const auto closure = enumerate_bs_points(2, 1, kClosure);
    CHECK(closure.size() == 20);
    CHECK(count_bs_points(2, 1, kClosure) == BigUint(20));

    // The strict set in the unit weight box is the single point with weight
    // (1,-1) and both patterns pinned to 0 (confirmed by the box scan below).
    const auto strict = enumerate_bs_points(2, 1, kStrict);
    REQUIRE(strict.size() == 1);
    CHECK(strict[0].values() == V{1, -1, 0, 1, -1, 0});
    CHECK(count_bs_points(2, 1, kStrict) == BigUint(1));
}

TEST_CASE("enumeration equals the exhaustive scan at n=2") {
    for (std::int64_t N = 0; N <= 2; ++N) {
        for (auto variant : {kClosure, kStrict}) {
            const auto enumerated = enumerate_bs_points(2, N, variant);
            CHECK(std::is_sorted(enumerated.begin(), enumerated.end(),
                                 oracles::bs_order_less));
            const auto scanned = oracles::bs_scan_n2(N, variant);
            REQUIRE(enumerated.size() == scanned.size());
            for (std::size_t i = 0; i < enumerated.size(); ++i)
                CHECK(enumerated[i] == scanned[i]);
        }
    }
}

TEST_CASE("every enumerated point satisfies its own membership test") {
    for (auto variant : {kClosure, kStrict}) {
        for (const auto& p : enumerate_bs_points(3, 1, variant))
            CHECK(is_bs_point(p.values(), variant));
    }
}

TEST_CASE("strict set is contained in the closure set") {
    for (const auto& [n, N] : std::vector<std::pair<int, std::int64_t>>{
             {1, 4}, {2, 2}, {3, 1}, {3, 2}}) {
        const auto strict = enumerate_bs_points(n, N, kStrict);
        const auto closure = enumerate_bs_points(n, N, kClosure);
        const std::set<V> closure_set = [&] {
            std::set<V> s;
            for (const auto& p : closure) s.insert(p.values());
            return s;
        }();
        for (const auto& p : strict) CHECK(closure_set.count(p.values()) == 1);
        CHECK(strict.size() <= closure.size());
    }
}

TEST_CASE("dualizing is an involution of each enumerated set") {
    for (auto variant : {kClosure, kStrict}) {
        const auto points = enumerate_bs_points(2, 2, variant);
        std::set<V> all;
        for (const auto& p : points) all.insert(p.values());
        for (const auto& p : points) {
            // Send the weight to its dual and swap the two patterns.
            V flipped;
            flipped.insert(flipped.end(), p.dual_weight().begin(), p.dual_weight().end());
            flipped.insert(flipped.end(), p.dual_pattern().begin(), p.dual_pattern().end());
            flipped.insert(flipped.end(), p.weight().begin(), p.weight().end());
            flipped.insert(flipped.end(), p.pattern().begin(), p.pattern().end());
            CHECK(all.count(flipped) == 1);

            const BSPoint once(flipped);
            V again;
            again.insert(again.end(), once.dual_weight().begin(), once.dual_weight().end());
            again.insert(again.end(), once.dual_pattern().begin(), once.dual_pattern().end());
            again.insert(again.end(), once.weight().begin(), once.weight().end());
            again.insert(again.end(), once.pattern().begin(), once.pattern().end());
            CHECK(again == p.values());
        }
    }
}

TEST_CASE("triple splitting and reassembly") {
    const BSTriple t1 = to_triple(BSPoint(V{3, -3}));
    CHECK(t1.weight == DominantWeight({3}));
    CHECK(t1.pattern.sub_rows_flat().empty());
    CHECK(t1.dual_pattern.sub_rows_flat().empty());

    const BSTriple t2 = to_triple(BSPoint(V{1, 0, 0, 0, -1, 0}));
    CHECK(t2.weight == DominantWeight({1, 0}));
    CHECK(t2.pattern.rows() ==
          std::vector<std::vector<std::int64_t>>{{1, 0}, {0}});
    CHECK(t2.dual_pattern.rows() ==
          std::vector<std::vector<std::int64_t>>{{0, -1}, {0}});

    for (const auto& p : enumerate_bs_points(2, 1, kClosure))
        CHECK(from_triple(to_triple(p)) == p);

    // Structurally fine but not a member: the pattern escapes the polytope.
    CHECK_THROWS_AS(to_triple(BSPoint(V{2, 0, 5, 0, -2, 0})), std::domain_error);
}

TEST_CASE("capacity cap") {
    CHECK_THROWS_AS(enumerate_bs_points(2, 1, kClosure, 5), CapacityError);
    CHECK_NOTHROW(enumerate_bs_points(2, 1, kClosure, 20));
}

TEST_CASE("lattice rounding adapter") {
    std::vector<std::int64_t> out;
    const std::vector<double> near_lattice{2.0 + 4e-7, -1.0 - 2e-7, 0.0};
    CHECK(round_to_lattice(near_lattice, 1e-6, out));
    CHECK(out == V{2, -1, 0});
    const std::vector<double> far{2.01, 0.0};
    CHECK(!round_to_lattice(far, 1e-6, out));
    CHECK(out == V{2, -1, 0}); // unchanged on rejection
}

TEST_CASE("closure points with strict data come from strongly regular points") {
    // Inverse construction at n=2: realize (alpha, p) as a Hermitian matrix
    // with prescribed spectrum and corner, then conjugate one realization
    // onto the other.
    const auto realize = [](double mu1, double mu2, double t) {
        Eigen::Matrix2cd m;
        const double c = std::sqrt(std::max(0.0, (mu1 - t) * (t - mu2)));
        m << Complex(mu1 + mu2 - t, 0), Complex(c, 0), Complex(c, 0), Complex(t, 0);
        return HermitianMatrix(m);
    };
    const auto eigvecs_desc = [](const HermitianMatrix& h) {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h.mat());
        Eigen::Matrix2cd v;
        v.col(0) = es.eigenvectors().col(1); // descending order
        v.col(1) = es.eigenvectors().col(0);
        return v;
    };

    for (const auto& p : enumerate_bs_points(2, 1, kClosure)) {
        const DominantWeight alpha(V(p.weight().begin(), p.weight().end()));
        if (!alpha.strictly_decreasing()) continue;
        const BSTriple triple = to_triple(p);
        if (!triple.pattern.strictly_interior()) continue;
        if (!triple.dual_pattern.strictly_interior()) continue;

        const double a1 = static_cast<double>(alpha[0]);
        const double a2 = static_cast<double>(alpha[1]);
        const double pat = static_cast<double>(p.pattern()[0]);
        const double dual_pat = static_cast<double>(p.dual_pattern()[0]);

        // xi has spectrum alpha* and corner eigenvalue dual_pat; -xi then has
        // spectrum alpha, and eta realizes (alpha, pat).
        const HermitianMatrix xi = realize(-a2, -a1, dual_pat);
        const HermitianMatrix eta = realize(a1, a2, pat);
        const HermitianMatrix neg_xi = -xi;
        const Eigen::Matrix2cd u1 = eigvecs_desc(neg_xi);
        const Eigen::Matrix2cd u2 = eigvecs_desc(eta);
        const UnitaryMatrix g(u2 * u1.adjoint());
        const CotangentPoint point(g, neg_xi);

        CHECK(is_sreg_point(point));
        const DoubleGCVector v = double_gc(point);
        const RealVector flat = v.flatten();
        for (int i = 0; i < flat.size(); ++i)
            CHECK(std::abs(flat[i] - static_cast<double>(p.values()[i])) <= 1e-6);
    }
}
