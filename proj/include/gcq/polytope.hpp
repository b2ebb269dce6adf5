#pragma once

#include <cstdint>
#include <vector>

#include "gcq/bigint.hpp"
#include "gcq/rational.hpp"

namespace gcq {

/// Default cap on the number of objects an enumeration may materialize.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Non-increasing integer weight of U(n).
class DominantWeight {
public:
    explicit DominantWeight(std::vector<std::int64_t> entries);

    int n() const { return static_cast<int>(alpha_.size()); }
    const std::vector<std::int64_t>& alpha() const { return alpha_; }
    std::int64_t operator[](int i) const { return alpha_[i]; }
    bool strictly_decreasing() const;

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
    friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

private:
    std::vector<std::int64_t> alpha_;
};

/// Triangular integer array with non-strict interlacing rows; row 0 is a
/// dominant weight, row j has n-j entries. Interlacing is validated exactly
/// on construction.
class GCPattern {
public:
    explicit GCPattern(std::vector<std::vector<std::int64_t>> rows);

    int n() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
    DominantWeight top() const { return DominantWeight(rows_[0]); }

    /// Rows 1..n-1 flattened in the GC enumeration order.
    std::vector<std::int64_t> sub_rows_flat() const;

    /// True when every interlacing inequality is strict.
    bool strictly_interior() const;

    friend bool operator==(const GCPattern&, const GCPattern&) = default;

private:
    std::vector<std::vector<std::int64_t>> rows_;
};

/// Point of the ambient space of a GC polytope: the sub-top rows flattened,
/// length n(n-1)/2, in exact rational coordinates.
using RationalPoint = std::vector<Rational>;

enum class Region { closure, interior };

/// Exact membership of p in the closed polytope GC_alpha.
bool contains(const DominantWeight& alpha, const RationalPoint& p);

/// Exact membership of p in the interior (all inequalities strict). Empty
/// whenever alpha has a repeated entry.
bool contains_interior(const DominantWeight& alpha, const RationalPoint& p);

/// Float-input membership with every inequality slackened by tol; for
/// checking numerically computed GC vectors against GC_alpha.
bool contains_approx(const DominantWeight& alpha, const std::vector<double>& p,
                     double tol);

/// All integer points of GC_alpha (closure) or its interior, as full GC
/// patterns with top row alpha, in lexicographic order of the flattened
/// rows. Throws CapacityError when the count exceeds cap.
std::vector<GCPattern> enumerate_integral_points(
    const DominantWeight& alpha, Region region = Region::closure,
    std::uint64_t cap = kDefaultEnumerationCap);

/// Number of integer points, by row-by-row dynamic programming; exact and
/// unbounded. Independent of weyl_dim by construction.
BigUint count_integral_points(const DominantWeight& alpha,
                              Region region = Region::closure);

/// Dimension of the irreducible U(n)-module of highest weight alpha, by the
/// exact product formula prod_{i<j} (a_i - a_j + j - i)/(j - i).
BigUint weyl_dim(const DominantWeight& alpha);

/// Highest weight of the dual module: the negated reversal of alpha.
DominantWeight dual_weight(const DominantWeight& alpha);

/// All dominant integral weights with |alpha_i| <= max_abs, in lexicographic
/// descending order. Throws CapacityError past cap.
std::vector<DominantWeight> dominant_weights_in_box(
    int n, std::int64_t max_abs, bool strictly_decreasing = false,
    std::uint64_t cap = kDefaultEnumerationCap);

} // namespace gcq
