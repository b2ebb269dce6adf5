#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcq/polytope.hpp"

namespace gcq {

/// Which Bohr-Sommerfeld set to work with: the strongly regular one
/// (strictly dominant weight, patterns in the open polytope interiors) or
/// its closure (dominant weight, patterns in the closed polytopes).
enum class BSVariant { strict_regular, closure };

/// Integer vector of length 2b = n(n+1) in the double-GC flattening: the
/// first b entries are weight + pattern, the last b are dual weight + dual
/// pattern. Construction checks the structural invariants (weight
/// non-increasing, dual-weight pairing values[b+j] = -values[n-1-j]); full
/// membership is decided by is_bs_point.
class BSPoint {
public:
    explicit BSPoint(std::vector<std::int64_t> values);

    int n() const { return n_; }
    int b() const { return n_ * (n_ + 1) / 2; }
    const std::vector<std::int64_t>& values() const { return values_; }

    std::span<const std::int64_t> weight() const;
    std::span<const std::int64_t> pattern() const;
    std::span<const std::int64_t> dual_weight() const;
    std::span<const std::int64_t> dual_pattern() const;

    friend bool operator==(const BSPoint&, const BSPoint&) = default;
    friend auto operator<=>(const BSPoint&, const BSPoint&) = default;

private:
    int n_;
    std::vector<std::int64_t> values_;
};

/// n recovered from a 2b-vector length, or -1 when the length is not of the
/// form n(n+1).
int bs_rank_from_length(std::size_t length);

/// Full Bohr-Sommerfeld membership test for an exact integer vector, in the
/// chosen variant. Checks, in order: weight monotonicity (strict or
/// non-strict), the dual-weight pairing, pattern membership in GC_alpha, and
/// dual-pattern membership in GC_{alpha*} (interiors in the strict variant).
/// Throws std::domain_error when the length is not n(n+1).
bool is_bs_point(std::span<const std::int64_t> v, BSVariant variant);

/// All Bohr-Sommerfeld points whose weight entries satisfy |alpha_i| <= N,
/// ordered by weight lex-descending, then pattern lex-ascending, then dual
/// pattern lex-ascending. Throws CapacityError when the total exceeds cap.
std::vector<BSPoint> enumerate_bs_points(int n, std::int64_t max_weight,
                                         BSVariant variant,
                                         std::uint64_t cap = kDefaultEnumerationCap);

/// Cardinality of the above without materializing points.
BigUint count_bs_points(int n, std::int64_t max_weight, BSVariant variant);

/// A Bohr-Sommerfeld point unpacked as (weight, pattern over alpha, pattern
/// over alpha*).
struct BSTriple {
    DominantWeight weight;
    GCPattern pattern;
    GCPattern dual_pattern;
};

/// Splits a closure Bohr-Sommerfeld point into its triple; throws
/// std::domain_error when the point fails the closure membership test.
BSTriple to_triple(const BSPoint& p);

/// Inverse assembler of to_triple.
BSPoint from_triple(const BSTriple& t);

/// Rounds a floating 2b-vector to the integer lattice when every entry is
/// within tol of an integer; returns false (leaving out untouched)
/// otherwise. The lattice decision downstream stays exact.
bool round_to_lattice(std::span<const double> v, double tol,
                      std::vector<std::int64_t>& out);

} // namespace gcq
