#include "gcq/bohr_sommerfeld.hpp"

#include <cmath>
#include <stdexcept>

#include "gcq/common.hpp"
#include "parallel.hpp"

namespace gcq {

namespace {

Region region_of(BSVariant variant) {
    return variant == BSVariant::strict_regular ? Region::interior : Region::closure;
}

bool weight_monotone(std::span<const std::int64_t> w, bool strict) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (strict ? !(w[i] > w[i + 1]) : !(w[i] >= w[i + 1])) return false;
    }
    return true;
}

bool pairing_holds(std::span<const std::int64_t> v, int n, int b) {
    for (int j = 0; j < n; ++j)
        if (v[b + j] != -v[n - 1 - j]) return false;
    return true;
}

std::vector<std::int64_t> assemble_values(const DominantWeight& alpha,
                                          const std::vector<std::int64_t>& sub,
                                          const DominantWeight& dual,
                                          const std::vector<std::int64_t>& dual_sub) {
    std::vector<std::int64_t> values;
    values.reserve(2 * (alpha.n() + static_cast<int>(sub.size())));
    values.insert(values.end(), alpha.alpha().begin(), alpha.alpha().end());
    values.insert(values.end(), sub.begin(), sub.end());
    values.insert(values.end(), dual.alpha().begin(), dual.alpha().end());
    values.insert(values.end(), dual_sub.begin(), dual_sub.end());
    return values;
}

GCPattern pattern_from_parts(std::span<const std::int64_t> top,
                             std::span<const std::int64_t> sub) {
    const int n = static_cast<int>(top.size());
    std::vector<std::vector<std::int64_t>> rows(n);
    rows[0].assign(top.begin(), top.end());
    std::size_t pos = 0;
    for (int j = 1; j < n; ++j) {
        rows[j].assign(sub.begin() + pos, sub.begin() + pos + (n - j));
        pos += n - j;
    }
    return GCPattern(std::move(rows));
}

} // namespace

int bs_rank_from_length(std::size_t length) {
    for (int n = 1; static_cast<std::size_t>(n) * (n + 1) <= length; ++n)
        if (static_cast<std::size_t>(n) * (n + 1) == length) return n;
    return -1;
}

BSPoint::BSPoint(std::vector<std::int64_t> values) : values_(std::move(values)) {
    n_ = bs_rank_from_length(values_.size());
    if (n_ < 0)
        throw std::invalid_argument("BSPoint: length must be n(n+1) for some n >= 1");
    const int b = this->b();
    if (!weight_monotone({values_.data(), static_cast<std::size_t>(n_)}, false))
        throw std::invalid_argument("BSPoint: weight must be non-increasing");
    if (!pairing_holds(values_, n_, b))
        throw std::invalid_argument("BSPoint: dual weight must be the negated reversal");
}

std::span<const std::int64_t> BSPoint::weight() const {
    return {values_.data(), static_cast<std::size_t>(n_)};
}

std::span<const std::int64_t> BSPoint::pattern() const {
    return {values_.data() + n_, static_cast<std::size_t>(b() - n_)};
}

std::span<const std::int64_t> BSPoint::dual_weight() const {
    return {values_.data() + b(), static_cast<std::size_t>(n_)};
}

std::span<const std::int64_t> BSPoint::dual_pattern() const {
    return {values_.data() + b() + n_, static_cast<std::size_t>(b() - n_)};
}

bool is_bs_point(std::span<const std::int64_t> v, BSVariant variant) {
    const int n = bs_rank_from_length(v.size());
    if (n < 0)
        throw std::domain_error("is_bs_point: length must be n(n+1) for some n >= 1");
    const int b = n * (n + 1) / 2;
    const bool strict = variant == BSVariant::strict_regular;

    if (!weight_monotone(v.subspan(0, n), strict)) return false;
    if (!pairing_holds(v, n, b)) return false;

    const DominantWeight alpha(std::vector<std::int64_t>(v.begin(), v.begin() + n));
    const DominantWeight dual = dual_weight(alpha);
    const RationalPoint p(v.begin() + n, v.begin() + b);
    const RationalPoint q(v.begin() + b + n, v.end());
    if (strict ? !contains_interior(alpha, p) : !contains(alpha, p)) return false;
    return strict ? contains_interior(dual, q) : contains(dual, q);
}

std::vector<BSPoint> enumerate_bs_points(int n, std::int64_t max_weight,
                                         BSVariant variant, std::uint64_t cap) {
    if (n < 1) throw std::domain_error("enumerate_bs_points: n must be positive");
    if (max_weight < 0)
        throw std::domain_error("enumerate_bs_points: bound must be >= 0");
    const bool strict = variant == BSVariant::strict_regular;
    const Region region = region_of(variant);
    const auto weights = dominant_weights_in_box(n, max_weight, strict, cap);

    const BigUint total = count_bs_points(n, max_weight, variant);
    if (total > BigUint(cap))
        throw CapacityError("enumerate_bs_points: " + total.to_string() +
                            " points exceed cap " + std::to_string(cap));

    auto chunks = detail::parallel_map<std::vector<BSPoint>>(
        weights.size(), [&](std::size_t i) {
            const DominantWeight& alpha = weights[i];
            const DominantWeight dual = dual_weight(alpha);
            std::vector<BSPoint> points;
            const auto patterns = enumerate_integral_points(alpha, region, cap);
            if (patterns.empty()) return points;
            const auto dual_patterns = enumerate_integral_points(dual, region, cap);
            points.reserve(patterns.size() * dual_patterns.size());
            for (const auto& pat : patterns) {
                const auto sub = pat.sub_rows_flat();
                for (const auto& dual_pat : dual_patterns)
                    points.emplace_back(assemble_values(alpha, sub, dual,
                                                        dual_pat.sub_rows_flat()));
            }
            return points;
        });

    std::vector<BSPoint> out;
    out.reserve(static_cast<std::size_t>(total.to_uint64()));
    for (auto& chunk : chunks)
        for (auto& p : chunk) out.push_back(std::move(p));
    return out;
}

BigUint count_bs_points(int n, std::int64_t max_weight, BSVariant variant) {
    if (n < 1) throw std::domain_error("count_bs_points: n must be positive");
    if (max_weight < 0)
        throw std::domain_error("count_bs_points: bound must be >= 0");
    const bool strict = variant == BSVariant::strict_regular;
    const Region region = region_of(variant);
    const auto weights = dominant_weights_in_box(n, max_weight, strict);
    auto terms = detail::parallel_map<BigUint>(weights.size(), [&](std::size_t i) {
        return count_integral_points(weights[i], region) *
               count_integral_points(dual_weight(weights[i]), region);
    });
    BigUint total;
    for (const auto& term : terms) total += term;
    return total;
}

BSTriple to_triple(const BSPoint& p) {
    if (!is_bs_point(p.values(), BSVariant::closure))
        throw std::domain_error("to_triple: not a closure Bohr-Sommerfeld point");
    DominantWeight alpha(std::vector<std::int64_t>(p.weight().begin(), p.weight().end()));
    GCPattern pattern = pattern_from_parts(p.weight(), p.pattern());
    GCPattern dual_pattern = pattern_from_parts(p.dual_weight(), p.dual_pattern());
    return BSTriple{std::move(alpha), std::move(pattern), std::move(dual_pattern)};
}

BSPoint from_triple(const BSTriple& t) {
    if (!(t.pattern.top() == t.weight))
        throw std::domain_error("from_triple: pattern top row must equal the weight");
    const DominantWeight dual = dual_weight(t.weight);
    if (!(t.dual_pattern.top() == dual))
        throw std::domain_error("from_triple: dual pattern top row must equal the dual weight");
    return BSPoint(assemble_values(t.weight, t.pattern.sub_rows_flat(), dual,
                                   t.dual_pattern.sub_rows_flat()));
}

bool round_to_lattice(std::span<const double> v, double tol,
                      std::vector<std::int64_t>& out) {
    std::vector<std::int64_t> rounded;
    rounded.reserve(v.size());
    for (double x : v) {
        const double r = std::nearbyint(x);
        if (std::abs(x - r) > tol) return false;
        rounded.push_back(static_cast<std::int64_t>(r));
    }
    out = std::move(rounded);
    return true;
}

} // namespace gcq
