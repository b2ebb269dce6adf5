#include "gcq/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gcq/common.hpp"

namespace gcq {

namespace {

/// Interlacing over an abstract triangular array: ge(a, b) decides "a >= b"
/// in whatever sense (exact, strict, slackened) the caller needs.
template <typename Row, typename GE>
bool rows_interlace(const std::vector<Row>& rows, GE ge) {
    for (std::size_t j = 0; j + 1 < rows.size(); ++j) {
        const auto& upper = rows[j];
        const auto& lower = rows[j + 1];
        for (std::size_t k = 0; k < lower.size(); ++k) {
            if (!ge(upper[k], lower[k])) return false;
            if (!ge(lower[k], upper[k + 1])) return false;
        }
    }
    return true;
}

/// Assembles the triangular array with top row alpha and lower rows taken
/// from the flattened point p; T is the entry type of p.
template <typename T>
std::vector<std::vector<T>> assemble_rows(const DominantWeight& alpha,
                                          const std::vector<T>& p) {
    const int n = alpha.n();
    if (static_cast<int>(p.size()) != n * (n - 1) / 2)
        throw std::domain_error("GC membership: point has wrong length");
    std::vector<std::vector<T>> rows(n);
    rows[0].assign(alpha.alpha().begin(), alpha.alpha().end());
    std::size_t pos = 0;
    for (int j = 1; j < n; ++j) {
        rows[j].assign(p.begin() + pos, p.begin() + pos + (n - j));
        pos += n - j;
    }
    return rows;
}

/// Calls fn(row) for every integer row of length |row|-1 interlacing `row`,
/// in lexicographic ascending order.
template <typename Fn>
void for_each_successor_row(const std::vector<std::int64_t>& row, bool strict,
                            Fn&& fn) {
    const int m = static_cast<int>(row.size()) - 1;
    std::vector<std::int64_t> lo(m), hi(m), cur(m);
    for (int k = 0; k < m; ++k) {
        lo[k] = strict ? row[k + 1] + 1 : row[k + 1];
        hi[k] = strict ? row[k] - 1 : row[k];
        if (lo[k] > hi[k]) return;
    }
    cur = lo;
    while (true) {
        fn(cur);
        int k = m - 1;
        while (k >= 0 && cur[k] == hi[k]) {
            cur[k] = lo[k];
            --k;
        }
        if (k < 0) return;
        ++cur[k];
    }
}

void enumerate_rec(std::vector<std::vector<std::int64_t>>& rows, int level, int n,
                   bool strict, std::vector<GCPattern>& out) {
    if (level == n) {
        out.emplace_back(rows);
        return;
    }
    for_each_successor_row(rows[level - 1], strict,
                           [&](const std::vector<std::int64_t>& next) {
                               rows.push_back(next);
                               enumerate_rec(rows, level + 1, n, strict, out);
                               rows.pop_back();
                           });
}

} // namespace

DominantWeight::DominantWeight(std::vector<std::int64_t> entries)
    : alpha_(std::move(entries)) {
    if (alpha_.empty())
        throw std::invalid_argument("DominantWeight: need at least one entry");
    for (std::size_t i = 0; i + 1 < alpha_.size(); ++i)
        if (alpha_[i] < alpha_[i + 1])
            throw std::invalid_argument("DominantWeight: entries must be non-increasing");
}

bool DominantWeight::strictly_decreasing() const {
    for (std::size_t i = 0; i + 1 < alpha_.size(); ++i)
        if (alpha_[i] <= alpha_[i + 1]) return false;
    return true;
}

GCPattern::GCPattern(std::vector<std::vector<std::int64_t>> rows)
    : rows_(std::move(rows)) {
    const int n = static_cast<int>(rows_.size());
    if (n < 1) throw std::invalid_argument("GCPattern: need at least one row");
    for (int j = 0; j < n; ++j)
        if (static_cast<int>(rows_[j].size()) != n - j)
            throw std::invalid_argument("GCPattern: row " + std::to_string(j) +
                                        " must have " + std::to_string(n - j) +
                                        " entries");
    for (std::size_t i = 0; i + 1 < rows_[0].size(); ++i)
        if (rows_[0][i] < rows_[0][i + 1])
            throw std::invalid_argument("GCPattern: top row must be non-increasing");
    if (!rows_interlace(rows_, [](std::int64_t a, std::int64_t b) { return a >= b; }))
        throw std::invalid_argument("GCPattern: rows must interlace");
}

std::vector<std::int64_t> GCPattern::sub_rows_flat() const {
    std::vector<std::int64_t> out;
    out.reserve(n() * (n() - 1) / 2);
    for (int j = 1; j < n(); ++j)
        out.insert(out.end(), rows_[j].begin(), rows_[j].end());
    return out;
}

bool GCPattern::strictly_interior() const {
    return rows_interlace(rows_, [](std::int64_t a, std::int64_t b) { return a > b; });
}

bool contains(const DominantWeight& alpha, const RationalPoint& p) {
    const auto rows = assemble_rows(alpha, p);
    return rows_interlace(rows, [](const Rational& a, const Rational& b) { return a >= b; });
}

bool contains_interior(const DominantWeight& alpha, const RationalPoint& p) {
    const auto rows = assemble_rows(alpha, p);
    return rows_interlace(rows, [](const Rational& a, const Rational& b) { return a > b; });
}

bool contains_approx(const DominantWeight& alpha, const std::vector<double>& p,
                     double tol) {
    const auto rows = assemble_rows(alpha, p);
    return rows_interlace(rows, [tol](double a, double b) { return a >= b - tol; });
}

std::vector<GCPattern> enumerate_integral_points(const DominantWeight& alpha,
                                                 Region region, std::uint64_t cap) {
    const bool strict = region == Region::interior;
    const BigUint total = count_integral_points(alpha, region);
    if (total > BigUint(cap))
        throw CapacityError("enumerate_integral_points: " + total.to_string() +
                            " patterns exceed cap " + std::to_string(cap));
    std::vector<GCPattern> out;
    out.reserve(static_cast<std::size_t>(total.to_uint64()));
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(alpha.n());
    rows.push_back(alpha.alpha());
    enumerate_rec(rows, 1, alpha.n(), strict, out);
    return out;
}

BigUint count_integral_points(const DominantWeight& alpha, Region region) {
    const bool strict = region == Region::interior;
    std::map<std::vector<std::int64_t>, BigUint> level;
    level.emplace(alpha.alpha(), BigUint(1));
    for (int len = alpha.n(); len > 1; --len) {
        std::map<std::vector<std::int64_t>, BigUint> next;
        for (const auto& [row, cnt] : level) {
            for_each_successor_row(row, strict,
                                   [&](const std::vector<std::int64_t>& succ) {
                                       next[succ] += cnt;
                                   });
        }
        level = std::move(next);
    }
    BigUint total;
    for (const auto& [row, cnt] : level) total += cnt;
    return total;
}

BigUint weyl_dim(const DominantWeight& alpha) {
    const auto& a = alpha.alpha();
    const int n = alpha.n();
    BigUint dim(1);
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i)
            dim *= BigUint(static_cast<std::uint64_t>(a[i] - a[j] + (j - i)));
        // The j-th block's denominator is exactly the multiset {1, ..., j},
        // so dividing element by element stays exact.
        for (int d = 2; d <= j; ++d) dim.div_exact(static_cast<std::uint32_t>(d));
    }
    return dim;
}

DominantWeight dual_weight(const DominantWeight& alpha) {
    std::vector<std::int64_t> out(alpha.alpha().rbegin(), alpha.alpha().rend());
    for (auto& v : out) v = -v;
    return DominantWeight(std::move(out));
}

std::vector<DominantWeight> dominant_weights_in_box(int n, std::int64_t max_abs,
                                                    bool strictly_decreasing,
                                                    std::uint64_t cap) {
    if (n < 1) throw std::domain_error("dominant_weights_in_box: n must be positive");
    if (max_abs < 0)
        throw std::domain_error("dominant_weights_in_box: bound must be >= 0");
    std::vector<DominantWeight> out;
    std::vector<std::int64_t> cur;
    cur.reserve(n);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            if (out.size() >= cap)
                throw CapacityError("dominant_weights_in_box: weight box exceeds cap " +
                                    std::to_string(cap));
            out.emplace_back(cur);
            return;
        }
        std::int64_t hi = max_abs;
        if (depth > 0) hi = std::min(hi, cur.back() - (strictly_decreasing ? 1 : 0));
        for (std::int64_t v = hi; v >= -max_abs; --v) {
            cur.push_back(v);
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace gcq
