#pragma once

#include <string>
#include <vector>

#include "gcq/bohr_sommerfeld.hpp"
#include "gcq/common.hpp"

namespace gcq {

/// One weight's worth of the truncated Peter-Weyl ledger.
struct PWRow {
    DominantWeight alpha;
    BigUint dim_v;          // Weyl dimension of V_alpha
    BigUint dim_v_dual;     // Weyl dimension of V_{alpha*}
    BigUint gc_count;       // integral points of GC_alpha
    BigUint gc_dual_count;  // integral points of GC_{alpha*}
    BigUint contribution;   // gc_count * gc_dual_count
};

/// Result of the truncated Peter-Weyl verification: both sides of the
/// dimension identity restricted to weights with |alpha_i| <= max_weight.
/// total_bs counts closure Bohr-Sommerfeld points in the box; total_sum adds
/// the per-weight contributions. A report with agree == false is a failing
/// verification result, not an error.
struct PWReport {
    int n = 0;
    std::int64_t max_weight = 0;
    std::vector<PWRow> rows; // weights in lexicographic descending order
    BigUint total_bs;
    BigUint total_sum;
    bool agree = false;
};

PWReport pw_check(int n, std::int64_t max_weight,
                  std::uint64_t weight_cap = kDefaultEnumerationCap);

/// Deterministic rendering. CSV has the fixed header
/// alpha,dim,dim_dual,gc,gc_dual,contribution and one row per weight; the
/// pretty format ends with an AGREE or MISMATCH line.
std::string pw_table(const PWReport& report, OutputFormat format);

} // namespace gcq
