#include "gcq/peter_weyl.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "parallel.hpp"

namespace gcq {

namespace {

std::string weight_csv(const DominantWeight& w) {
    std::string out;
    for (int i = 0; i < w.n(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

std::string weight_pretty(const DominantWeight& w) {
    return "(" + weight_csv(w) + ")";
}

} // namespace

PWReport pw_check(int n, std::int64_t max_weight, std::uint64_t weight_cap) {
    if (n < 1) throw std::domain_error("pw_check: n must be positive");
    if (max_weight < 0) throw std::domain_error("pw_check: bound must be >= 0");
    const auto weights = dominant_weights_in_box(n, max_weight, false, weight_cap);

    auto rows = detail::parallel_map<PWRow>(weights.size(), [&](std::size_t i) {
        const DominantWeight& alpha = weights[i];
        const DominantWeight dual = dual_weight(alpha);
        PWRow row{alpha,
                  weyl_dim(alpha),
                  weyl_dim(dual),
                  count_integral_points(alpha),
                  count_integral_points(dual),
                  BigUint()};
        row.contribution = row.gc_count * row.gc_dual_count;
        return row;
    });

    PWReport report;
    report.n = n;
    report.max_weight = max_weight;
    report.rows = std::move(rows);
    for (const auto& row : report.rows) report.total_sum += row.contribution;
    report.total_bs = count_bs_points(n, max_weight, BSVariant::closure);
    report.agree = report.total_bs == report.total_sum;
    return report;
}

std::string pw_table(const PWReport& report, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "alpha,dim,dim_dual,gc,gc_dual,contribution\n";
        for (const auto& row : report.rows) {
            out << '"' << weight_csv(row.alpha) << "\"," << row.dim_v << ','
                << row.dim_v_dual << ',' << row.gc_count << ',' << row.gc_dual_count
                << ',' << row.contribution << '\n';
        }
        return out.str();
    }

    if (format == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["n"] = report.n;
        j["max_weight"] = report.max_weight;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : report.rows) {
            nlohmann::ordered_json r;
            r["alpha"] = row.alpha.alpha();
            r["dim"] = row.dim_v.to_string();
            r["dim_dual"] = row.dim_v_dual.to_string();
            r["gc"] = row.gc_count.to_string();
            r["gc_dual"] = row.gc_dual_count.to_string();
            r["contribution"] = row.contribution.to_string();
            j["rows"].push_back(std::move(r));
        }
        j["total_bs"] = report.total_bs.to_string();
        j["total_sum"] = report.total_sum.to_string();
        j["agree"] = report.agree;
        return j.dump() + "\n";
    }

    // pretty
    std::vector<std::array<std::string, 6>> cells;
    cells.push_back({"alpha", "dim", "dim_dual", "gc", "gc_dual", "contribution"});
    for (const auto& row : report.rows) {
        cells.push_back({weight_pretty(row.alpha), row.dim_v.to_string(),
                         row.dim_v_dual.to_string(), row.gc_count.to_string(),
                         row.gc_dual_count.to_string(), row.contribution.to_string()});
    }
    std::array<std::size_t, 6> width{};
    for (const auto& line : cells)
        for (std::size_t c = 0; c < 6; ++c)
            width[c] = std::max(width[c], line[c].size());

    std::ostringstream out;
    out << "Peter-Weyl dimension check  n=" << report.n << "  N=" << report.max_weight
        << "\n";
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < 6; ++c) {
            if (c > 0) out << "  ";
            // left-align the weight column, right-align the counts
            if (c == 0)
                out << line[c] << std::string(width[c] - line[c].size(), ' ');
            else
                out << std::string(width[c] - line[c].size(), ' ') << line[c];
        }
        out << "\n";
    }
    out << "total_bs  " << report.total_bs << "\n";
    out << "total_sum " << report.total_sum << "\n";
    out << (report.agree ? "AGREE" : "MISMATCH") << "\n";
    return out.str();
}

} // namespace gcq
