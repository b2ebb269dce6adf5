// gcq: double Gelfand-Cetlin systems on T*U(n) from the command line.
//
// Subcommands: gc-map, sweep, bs, pw, dim, sample. Exit codes: 0 success or
// agreement, 1 mismatch/violations, 2 parse failure, 3 numerical failure,
// 4 capacity exceeded.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcq/bohr_sommerfeld.hpp"
#include "gcq/common.hpp"
#include "gcq/gc_map.hpp"
#include "gcq/io.hpp"
#include "gcq/peter_weyl.hpp"
#include "gcq/polytope.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitCapacity = 4;

gcq::OutputFormat parse_format(const std::string& name) {
    if (name == "json") return gcq::OutputFormat::json;
    if (name == "csv") return gcq::OutputFormat::csv;
    return gcq::OutputFormat::pretty;
}

std::string join_reals(const Eigen::VectorXd& v, const char* sep) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i > 0) out += sep;
        out += gcq::format_real(v[i]);
    }
    return out;
}

std::string join_ints(std::span<const std::int64_t> v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

int run_gc_map(const std::string& path, gcq::OutputFormat format) {
    const gcq::HermitianMatrix xi = gcq::read_hermitian_json_file(path);
    const gcq::GCVector v = gcq::gc_map(xi);
    switch (format) {
        case gcq::OutputFormat::json:
            std::cout << gcq::to_json(v) << "\n";
            break;
        case gcq::OutputFormat::csv:
            std::cout << join_reals(v.values(), ",") << "\n";
            break;
        case gcq::OutputFormat::pretty:
            std::cout << join_reals(v.values(), " ") << "\n";
            break;
    }
    return kExitOk;
}

int run_sweep(const std::string& path, gcq::OutputFormat format) {
    const gcq::HermitianMatrix xi = gcq::read_hermitian_json_file(path);
    const gcq::HermitianMatrix swept = gcq::sweep(xi);
    if (format == gcq::OutputFormat::json) {
        std::cout << gcq::to_json(swept) << "\n";
        return kExitOk;
    }
    const Eigen::VectorXd diag = swept.mat().diagonal().real();
    std::cout << join_reals(diag, format == gcq::OutputFormat::csv ? "," : " ")
              << "\n";
    return kExitOk;
}

int run_bs(int n, std::int64_t max_weight, const std::string& variant_name,
           std::uint64_t cap, gcq::OutputFormat format) {
    const gcq::BSVariant variant = variant_name == "strict"
                                       ? gcq::BSVariant::strict_regular
                                       : gcq::BSVariant::closure;
    const auto points = gcq::enumerate_bs_points(n, max_weight, variant, cap);
    switch (format) {
        case gcq::OutputFormat::json:
            for (const auto& p : points) std::cout << gcq::to_json(p) << "\n";
            std::cout << "{\"count\":" << points.size() << "}\n";
            break;
        case gcq::OutputFormat::csv:
            std::cout << "weight,pattern,dual_pattern\n";
            for (const auto& p : points)
                std::cout << join_ints(p.weight(), " ") << ","
                          << join_ints(p.pattern(), " ") << ","
                          << join_ints(p.dual_pattern(), " ") << "\n";
            std::cout << "count," << points.size() << "\n";
            break;
        case gcq::OutputFormat::pretty:
            for (const auto& p : points)
                std::cout << join_ints(p.values(), " ") << "\n";
            std::cout << "count " << points.size() << "\n";
            break;
    }
    return kExitOk;
}

int run_pw(int n, std::int64_t max_weight, std::uint64_t cap,
           gcq::OutputFormat format) {
    const gcq::PWReport report = gcq::pw_check(n, max_weight, cap);
    std::cout << gcq::pw_table(report, format);
    return report.agree ? kExitOk : kExitMismatch;
}

int run_dim(const std::string& weight_text, gcq::OutputFormat format) {
    std::vector<std::int64_t> entries;
    std::stringstream ss(weight_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            entries.push_back(std::stoll(item, &used));
            if (used != item.size()) throw gcq::ParseError("bad weight entry: " + item);
        } catch (const std::logic_error&) {
            throw gcq::ParseError("bad weight entry: " + item);
        }
    }
    if (entries.empty()) throw gcq::ParseError("empty weight");
    gcq::DominantWeight alpha(std::move(entries)); // throws if not non-increasing
    const gcq::BigUint dim = gcq::weyl_dim(alpha);
    const gcq::BigUint count = gcq::count_integral_points(alpha);
    const bool agree = dim == count;
    switch (format) {
        case gcq::OutputFormat::json:
            std::cout << "{\"weyl_dim\":\"" << dim << "\",\"gc_count\":\"" << count
                      << "\",\"agree\":" << (agree ? "true" : "false") << "}\n";
            break;
        case gcq::OutputFormat::csv:
            std::cout << "weyl_dim,gc_count,agree\n"
                      << dim << "," << count << "," << (agree ? "true" : "false")
                      << "\n";
            break;
        case gcq::OutputFormat::pretty:
            std::cout << dim << " " << count << " " << (agree ? "AGREE" : "MISMATCH")
                      << "\n";
            break;
    }
    return agree ? kExitOk : kExitMismatch;
}

int run_sample(int n, int count, std::uint64_t seed, double tol, bool inject) {
    gcq::Rng rng(seed);
    int pass_pairing = 0, pass_in_b = 0, pass_interlace = 0, pass_top_row = 0;
    for (int s = 0; s < count; ++s) {
        const gcq::CotangentPoint point = gcq::random_cotangent(n, rng);
        auto [m1, m2] = gcq::moment_map(point);
        if (inject) {
            // Negative control: knock the first component off the constraint
            // subspace and off the spectrum of xi.
            gcq::ComplexMatrix bad = m1.mat();
            bad(0, 0) += gcq::Complex(1e-3, 0.0);
            m1 = gcq::HermitianMatrix(bad);
        }
        const gcq::GCVector v1 = gcq::gc_map(m1);
        const gcq::GCVector v2 = gcq::gc_map(m2);
        const gcq::DoubleGCVector both(v1, v2);

        bool pairing_ok = true;
        for (int k = 0; k < n; ++k)
            if (std::abs(v1.row(0)[k] + v2.row(0)[n - 1 - k]) > tol)
                pairing_ok = false;
        pass_pairing += pairing_ok;

        pass_in_b += gcq::in_B(both, tol);
        pass_interlace += v1.interlaces(tol) && v2.interlaces(tol);

        const gcq::GCVector base = gcq::gc_map(point.xi);
        bool top_ok = true;
        for (int k = 0; k < n; ++k)
            if (std::abs(v1.row(0)[k] - base.row(0)[k]) > tol) top_ok = false;
        pass_top_row += top_ok;
    }
    const bool all_ok = pass_pairing == count && pass_in_b == count &&
                        pass_interlace == count && pass_top_row == count;
    std::cout << "pairing      " << pass_pairing << "/" << count << "\n"
              << "in-B         " << pass_in_b << "/" << count << "\n"
              << "interlacing  " << pass_interlace << "/" << count << "\n"
              << "top-row      " << pass_top_row << "/" << count << "\n"
              << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double Gelfand-Cetlin system on T*U(n): Bohr-Sommerfeld sets "
                 "and Peter-Weyl dimension counting"};
    app.require_subcommand(1);

    std::string format_name = "pretty";
    auto add_format = [&format_name](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}))
            ->capture_default_str();
    };

    // gc-map
    auto* gc_cmd = app.add_subcommand("gc-map", "Gelfand-Cetlin vector of a matrix");
    std::string gc_file;
    gc_cmd->add_option("file", gc_file, "JSON matrix file")->required();
    add_format(gc_cmd);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Sorted spectrum (orbit representative)");
    std::string sweep_file;
    sweep_cmd->add_option("file", sweep_file, "JSON matrix file")->required();
    add_format(sweep_cmd);

    // bs
    auto* bs_cmd = app.add_subcommand("bs", "Enumerate Bohr-Sommerfeld points");
    int bs_n = 1;
    std::int64_t bs_max = 0;
    std::string bs_variant = "closure";
    std::uint64_t bs_cap = gcq::kDefaultEnumerationCap;
    bs_cmd->add_option("--n", bs_n, "Rank n of U(n)")->required()->check(CLI::PositiveNumber);
    bs_cmd->add_option("--max", bs_max, "Weight box bound N")->required()
        ->check(CLI::NonNegativeNumber);
    bs_cmd->add_option("--variant", bs_variant, "Bohr-Sommerfeld variant")
        ->check(CLI::IsMember({"strict", "closure"}))
        ->capture_default_str();
    bs_cmd->add_option("--cap", bs_cap, "Enumeration cap")->capture_default_str();
    add_format(bs_cmd);

    // pw
    auto* pw_cmd = app.add_subcommand("pw", "Truncated Peter-Weyl dimension check");
    int pw_n = 1;
    std::int64_t pw_max = 0;
    std::uint64_t pw_cap = gcq::kDefaultEnumerationCap;
    pw_cmd->add_option("--n", pw_n, "Rank n of U(n)")->required()->check(CLI::PositiveNumber);
    pw_cmd->add_option("--max", pw_max, "Weight box bound N")->required()
        ->check(CLI::NonNegativeNumber);
    pw_cmd->add_option("--cap", pw_cap, "Weight box cap")->capture_default_str();
    add_format(pw_cmd);

    // dim
    auto* dim_cmd = app.add_subcommand("dim", "Irrep dimension vs GC lattice count");
    std::string dim_weight;
    dim_cmd->add_option("weight", dim_weight, "Comma-separated weight, e.g. 2,1,0")
        ->required();
    add_format(dim_cmd);

    // sample
    auto* sample_cmd =
        app.add_subcommand("sample", "Random-point invariants of the double GC map");
    int sample_n = 2;
    int sample_count = 100;
    std::uint64_t sample_seed = 0;
    double sample_tol = 1e-8;
    bool sample_inject = false;
    sample_cmd->add_option("--n", sample_n, "Rank n of U(n)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sample_cmd->add_option("--count", sample_count, "Number of sample points")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sample_cmd->add_option("--seed", sample_seed, "PRNG seed")->capture_default_str();
    sample_cmd->add_option("--tol", sample_tol, "Invariant tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sample_cmd->add_flag("--inject", sample_inject,
                         "Perturb the first moment component (negative control)");

    CLI11_PARSE(app, argc, argv);
    const gcq::OutputFormat format = parse_format(format_name);

    try {
        if (gc_cmd->parsed()) return run_gc_map(gc_file, format);
        if (sweep_cmd->parsed()) return run_sweep(sweep_file, format);
        if (bs_cmd->parsed()) return run_bs(bs_n, bs_max, bs_variant, bs_cap, format);
        if (pw_cmd->parsed()) return run_pw(pw_n, pw_max, pw_cap, format);
        if (dim_cmd->parsed()) return run_dim(dim_weight, format);
        if (sample_cmd->parsed())
            return run_sample(sample_n, sample_count, sample_seed, sample_tol,
                              sample_inject);
    } catch (const gcq::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const gcq::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const gcq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
