#include "gcq/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gcq {

namespace {

using nlohmann::json;

double finite_number(const json& v) {
    if (!v.is_number()) throw ParseError("matrix entry is not a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ParseError("matrix entries must be finite");
    return x;
}

HermitianMatrix matrix_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
        throw ParseError("matrix document needs fields \"n\" and \"entries\"");
    if (!doc["n"].is_number_integer())
        throw ParseError("field \"n\" must be an integer");
    const long long n = doc["n"].get<long long>();
    if (n < 1) throw ParseError("field \"n\" must be positive");
    const json& entries = doc["entries"];
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n))
        throw ParseError("\"entries\" must be an n x n array");
    ComplexMatrix m(n, n);
    for (long long i = 0; i < n; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw ParseError("\"entries\" must be an n x n array");
        for (long long j = 0; j < n; ++j) {
            const json& cell = row[j];
            if (!cell.is_array() || cell.size() != 2)
                throw ParseError("each entry must be a [re, im] pair");
            m(i, j) = Complex(finite_number(cell[0]), finite_number(cell[1]));
        }
    }
    return HermitianMatrix(m);
}

json parse_document(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

} // namespace

HermitianMatrix read_hermitian_json(std::istream& in) {
    return matrix_from_json(parse_document(in));
}

HermitianMatrix read_hermitian_json(const std::string& text) {
    std::istringstream in(text);
    return read_hermitian_json(in);
}

HermitianMatrix read_hermitian_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_hermitian_json(in);
}

std::string to_json(const HermitianMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.n(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        entries.push_back(std::move(row));
    }
    return json{{"n", m.n()}, {"entries", std::move(entries)}}.dump();
}

std::string to_json(const GCVector& v) {
    json arr = json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr.dump();
}

std::string to_json(const DoubleGCVector& v) {
    json arr = json::array();
    for (int i = 0; i < v.first.size(); ++i) arr.push_back(v.first[i]);
    for (int i = 0; i < v.second.size(); ++i) arr.push_back(v.second[i]);
    return arr.dump();
}

std::string to_json(const GCPattern& p) {
    return json{{"alpha", p.rows()[0]}, {"rows", p.rows()}}.dump();
}

std::string to_json(const BSPoint& p) {
    return json(p.values()).dump();
}

std::string format_real(double x) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

} // namespace gcq
