#pragma once

#include <iosfwd>
#include <string>

#include "gcq/bohr_sommerfeld.hpp"
#include "gcq/gc_map.hpp"

namespace gcq {

/// Reads the JSON matrix format {"n": int, "entries": [[[re, im], ...], ...]}
/// (row-major). Rejects malformed documents, wrong shapes, and non-finite
/// entries with ParseError; hermiticity violations surface as
/// std::invalid_argument from the matrix constructor.
HermitianMatrix read_hermitian_json(std::istream& in);
HermitianMatrix read_hermitian_json(const std::string& text);
HermitianMatrix read_hermitian_json_file(const std::string& path);

std::string to_json(const HermitianMatrix& m);

/// GC vectors serialize as flat JSON arrays in the enumeration order; the
/// double vector appends the second half.
std::string to_json(const GCVector& v);
std::string to_json(const DoubleGCVector& v);

/// {"alpha": [...], "rows": [[...], ...]} with rows[0] == alpha.
std::string to_json(const GCPattern& p);

/// Flat JSON integer array of length 2b.
std::string to_json(const BSPoint& p);

/// Shortest exact decimal rendering of a double (printf %.17g); the one
/// formatter every CLI surface uses, so output stays byte-deterministic.
std::string format_real(double x);

} // namespace gcq
