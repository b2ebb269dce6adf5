#pragma once

#include <stdexcept>
#include <string>

namespace gcq {

/// Thrown when an iterative numerical routine fails to reach its target
/// residual within its iteration cap. Carries the residual at abort.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Thrown when an enumeration would exceed its configured capacity cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed input data (bad JSON, wrong schema, NaN/Inf entries).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, csv, pretty };

} // namespace gcq
