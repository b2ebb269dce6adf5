#include "gcq/gc_map.hpp"

#include <stdexcept>

namespace gcq {

GCVector::GCVector(int n, RealVector values) : n_(n), values_(std::move(values)) {
    if (n < 1) throw std::invalid_argument("GCVector: n must be positive");
    if (values_.size() != gc_length(n))
        throw std::invalid_argument("GCVector: expected length n(n+1)/2");
}

bool GCVector::interlaces(double tol) const {
    for (int j = 0; j < n_; ++j) {
        const auto r = row(j);
        for (int k = 0; k + 1 < row_length(j); ++k)
            if (r[k] < r[k + 1] - tol) return false;
    }
    for (int j = 0; j + 1 < n_; ++j) {
        const auto upper = row(j);
        const auto lower = row(j + 1);
        for (int k = 0; k < row_length(j + 1); ++k) {
            if (upper[k] < lower[k] - tol) return false;
            if (lower[k] < upper[k + 1] - tol) return false;
        }
    }
    return true;
}

CotangentPoint::CotangentPoint(UnitaryMatrix g_in, HermitianMatrix xi_in)
    : g(std::move(g_in)), xi(std::move(xi_in)) {
    if (g.n() != xi.n())
        throw std::invalid_argument("CotangentPoint: dimension mismatch");
}

DoubleGCVector::DoubleGCVector(GCVector first_in, GCVector second_in)
    : first(std::move(first_in)), second(std::move(second_in)) {
    if (first.n() != second.n())
        throw std::invalid_argument("DoubleGCVector: dimension mismatch");
}

RealVector DoubleGCVector::flatten() const {
    RealVector out(2 * first.size());
    out << first.values(), second.values();
    return out;
}

GCVector gc_map(const HermitianMatrix& xi) {
    const int n = xi.n();
    RealVector values(gc_length(n));
    int offset = 0;
    for (int j = 0; j < n; ++j) {
        const Spectrum spec = eigenvalues_desc(corner(xi, j));
        values.segment(offset, n - j) = spec.values();
        offset += n - j;
    }
    return GCVector(n, std::move(values));
}

double default_sreg_tol(const HermitianMatrix& xi) {
    return 1e-9 * std::max(1.0, xi.norm());
}

namespace {

bool strongly_regular_gc(const GCVector& v, double tol) {
    const int n = v.n();
    // Within-row chains.
    for (int j = 0; j < n; ++j) {
        const auto r = v.row(j);
        for (int k = 0; k + 1 < v.row_length(j); ++k)
            if (!(r[k] - r[k + 1] > tol)) return false;
    }
    // Down-column chains: column k exists in rows 0..n-k (1-based k).
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j + 1 < n - k; ++j) {
            if (!(v.row(j)[k] - v.row(j + 1)[k] > tol)) return false;
        }
    }
    return true;
}

} // namespace

bool is_strongly_regular(const HermitianMatrix& xi, double tol) {
    if (tol < 0) throw std::domain_error("is_strongly_regular: tol must be >= 0");
    return strongly_regular_gc(gc_map(xi), tol);
}

bool is_strongly_regular(const HermitianMatrix& xi) {
    return is_strongly_regular(xi, default_sreg_tol(xi));
}

std::pair<HermitianMatrix, HermitianMatrix> moment_map(const CotangentPoint& p) {
    return {coadjoint(p.g, p.xi), -p.xi};
}

DoubleGCVector double_gc(const CotangentPoint& p) {
    const auto [first, second] = moment_map(p);
    return DoubleGCVector(gc_map(first), gc_map(second));
}

bool in_B(const DoubleGCVector& v, double tol) {
    if (tol < 0) throw std::domain_error("in_B: tol must be >= 0");
    const int n = v.n();
    const auto first_top = v.first.row(0);
    const auto second_top = v.second.row(0);
    for (int k = 0; k < n; ++k) {
        if (std::abs(second_top[k] + first_top[n - 1 - k]) > tol) return false;
    }
    return true;
}

bool is_sreg_point(const CotangentPoint& p, double tol) {
    const auto [first, second] = moment_map(p);
    return is_strongly_regular(first, tol) && is_strongly_regular(second, tol);
}

bool is_sreg_point(const CotangentPoint& p) {
    const auto [first, second] = moment_map(p);
    return is_strongly_regular(first) && is_strongly_regular(second);
}

CotangentPoint random_cotangent(int n, Rng& rng) {
    UnitaryMatrix g = haar_unitary(n, rng);
    HermitianMatrix xi = random_hermitian(n, rng);
    return CotangentPoint(std::move(g), std::move(xi));
}

} // namespace gcq
