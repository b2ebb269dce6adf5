#pragma once

#include <utility>

#include "gcq/linalg.hpp"

namespace gcq {

/// Number of corner eigenvalues of an n x n Hermitian matrix: n(n+1)/2.
constexpr int gc_length(int n) { return n * (n + 1) / 2; }

/// Value of the Gelfand-Cetlin map: the eigenvalues of every bottom-right
/// corner, flattened as (row 0, row 1, ..., row n-1) where row j holds the
/// n-j non-increasing eigenvalues of the (n-j) x (n-j) corner. Row 0 is the
/// full spectrum. This flattening order is the wire contract for all
/// serialized GC vectors.
class GCVector {
public:
    GCVector(int n, RealVector values);

    int n() const { return n_; }
    /// Total length n(n+1)/2.
    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[i]; }
    const RealVector& values() const { return values_; }

    int row_offset(int j) const { return j * n_ - j * (j - 1) / 2; }
    int row_length(int j) const { return n_ - j; }
    Eigen::VectorBlock<const RealVector> row(int j) const {
        return values_.segment(row_offset(j), row_length(j));
    }

    /// True when every row is non-increasing and consecutive rows interlace,
    /// all inequalities slackened by tol.
    bool interlaces(double tol) const;

private:
    int n_;
    RealVector values_;
};

/// Point (g, xi) of the cotangent bundle of U(n) in the left trivialization.
struct CotangentPoint {
    CotangentPoint(UnitaryMatrix g_in, HermitianMatrix xi_in);

    UnitaryMatrix g;
    HermitianMatrix xi;

    int n() const { return xi.n(); }
};

/// Pair of GC vectors (one per moment-map component), flattened length 2b.
/// Values produced by double_gc satisfy the pairing constraint checked by
/// in_B, up to eigensolver tolerance.
struct DoubleGCVector {
    DoubleGCVector(GCVector first_in, GCVector second_in);

    GCVector first;
    GCVector second;

    int n() const { return first.n(); }
    RealVector flatten() const;
};

/// The Gelfand-Cetlin map: row j = eigenvalues_desc(corner(xi, j)).
GCVector gc_map(const HermitianMatrix& xi);

/// Default gap tolerance for strong-regularity decisions:
/// 1e-9 * max(1, ||xi||_F).
double default_sreg_tol(const HermitianMatrix& xi);

/// True when every within-row chain and every down-column chain of the GC
/// vector is strictly decreasing with gaps > tol. Pass tol = 0 for exact
/// comparisons (sensible for integer-diagonal inputs).
bool is_strongly_regular(const HermitianMatrix& xi, double tol);
bool is_strongly_regular(const HermitianMatrix& xi);

/// Moment map of the U(n) x U(n) action: (g, xi) -> (g xi g', -xi).
std::pair<HermitianMatrix, HermitianMatrix> moment_map(const CotangentPoint& p);

/// The double Gelfand-Cetlin map: GC vectors of both moment-map components.
DoubleGCVector double_gc(const CotangentPoint& p);

/// Membership in the constraint subspace B: the top rows of the two halves
/// must pair up as second.row(0)[k] = -first.row(0)[n-1-k], within tol.
bool in_B(const DoubleGCVector& v, double tol);

/// True when both moment-map components are strongly regular.
bool is_sreg_point(const CotangentPoint& p, double tol);
bool is_sreg_point(const CotangentPoint& p);

/// Random cotangent point (Haar unitary, GUE Hermitian) for property tests.
CotangentPoint random_cotangent(int n, Rng& rng);

} // namespace gcq
