#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "gcq/common.hpp"

namespace gcq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

namespace tolerances {
/// Max admissible entrywise deviation |X(i,j) - conj(X(j,i))| before the
/// constructor symmetrizes.
inline constexpr double kHermitianDeviation = 1e-12;
/// Max admissible entry of |U'U - I| on unitary construction.
inline constexpr double kUnitaryDeviation = 1e-10;
/// Eigensolver stops when the off-diagonal Frobenius norm drops below this
/// fraction of the input Frobenius norm.
inline constexpr double kJacobiOffDiagonal = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;
} // namespace tolerances

/// Hermitian n x n matrix, the model for points of u(n)* throughout.
///
/// Construction validates finiteness and hermiticity (entrywise deviation at
/// most 1e-12) and then stores the exactly symmetrized matrix (X + X')/2 with
/// the diagonal imaginary parts zeroed, so downstream code may rely on
/// mat() being Hermitian as stored.
class HermitianMatrix {
public:
    template <typename Derived>
    explicit HermitianMatrix(const Eigen::MatrixBase<Derived>& raw)
        : mat_(validated(raw.template cast<Complex>())) {}

    static HermitianMatrix diagonal(const RealVector& d);
    static HermitianMatrix zero(int n);

    int n() const { return static_cast<int>(mat_.rows()); }
    const ComplexMatrix& mat() const { return mat_; }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return mat_(i, j); }

    /// Frobenius norm.
    double norm() const { return mat_.norm(); }

    HermitianMatrix operator-() const { return HermitianMatrix(Trusted{}, -mat_); }

private:
    struct Trusted {};
    HermitianMatrix(Trusted, ComplexMatrix m) : mat_(std::move(m)) {}
    static ComplexMatrix validated(ComplexMatrix raw);

    ComplexMatrix mat_;

    friend HermitianMatrix corner(const HermitianMatrix&, int);
};

/// Unitary n x n matrix; construction validates ||U'U - I||_max <= 1e-10.
class UnitaryMatrix {
public:
    template <typename Derived>
    explicit UnitaryMatrix(const Eigen::MatrixBase<Derived>& raw)
        : mat_(validated(raw.template cast<Complex>())) {}

    static UnitaryMatrix identity(int n);

    int n() const { return static_cast<int>(mat_.rows()); }
    const ComplexMatrix& mat() const { return mat_; }

private:
    static ComplexMatrix validated(ComplexMatrix raw);

    ComplexMatrix mat_;
};

/// Non-increasing list of real eigenvalues.
class Spectrum {
public:
    explicit Spectrum(RealVector values);

    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int k) const { return values_[k]; }
    const RealVector& values() const { return values_; }

private:
    RealVector values_;
};

/// Bottom-right (n-j) x (n-j) principal submatrix, j in [0, n-1].
HermitianMatrix corner(const HermitianMatrix& xi, int j);

/// All eigenvalues, sorted non-increasing. 1x1 and 2x2 inputs use closed
/// forms; larger inputs run cyclic complex Jacobi sweeps until the
/// off-diagonal Frobenius norm falls below 1e-13 * ||xi||_F (throws
/// NumericalError after 100 sweeps without convergence).
Spectrum eigenvalues_desc(const HermitianMatrix& xi);

/// diag(eigenvalues_desc(xi)): the canonical diagonal representative of the
/// unitary conjugation orbit of xi.
HermitianMatrix sweep(const HermitianMatrix& xi);

/// g xi g', the coadjoint action in the Hermitian identification.
HermitianMatrix coadjoint(const UnitaryMatrix& g, const HermitianMatrix& xi);

/// Deterministic seeded random source used by every sampling routine in this
/// project. Algorithm identity, for cross-implementation reproducibility of
/// distributions: mt19937_64 driving 53-bit uniforms in [0,1), Gaussians via
/// Box-Muller (pairs, one value cached), complex Gaussians as
/// (x + iy)/sqrt(2) with x, y independent standard normals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();
    double gauss();
    Complex complex_gauss();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the
/// R-diagonal phase correction Q <- Q diag(r_kk / |r_kk|).
UnitaryMatrix haar_unitary(int n, Rng& rng);
UnitaryMatrix haar_unitary(int n, std::uint64_t seed);

/// GUE-style random Hermitian matrix (A + A')/2 with Ginibre A; the sampling
/// harness for property tests.
HermitianMatrix random_hermitian(int n, Rng& rng);

} // namespace gcq
