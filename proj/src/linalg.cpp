#include "gcq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gcq {

namespace {

bool all_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

double offdiag_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    const auto n = a.rows();
    for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q)
            if (p != q) sum += std::norm(a(p, q));
    return std::sqrt(sum);
}

/// Cyclic complex Jacobi iteration. Mutates its argument toward diagonal
/// form and returns the diagonal, unsorted.
RealVector jacobi_diagonalize(ComplexMatrix a) {
    const auto n = a.rows();
    const double target = tolerances::kJacobiOffDiagonal * a.norm();
    double off = offdiag_norm(a);
    for (int sweep = 0; sweep < tolerances::kJacobiMaxSweeps; ++sweep) {
        if (off <= target) return a.diagonal().real();
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (a(p, q) == Complex(0.0, 0.0)) continue;
                Eigen::JacobiRotation<Complex> rot;
                rot.makeJacobi(a, p, q);
                a.applyOnTheLeft(p, q, rot.adjoint());
                a.applyOnTheRight(p, q, rot);
                a(p, q) = Complex(0.0, 0.0);
                a(q, p) = Complex(0.0, 0.0);
            }
        }
        off = offdiag_norm(a);
    }
    if (off <= target) return a.diagonal().real();
    throw NumericalError("eigensolver did not converge, off-diagonal residual " +
                             std::to_string(off),
                         off);
}

RealVector hermitian_eigenvalues(const ComplexMatrix& a) {
    const auto n = a.rows();
    if (n == 1) {
        RealVector v(1);
        v[0] = a(0, 0).real();
        return v;
    }
    if (n == 2) {
        // Closed form: mean +/- sqrt(((a-d)/2)^2 + |b|^2).
        const double mean = 0.5 * (a(0, 0).real() + a(1, 1).real());
        const double half_gap = 0.5 * (a(0, 0).real() - a(1, 1).real());
        const double disc = std::hypot(half_gap, std::abs(a(0, 1)));
        RealVector v(2);
        v[0] = mean + disc;
        v[1] = mean - disc;
        return v;
    }
    RealVector v = jacobi_diagonalize(a);
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

} // namespace

ComplexMatrix HermitianMatrix::validated(ComplexMatrix raw) {
    if (raw.rows() == 0 || raw.rows() != raw.cols())
        throw std::invalid_argument("HermitianMatrix: need a nonempty square matrix");
    if (!all_finite(raw))
        throw std::invalid_argument("HermitianMatrix: entries must be finite");
    const double deviation = (raw - raw.adjoint().eval()).cwiseAbs().maxCoeff();
    if (deviation > tolerances::kHermitianDeviation)
        throw std::invalid_argument("HermitianMatrix: deviation from hermiticity " +
                                    std::to_string(deviation));
    ComplexMatrix sym = 0.5 * (raw + raw.adjoint().eval());
    sym.diagonal() = sym.diagonal().real().cast<Complex>();
    return sym;
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& d) {
    if (d.size() == 0)
        throw std::invalid_argument("HermitianMatrix: need at least one diagonal entry");
    ComplexMatrix m = ComplexMatrix::Zero(d.size(), d.size());
    m.diagonal() = d.cast<Complex>();
    return HermitianMatrix(Trusted{}, std::move(m));
}

HermitianMatrix HermitianMatrix::zero(int n) {
    if (n < 1) throw std::invalid_argument("HermitianMatrix: n must be positive");
    return HermitianMatrix(Trusted{}, ComplexMatrix::Zero(n, n));
}

ComplexMatrix UnitaryMatrix::validated(ComplexMatrix raw) {
    if (raw.rows() == 0 || raw.rows() != raw.cols())
        throw std::invalid_argument("UnitaryMatrix: need a nonempty square matrix");
    if (!all_finite(raw))
        throw std::invalid_argument("UnitaryMatrix: entries must be finite");
    const auto n = raw.rows();
    const double deviation =
        (raw.adjoint() * raw - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (deviation > tolerances::kUnitaryDeviation)
        throw std::invalid_argument("UnitaryMatrix: deviation from unitarity " +
                                    std::to_string(deviation));
    return raw;
}

UnitaryMatrix UnitaryMatrix::identity(int n) {
    if (n < 1) throw std::invalid_argument("UnitaryMatrix: n must be positive");
    return UnitaryMatrix(ComplexMatrix::Identity(n, n));
}

Spectrum::Spectrum(RealVector values) : values_(std::move(values)) {
    for (Eigen::Index k = 0; k + 1 < values_.size(); ++k) {
        if (values_[k] < values_[k + 1])
            throw std::invalid_argument("Spectrum: values must be non-increasing");
    }
}

HermitianMatrix corner(const HermitianMatrix& xi, int j) {
    const int n = xi.n();
    if (j < 0 || j > n - 1)
        throw std::domain_error("corner: index must satisfy 0 <= j <= n-1");
    const int m = n - j;
    // A principal submatrix of a Hermitian matrix is Hermitian as stored.
    return HermitianMatrix(HermitianMatrix::Trusted{},
                           xi.mat().bottomRightCorner(m, m));
}

Spectrum eigenvalues_desc(const HermitianMatrix& xi) {
    return Spectrum(hermitian_eigenvalues(xi.mat()));
}

HermitianMatrix sweep(const HermitianMatrix& xi) {
    return HermitianMatrix::diagonal(eigenvalues_desc(xi).values());
}

HermitianMatrix coadjoint(const UnitaryMatrix& g, const HermitianMatrix& xi) {
    if (g.n() != xi.n())
        throw std::domain_error("coadjoint: dimension mismatch");
    // Conjugation preserves hermiticity up to roundoff; the validating
    // constructor re-symmetrizes the result.
    return HermitianMatrix(g.mat() * xi.mat() * g.mat().adjoint());
}

double Rng::uniform() {
    return (engine_() >> 11) * 0x1.0p-53;
}

double Rng::gauss() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    constexpr double two_pi = 6.283185307179586476925287;
    const double u1 = 1.0 - uniform(); // in (0, 1], keeps the log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = two_pi * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
}

Complex Rng::complex_gauss() {
    const double inv_sqrt2 = 0.7071067811865475244;
    const double re = gauss();
    const double im = gauss();
    return Complex(re * inv_sqrt2, im * inv_sqrt2);
}

UnitaryMatrix haar_unitary(int n, Rng& rng) {
    if (n < 1) throw std::domain_error("haar_unitary: n must be positive");
    ComplexMatrix z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z(i, j) = rng.complex_gauss();
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const auto r_diag = qr.matrixQR().diagonal();
    for (int k = 0; k < n; ++k) {
        const double mag = std::abs(r_diag[k]);
        const Complex phase = mag > 0.0 ? r_diag[k] / mag : Complex(1.0, 0.0);
        q.col(k) *= phase;
    }
    return UnitaryMatrix(q);
}

UnitaryMatrix haar_unitary(int n, std::uint64_t seed) {
    Rng rng(seed);
    return haar_unitary(n, rng);
}

HermitianMatrix random_hermitian(int n, Rng& rng) {
    if (n < 1) throw std::domain_error("random_hermitian: n must be positive");
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.complex_gauss();
    ComplexMatrix h = 0.5 * (a + a.adjoint().eval());
    return HermitianMatrix(h);
}

} // namespace gcq
