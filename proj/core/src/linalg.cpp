#include "spinfloq/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace spinfloq {

double max_abs(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& h, double rel_tol) {
    if (h.rows() != h.cols()) return false;
    const double scale = max_abs(h);
    const double defect = max_abs(h - h.adjoint());
    return defect <= rel_tol * std::max(scale, 1.0);
}

double unitarity_defect(const Matrix& u) {
    return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

bool is_unitary(const Matrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    return unitarity_defect(u) <= tol;
}

HermitianMatrix::HermitianMatrix(Matrix entries, double rel_tol)
    : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
        throw std::invalid_argument("HermitianMatrix: matrix must be square");
    if (!is_hermitian(entries_, rel_tol))
        throw std::invalid_argument("HermitianMatrix: Hermiticity contract violated");
}

UnitaryMatrix::UnitaryMatrix(Matrix entries, double tol) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
        throw std::invalid_argument("UnitaryMatrix: matrix must be square");
    if (!is_unitary(entries_, tol))
        throw numerical_error("UnitaryMatrix: unitarity contract violated, defect = " +
                              std::to_string(unitarity_defect(entries_)));
}

Matrix hermitian_expm_raw(const Matrix& h, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw numerical_error("hermitian_expm: eigendecomposition failed");
    const RealVector& w = solver.eigenvalues();
    const Matrix& v = solver.eigenvectors();
    Vector phases(w.size());
    for (Index k = 0; k < w.size(); ++k)
        phases[k] = std::polar(1.0, -w[k] * t);
    return v * phases.asDiagonal() * v.adjoint();
}

UnitaryMatrix hermitian_expm(const HermitianMatrix& h, double t) {
    return UnitaryMatrix(hermitian_expm_raw(h.entries(), t));
}

UnitaryEigensystem spectral_propagator(const Matrix& u) {
    if (!is_unitary(u))
        throw std::invalid_argument("spectral_propagator: input is not unitary");
    Eigen::ComplexSchur<Matrix> schur(u, /*computeU=*/true);
    if (schur.info() != Eigen::Success)
        throw numerical_error("spectral_propagator: Schur decomposition failed");
    const Index n = u.rows();
    UnitaryEigensystem es;
    es.eigenvectors = schur.matrixU();
    es.eigenphases.resize(n);
    for (Index k = 0; k < n; ++k) {
        double phi = std::arg(schur.matrixT()(k, k));
        if (phi <= -std::numbers::pi) phi += 2.0 * std::numbers::pi;
        es.eigenphases[k] = phi;
    }
    // A normal matrix has diagonal Schur form; verify by reconstruction.
    Vector lambda(n);
    for (Index k = 0; k < n; ++k) lambda[k] = std::polar(1.0, es.eigenphases[k]);
    const double residual =
        max_abs(es.eigenvectors * lambda.asDiagonal() * es.eigenvectors.adjoint() - u);
    if (residual > 1e-8)
        throw numerical_error("spectral_propagator: reconstruction residual " +
                              std::to_string(residual) + " exceeds 1e-8");
    return es;
}

Vector apply_spectral_power(const UnitaryEigensystem& es, const Vector& psi,
                            long long n_cycles) {
    Vector w = es.eigenvectors.adjoint() * psi;
    for (Index k = 0; k < w.size(); ++k)
        w[k] *= std::polar(1.0, es.eigenphases[k] * static_cast<double>(n_cycles));
    return es.eigenvectors * w;
}

}  // namespace spinfloq
