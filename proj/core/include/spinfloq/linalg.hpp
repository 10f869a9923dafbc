// linalg.hpp — dense Hermitian/unitary matrix contracts, Hermitian matrix
// exponentials, and the spectral decomposition of unitaries that powers
// long-horizon stroboscopic evolution.

#pragma once

#include "spinfloq/types.hpp"

namespace spinfloq {

// max entrywise |A| (0 for empty)
double max_abs(const Matrix& a);

// max |H - H^dag| <= tol * max|H|
bool is_hermitian(const Matrix& h, double rel_tol = 1e-12);

// max |U^dag U - 1| <= tol
bool is_unitary(const Matrix& u, double tol = 1e-10);
double unitarity_defect(const Matrix& u);

// Validated wrapper: construction enforces the Hermiticity contract.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(Matrix entries, double rel_tol = 1e-12);
    const Matrix& entries() const { return entries_; }
    Index dim() const { return entries_.rows(); }

  private:
    Matrix entries_;
};

// Validated wrapper: construction enforces max |U^dag U - 1| <= 1e-10.
class UnitaryMatrix {
  public:
    explicit UnitaryMatrix(Matrix entries, double tol = 1e-10);
    const Matrix& entries() const { return entries_; }
    Index dim() const { return entries_.rows(); }

  private:
    Matrix entries_;
};

// exp(-i H t) through the self-adjoint eigendecomposition.
UnitaryMatrix hermitian_expm(const HermitianMatrix& h, double t);
Matrix hermitian_expm_raw(const Matrix& h, double t);

// U = V diag(exp(i*phase_k)) V^dag with V unitary. Eigenphases lie in
// (-pi, pi]. Computed via the complex Schur form, which keeps the vector
// matrix unitary even inside degenerate eigenvalue clusters; throws
// numerical_error when the reconstruction residual exceeds 1e-8.
struct UnitaryEigensystem {
    RealVector eigenphases;  // phi_k, U v_k = e^{i phi_k} v_k
    Matrix eigenvectors;     // columns v_k, unitary
};

UnitaryEigensystem spectral_propagator(const Matrix& u);

// V diag(e^{i phi n}) V^dag psi without forming the matrix power.
Vector apply_spectral_power(const UnitaryEigensystem& es, const Vector& psi,
                            long long n_cycles);

}  // namespace spinfloq
