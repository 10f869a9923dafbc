// scar.hpp — Floquet eigensystem with quasienergies, reduced satellite
// density matrices, Dicke-bipartition entanglement entropy, and the scar
// overlaps with the fully polarized satellite states.

#pragma once

#include "spinfloq/operators.hpp"
#include "spinfloq/state.hpp"

#include <vector>

namespace spinfloq {

struct FloquetEigensystem {
    RealVector quasienergy_over_omega;  // in (-0.5, 0.5], sorted ascending
    Matrix eigenvectors;                // unit-norm columns
    std::vector<bool> degenerate;       // flags clusters with |d eps/omega| < 1e-10
};

// Quasienergies from U_F v = e^{-i 2 pi (eps/omega)} v. Within degenerate
// clusters the ordering tie-break is the index of the largest-magnitude
// amplitude of each vector.
FloquetEigensystem floquet_eigensystem(const UnitaryMatrix& u_f);

// rho_sat = Tr_central |psi><psi|, a (2j+1) x (2j+1) density matrix.
Matrix reduce_central(const StateVector& psi);

// Isometry |J, m> -> |J/2, m1> (x) |J/2, m2> on the fully symmetric sector
// (2j = N, N even): columns indexed by m in decreasing order; the row index
// is i1 * (J/2 dim) + i2 in the same decreasing-m convention.
RealMatrix dicke_bipartition_isometry(int n_satellites);

// S(Tr_B rho_A) in nats for the equal split of the satellite spins;
// eigenvalues below
// 1e-12 are clipped before the x ln x sum.
double dicke_bipartition_entropy(const Matrix& rho_satellite, const SectorBasis& basis);

// (F+, F-) = (<+J| rho |+J>, <-J| rho |-J>)
struct ScarOverlaps {
    double plus = 0.0;
    double minus = 0.0;
};
ScarOverlaps scar_overlaps(const Matrix& rho_satellite, const SectorBasis& basis);

struct ScarRecord {
    double quasienergy_over_omega = 0.0;
    double entropy = 0.0;  // nats
    double overlap_plus = 0.0;
    double overlap_minus = 0.0;
    bool degenerate = false;
};

// One record per Floquet eigenvector, sorted by quasienergy.
std::vector<ScarRecord> scar_scatter(const ModelParams& params, const SectorBasis& basis);

}  // namespace spinfloq
