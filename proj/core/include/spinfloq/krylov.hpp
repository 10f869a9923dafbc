// krylov.hpp — Krylov / Floquet-Krylov subspace enumeration, basis-overlap
// maps over many cycles, and occupation summaries under pulse error.

#pragma once

#include "spinfloq/dynamics.hpp"
#include "spinfloq/state.hpp"

#include <cstdint>
#include <vector>

namespace spinfloq {

struct KrylovReport {
    Index dimension = 0;
    Matrix basis_vectors;              // orthonormal columns
    std::vector<BasisLabel> occupied_labels;  // weight in subspace > threshold
    std::vector<double> residual_history;
    bool branch_ambiguous = false;  // set by floquet_hamiltonian_krylov when an
                                    // eigenphase sits within 1e-9 of the pi cut
};

// Span of {psi0, G psi0, G^2 psi0, ...} by breadth-first application of the
// generator to the orthonormal basis built so far, with a second
// Gram-Schmidt pass per candidate. Stops when no vector of the current basis
// yields anything new (at most `dim` consecutive no-ops) or after 4*dim
// applications.
KrylovReport krylov_subspace(const Matrix& generator, const StateVector& psi0,
                             double rank_tol = 1e-8,
                             double occupation_threshold = 1e-6);

struct OverlapMap {
    std::vector<std::int64_t> sampled_cycles;
    std::vector<BasisLabel> columns;  // sector basis labels, flat order
    RealMatrix overlaps;              // rows = samples, F_n in [0, 1]
};

// F_n(|m sigma>, psi) = |<m sigma| U_F^n |psi>|^2 at the sampled cycles.
OverlapMap overlap_map(const ModelParams& params, const StateVector& psi0,
                       const std::vector<std::int64_t>& cycles);

// The `fig2` sampler: the 500 even cycles n = 10^5 - 2k, k = 0..499.
std::vector<std::int64_t> fig2_cycle_sampler();
// Every `stride` cycles from 0 up to and including `max`.
std::vector<std::int64_t> stride_cycle_sampler(std::int64_t stride, std::int64_t max);

struct OccupationSummary {
    std::vector<int> occupied_count;  // per row: columns with F_n > threshold
    std::vector<double> inverse_participation_ratio;  // per row: 1 / sum F^2
};

OccupationSummary effective_dimension(const OverlapMap& map, double threshold = 1e-3);

// Krylov subspace of H_F = i log(U_F)/T with eigenphases taken in (-pi, pi];
// used to check the subset property of stroboscopic Krylov spaces.
KrylovReport floquet_hamiltonian_krylov(const ModelParams& params,
                                        const StateVector& psi0,
                                        double rank_tol = 1e-8);

// Floquet Hamiltonian itself (for reuse in tests): i log(U)/T.
Matrix floquet_hamiltonian(const Matrix& u_f, double period, bool* branch_ambiguous = nullptr);

}  // namespace spinfloq
