// oracles.hpp — closed-form stroboscopic dynamics for the Ising and XX
// interactions plus their first-order pulse-error corrections. Used as
// ground truth against the matrix-exponential engine.
//
// Phase convention: the kick contributes a factor (-i)^(2j+1) per cycle on a
// sector of spin j; the oracles carry it so amplitudes compare directly
// against the simulator without global-phase stripping.

#pragma once

#include "spinfloq/basis.hpp"
#include "spinfloq/params.hpp"
#include "spinfloq/types.hpp"

#include <cstdint>
#include <vector>

namespace spinfloq {

// alpha_m^{+/-} = sqrt(j(j+1) - m(m +/- 1)) on a sector of spin j, with the
// doubled quantum numbers; alpha_m^0 is the + branch.
struct LadderCoefficient {
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;
};
LadderCoefficient ladder_coefficient(int twice_j, int twice_m);

// Per-cycle kick convention factor (-i)^(2j+1), raised to n cycles.
Complex kick_phase(int twice_j, std::int64_t n_cycles);

struct OracleAmplitude {
    BasisLabel label;
    Complex amplitude;
};

// Exact Ising stroboscopic state after n cycles: a single basis state with a
// phase. Requires a_xy = 0.
OracleAmplitude ising_exact(int twice_m, Spin sigma, std::int64_t n_cycles,
                            const ModelParams& params, const SectorBasis& basis);

// Robust-stripe condition for Ising: A_z / omega an odd integer.
bool ising_robustness(double a_z, double omega, double tol = 1e-9);

// O(theta) state after an even number of cycles starting from |m up>,
// a_xy = 0. Returns the zeroth-order |m up> amplitude plus the three O(theta)
// amplitudes on |m down>, |m+1 up>, |m-1 up>. The geometric sums are
// evaluated in closed form.
std::vector<OracleAmplitude> ising_first_order(int twice_m, std::int64_t n_cycles,
                                               double theta, const ModelParams& params,
                                               const SectorBasis& basis);

// Exact XX (a_z = 0, b_z = 0) amplitudes after n cycles starting from
// |m up>: beta_n on the first label, gamma_n on the second.
struct XxAmplitudes {
    BasisLabel beta_label;
    BasisLabel gamma_label;
    Complex beta;
    Complex gamma;
};
XxAmplitudes xx_exact(int twice_m, std::int64_t n_cycles, const ModelParams& params,
                      const SectorBasis& basis);

// O(theta) state after two cycles starting from |m up> for the XX chain at
// zero field: zeroth-order G amplitudes plus the four first-order ones.
std::vector<OracleAmplitude> xx_two_cycle_first_order(int twice_m, double theta,
                                                      const ModelParams& params,
                                                      const SectorBasis& basis);

}  // namespace spinfloq
