// dynamics.hpp — stroboscopic evolution, staggered-magnetization series, the
// time-averaged order parameter, and phase-diagram sweeps.

#pragma once

#include "spinfloq/linalg.hpp"
#include "spinfloq/operators.hpp"
#include "spinfloq/state.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spinfloq {

struct StroboscopicSeries {
    std::vector<std::int64_t> cycles;
    std::vector<double> magnetization;  // <Itz(nT)> / N, in [-1/2, 1/2]
    std::vector<double> staggered;      // (-1)^n * magnetization
    std::optional<std::vector<double>> return_probability;
};

// Records at n = 0, stride, 2*stride, ..., up to n_cycles. Switches from
// direct repeated multiplication to the spectral propagator once
// n_cycles * dim > 1e5 * stride.
StroboscopicSeries evolve(const UnitaryMatrix& u_f, const StateVector& psi0,
                          std::int64_t n_cycles, std::int64_t record_stride,
                          bool record_return_probability = false);

// sum_{n=1}^{count} (-1)^n <psi_n| diag(observable) |psi_n> evaluated in
// closed form: the staggering folds into the eigenphase differences, whose
// geometric sums are Dirichlet kernels. Cost is one dim^3 product, after
// which the result is exact for any cycle count.
double staggered_observable_sum(const UnitaryEigensystem& es, const Vector& psi0,
                                const RealVector& observable_diag, std::int64_t count);

// (1/N_C) sum_{n=1}^{N_C} (-1)^n <Itz(nT)> / N, evaluated in closed form
// through the spectral propagator (geometric sums over eigenphase pairs).
double order_parameter(const UnitaryMatrix& u_f, const StateVector& psi0,
                       std::int64_t n_cycles);

// Mean of the staggered magnetization over cycles n in (n0, n1].
double staggered_window_mean(const UnitaryMatrix& u_f, const StateVector& psi0,
                             std::int64_t n0, std::int64_t n1);

enum class AxisName { a, a_xy, a_z, b_z, theta };

AxisName parse_axis_name(const std::string& name);
std::string axis_name_string(AxisName name);

struct AxisSpec {
    AxisName name = AxisName::a_z;
    double start = 0.0;
    double stop = 0.0;
    int count = 1;  // linear scale

    std::vector<double> values() const;
    void validate() const;
};

struct PhaseGrid {
    AxisSpec x_axis;
    AxisSpec y_axis;
    RealMatrix order_parameter;  // (y count) x (x count); NaN marks a failed cell
    std::int64_t n_cycles = 0;
    ModelParams fixed_params;
    std::vector<std::string> warnings;  // one entry per failed cell
};

ModelParams apply_axis(ModelParams params, AxisName name, double value);

// Evaluates order_parameter on every (y, x) grid cell. Cells are independent
// tasks; each builds its own operators, so results do not depend on
// scheduling. Per-cell numerical failures become NaN entries plus a warning.
PhaseGrid phase_sweep(const ModelParams& base, const SectorBasis& basis,
                      const AxisSpec& x, const AxisSpec& y,
                      const InitialState& psi0, std::int64_t n_cycles,
                      unsigned workers = 0);

}  // namespace spinfloq
