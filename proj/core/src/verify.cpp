#include "spinfloq/verify.hpp"

#include "spinfloq/dynamics.hpp"
#include "spinfloq/full_basis.hpp"
#include "spinfloq/oracles.hpp"
#include "spinfloq/operators.hpp"
#include "spinfloq/state.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace spinfloq {

namespace {

// deterministic parameter draws for the self-test
double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = (double((rng()) >> 11) + 0.5) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

VerificationCheck check_ising_oracle() {
    VerificationCheck check{"ising exact oracle, 20 draws x 200 cycles", 0.0, 1e-10, false};
    std::mt19937_64 rng(41);
    for (int draw = 0; draw < 20; ++draw) {
        const int n = 21;
        const SectorBasis basis = build_largest_sector(n);
        ModelParams params;
        params.a_z = uniform(rng, 0.1, 4.0);
        params.b_z = uniform(rng, 0.0, 20.0);
        params.omega = uniform(rng, 0.5, 2.0);
        const int twice_m = basis.twice_j() - 2 * int(rng() % (basis.twice_j() + 1));
        const Spin sigma = rng() % 2 == 0 ? Spin::up : Spin::down;

        const UnitaryMatrix u_f = build_floquet(params, basis);
        Vector psi = basis_state(basis, twice_m, sigma).amplitudes;
        for (int cycle = 1; cycle <= 200; ++cycle) {
            psi = u_f.entries() * psi;
            const OracleAmplitude expect =
                ising_exact(twice_m, sigma, cycle, params, basis);
            Vector oracle = Vector::Zero(basis.dim());
            oracle[basis.index_of(expect.label)] = expect.amplitude;
            check.max_residual =
                std::max(check.max_residual, (psi - oracle).cwiseAbs().maxCoeff());
        }
    }
    check.passed = check.max_residual <= check.tolerance;
    return check;
}

VerificationCheck check_xx_oracle() {
    VerificationCheck check{"xx exact oracle, 10 draws x 200 cycles", 0.0, 1e-10, false};
    std::mt19937_64 rng(43);
    for (int draw = 0; draw < 10; ++draw) {
        const int n = 5 + 2 * int(rng() % 7);
        const SectorBasis basis = build_largest_sector(n);
        ModelParams params;
        params.a_xy = uniform(rng, 0.1, 3.0);
        params.omega = uniform(rng, 0.5, 2.0);
        const int twice_m = basis.twice_j() - 2 * int(rng() % (basis.twice_j() + 1));

        const UnitaryMatrix u_f = build_floquet(params, basis);
        Vector psi = basis_state(basis, twice_m, Spin::up).amplitudes;
        for (int cycle = 1; cycle <= 200; ++cycle) {
            psi = u_f.entries() * psi;
            const XxAmplitudes expect = xx_exact(twice_m, cycle, params, basis);
            Vector oracle = Vector::Zero(basis.dim());
            oracle[basis.index_of(expect.beta_label)] = expect.beta;
            if (basis.holds(expect.gamma_label.twice_m))
                oracle[basis.index_of(expect.gamma_label)] += expect.gamma;
            check.max_residual =
                std::max(check.max_residual, (psi - oracle).cwiseAbs().maxCoeff());
        }
    }
    check.passed = check.max_residual <= check.tolerance;
    return check;
}

double first_order_residual(bool ising, double theta) {
    const int n = 9;
    const SectorBasis basis = build_largest_sector(n);
    ModelParams params;
    if (ising) {
        params.a_z = 1.7;
        params.b_z = 33.0;
    } else {
        params.a_xy = 0.7 / (2.0 * std::numbers::pi);  // A T = 0.7
    }
    params.theta_e = theta;
    params.theta_n = theta;
    const int twice_m = 3;
    const std::int64_t cycles = ising ? 6 : 2;

    const UnitaryMatrix u_f = build_floquet(params, basis);
    Vector psi = basis_state(basis, twice_m, Spin::up).amplitudes;
    for (std::int64_t cycle = 0; cycle < cycles; ++cycle) psi = u_f.entries() * psi;

    ModelParams unperturbed = params;
    unperturbed.theta_e = 0.0;
    unperturbed.theta_n = 0.0;
    Vector predicted = Vector::Zero(basis.dim());
    const auto amps = ising
                          ? ising_first_order(twice_m, cycles, theta, unperturbed, basis)
                          : xx_two_cycle_first_order(twice_m, theta, unperturbed, basis);
    for (const auto& a : amps) predicted[basis.index_of(a.label)] += a.amplitude;
    return (psi - predicted).norm();
}

VerificationCheck check_first_order_scaling(bool ising) {
    VerificationCheck check{ising ? "ising O(theta) scaling, residual ratio vs 4"
                                  : "xx O(theta) scaling, residual ratio vs 4",
                            0.0, 0.5, false};
    const double r1 = first_order_residual(ising, 1e-2);
    const double r2 = first_order_residual(ising, 5e-3);
    check.max_residual = std::abs(r1 / r2 - 4.0);
    check.passed = check.max_residual <= check.tolerance;
    return check;
}

VerificationCheck check_cross_engine() {
    VerificationCheck check{"full-basis vs collective engine, N=5, 100 cycles", 0.0,
                            1e-10, false};
    const int n = 5;
    const SectorBasis basis = build_largest_sector(n);
    const Matrix isometry = symmetric_sector_isometry(n);
    for (const double theta : {0.0, 0.1 * std::numbers::pi}) {
        ModelParams params;
        params.a_xy = 1.3;
        params.a_z = 3.3;
        params.b_z = 100.0;
        params.theta_e = theta;
        params.theta_n = theta;

        const UnitaryMatrix u_sector = build_floquet(params, basis);
        const UnitaryMatrix u_full =
            full_floquet(FullBasisModel::homogeneous_from(params, n));

        Vector sector = basis_state(basis, basis.twice_j(), Spin::down).amplitudes;
        Vector full = isometry * sector;
        for (int cycle = 0; cycle < 100; ++cycle) {
            sector = u_sector.entries() * sector;
            full = u_full.entries() * full;
        }
        const double overlap = std::abs((isometry * sector).dot(full));
        check.max_residual = std::max(check.max_residual, 1.0 - overlap);
    }
    check.passed = check.max_residual <= check.tolerance;
    return check;
}

}  // namespace

VerificationReport run_verification() {
    VerificationReport report;
    report.checks.push_back(check_ising_oracle());
    report.checks.push_back(check_xx_oracle());
    report.checks.push_back(check_first_order_scaling(true));
    report.checks.push_back(check_first_order_scaling(false));
    report.checks.push_back(check_cross_engine());
    return report;
}

}  // namespace spinfloq
