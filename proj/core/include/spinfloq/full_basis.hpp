// full_basis.hpp — unsymmetrized 2^(N+1)-dimensional simulator. Bit 0 is the
// central spin, bits 1..N the satellites; bit value 0 means spin up. Serves
// as the cross-validation oracle for the collective engine and runs the
// coupling-disorder experiment.

#pragma once

#include "spinfloq/linalg.hpp"
#include "spinfloq/params.hpp"
#include "spinfloq/rng.hpp"

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace spinfloq {

struct FullBasisModel {
    int n_satellites = 0;
    std::vector<double> a_xy;  // per-satellite transverse coupling (ladder form)
    std::vector<double> a_z;   // per-satellite longitudinal coupling
    double b_z = 0.0;
    double omega = 1.0;
    double theta_e = 0.0;
    double theta_n = 0.0;

    double period() const { return 2.0 * std::numbers::pi / omega; }
    Index dim() const { return Index{1} << (n_satellites + 1); }
    bool homogeneous() const;
    void validate() const;  // rejects N > 14 and size mismatches

    static FullBasisModel homogeneous_from(const ModelParams& params, int n_satellites);
};

// H = sum_p [ a_xy[p] (Ip+ S0- + Ip- S0+) + a_z[p] Ipz S0z ] + b_z S0z
HermitianMatrix build_full_hamiltonian(const FullBasisModel& model);

// kick exp(-i [(pi-theta_e) S0x + (pi-theta_n) sum_p Ipx])
UnitaryMatrix build_full_pulse(const FullBasisModel& model);

UnitaryMatrix full_floquet(const FullBasisModel& model);

// diagonal of Itz = sum_p Ipz in the product basis
RealVector full_itz_diagonal(int n_satellites);

// Casimir It^2 as a dense matrix (for sector block checks)
Matrix full_casimir(int n_satellites);

// Isometry embedding the largest symmetry sector (Dicke states x central
// spin, flat sector ordering) into the product basis.
Matrix symmetric_sector_isometry(int n_satellites);

// Product state from characters 'u'/'d': satellites[0..N-1] then the central
// spin. Index convention matches the bit layout above.
Vector product_state(int n_satellites, const std::string& satellites, char central);

struct DisorderSpec {
    double mean = 0.0;        // A_xy
    double std = 0.0;         // delta A_xy
    std::uint64_t seed = 0;
    int n_realizations = 1;

    void validate() const;
};

// One Gaussian coupling set per realization; reproducible from
// (seed, realization index) via per-index derived streams.
std::vector<std::vector<double>> sample_couplings(const DisorderSpec& spec,
                                                  int n_satellites);

struct DisorderResult {
    std::vector<double> order_parameter;  // per realization
    std::vector<std::vector<double>> couplings;
    std::string rng_identity;
};

// Staggered time average (1/N normalization) per disorder realization, with the
// transverse couplings drawn around the base model's values.
DisorderResult disorder_order_parameter(const DisorderSpec& spec,
                                        const FullBasisModel& base, const Vector& psi0,
                                        std::int64_t n_cycles, unsigned workers = 0);

}  // namespace spinfloq
