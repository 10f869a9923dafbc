// operators.hpp — collective spin operators on a symmetry sector, the static
// Hamiltonian H0, the kick unitary, and the Floquet operator.

#pragma once

#include "spinfloq/basis.hpp"
#include "spinfloq/linalg.hpp"
#include "spinfloq/params.hpp"

namespace spinfloq {

// Ladder amplitude sqrt(j(j+1) - m(m+1)) for It+ |m> = alpha |m+1>, with the
// quantum numbers passed doubled.
double ladder_alpha(int twice_j, int twice_m);

struct CollectiveOps {
    Matrix it_z, it_plus, it_minus, it_x;
    Matrix s0_z, s0_plus, s0_minus, s0_x;
};

CollectiveOps collective_ops(const SectorBasis& basis);

// H0 = a_xy (It+ S0- + It- S0+) + a_z Itz S0z + b_z S0z + b_nz Itz
HermitianMatrix build_h0(const ModelParams& params, const SectorBasis& basis);

// exp(-i [(pi - theta_e) S0x + (pi - theta_n) Itx])
UnitaryMatrix build_pulse(const ModelParams& params, const SectorBasis& basis);

// U_F = pulse * exp(-i H0 T), T = 2*pi/omega
UnitaryMatrix build_floquet(const ModelParams& params, const SectorBasis& basis);

}  // namespace spinfloq
