#include "spinfloq/operators.hpp"

#include <cmath>
#include <numbers>

namespace spinfloq {

double ladder_alpha(int twice_j, int twice_m) {
    // j(j+1) - m(m+1) = [2j(2j+2) - 2m(2m+2)] / 4, exact in integers first
    const double num = static_cast<double>(twice_j) * (twice_j + 2) -
                       static_cast<double>(twice_m) * (twice_m + 2);
    return num <= 0.0 ? 0.0 : std::sqrt(num) / 2.0;
}

CollectiveOps collective_ops(const SectorBasis& basis) {
    const Index d = basis.dim();
    CollectiveOps ops;
    ops.it_z = Matrix::Zero(d, d);
    ops.it_plus = Matrix::Zero(d, d);
    ops.s0_z = Matrix::Zero(d, d);
    ops.s0_plus = Matrix::Zero(d, d);

    for (Index i = 0; i < d; ++i) {
        const BasisLabel l = basis.label_of(i);
        ops.it_z(i, i) = 0.5 * l.twice_m;
        ops.s0_z(i, i) = 0.5 * spin_sign(l.sigma);
        if (l.twice_m < basis.twice_j()) {
            const double a = ladder_alpha(basis.twice_j(), l.twice_m);
            ops.it_plus(basis.index_of(l.twice_m + 2, l.sigma), i) = a;
        }
        if (l.sigma == Spin::down)
            ops.s0_plus(basis.index_of(l.twice_m, Spin::up), i) = 1.0;
    }
    ops.it_minus = ops.it_plus.adjoint();
    ops.s0_minus = ops.s0_plus.adjoint();
    ops.it_x = 0.5 * (ops.it_plus + ops.it_minus);
    ops.s0_x = 0.5 * (ops.s0_plus + ops.s0_minus);
    return ops;
}

HermitianMatrix build_h0(const ModelParams& params, const SectorBasis& basis) {
    params.validate();
    const CollectiveOps ops = collective_ops(basis);
    Matrix h = params.a_xy * (ops.it_plus * ops.s0_minus + ops.it_minus * ops.s0_plus) +
               params.a_z * (ops.it_z * ops.s0_z) + params.b_z * ops.s0_z +
               params.b_nz * ops.it_z;
    return HermitianMatrix(std::move(h));
}

UnitaryMatrix build_pulse(const ModelParams& params, const SectorBasis& basis) {
    params.validate();
    const CollectiveOps ops = collective_ops(basis);
    const double pi = std::numbers::pi;
    Matrix gen = (pi - params.theta_e) * ops.s0_x + (pi - params.theta_n) * ops.it_x;
    return hermitian_expm(HermitianMatrix(std::move(gen)), 1.0);
}

UnitaryMatrix build_floquet(const ModelParams& params, const SectorBasis& basis) {
    const UnitaryMatrix pulse = build_pulse(params, basis);
    const UnitaryMatrix u_h0 = hermitian_expm(build_h0(params, basis), params.period());
    return UnitaryMatrix(pulse.entries() * u_h0.entries());
}

}  // namespace spinfloq
