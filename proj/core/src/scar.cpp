#include "spinfloq/scar.hpp"

#include "spinfloq/clebsch_gordan.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace spinfloq {

FloquetEigensystem floquet_eigensystem(const UnitaryMatrix& u_f) {
    const UnitaryEigensystem es = spectral_propagator(u_f.entries());
    const Index d = u_f.dim();

    // eps/omega = -Arg(lambda) / (2 pi) with Arg in [-pi, pi) => eps/omega in (-0.5, 0.5]
    RealVector eps(d);
    for (Index k = 0; k < d; ++k) {
        double phi = es.eigenphases[k];           // in (-pi, pi]
        if (phi >= std::numbers::pi) phi -= 2.0 * std::numbers::pi;  // now [-pi, pi)
        eps[k] = -phi / (2.0 * std::numbers::pi);
    }

    std::vector<Index> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), Index{0});
    auto largest_amp_index = [&](Index col) {
        Index arg = 0;
        double best = -1.0;
        for (Index i = 0; i < d; ++i) {
            const double a = std::abs(es.eigenvectors(i, col));
            if (a > best + 1e-15) {
                best = a;
                arg = i;
            }
        }
        return arg;
    };
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        if (std::abs(eps[a] - eps[b]) >= 1e-10) return eps[a] < eps[b];
        return largest_amp_index(a) < largest_amp_index(b);
    });

    FloquetEigensystem out;
    out.quasienergy_over_omega.resize(d);
    out.eigenvectors.resize(d, d);
    out.degenerate.assign(static_cast<std::size_t>(d), false);
    for (Index k = 0; k < d; ++k) {
        out.quasienergy_over_omega[k] = eps[order[static_cast<std::size_t>(k)]];
        out.eigenvectors.col(k) = es.eigenvectors.col(order[static_cast<std::size_t>(k)]);
    }
    for (Index k = 0; k + 1 < d; ++k) {
        if (std::abs(out.quasienergy_over_omega[k + 1] - out.quasienergy_over_omega[k]) <
            1e-10) {
            out.degenerate[static_cast<std::size_t>(k)] = true;
            out.degenerate[static_cast<std::size_t>(k + 1)] = true;
        }
    }
    return out;
}

Matrix reduce_central(const StateVector& psi) {
    const SectorBasis& basis = psi.basis;
    const Index nm = basis.satellite_dim();
    Matrix rho = Matrix::Zero(nm, nm);
    for (Index a = 0; a < nm; ++a) {
        for (Index b = 0; b < nm; ++b) {
            Complex val(0.0, 0.0);
            for (int s = 0; s < 2; ++s)
                val += psi.amplitudes[2 * a + s] * std::conj(psi.amplitudes[2 * b + s]);
            rho(a, b) = val;
        }
    }
    return rho;
}

RealMatrix dicke_bipartition_isometry(int n_satellites) {
    if (n_satellites % 2 != 0)
        throw std::invalid_argument("dicke_bipartition_isometry: N must be even");
    const int twice_j = n_satellites;       // fully symmetric sector
    const int twice_jh = n_satellites / 2;  // each half carries spin N/4
    const Index nm = twice_j + 1;
    const Index dh = twice_jh + 1;  // 2*(N/4) + 1 = N/2 + 1 states per half
    RealMatrix v = RealMatrix::Zero(dh * dh, nm);
    for (Index col = 0; col < nm; ++col) {
        const int twice_m = twice_j - 2 * static_cast<int>(col);
        for (Index i1 = 0; i1 < dh; ++i1) {
            const int twice_m1 = twice_jh - 2 * static_cast<int>(i1);
            const int twice_m2 = twice_m - twice_m1;
            if (std::abs(twice_m2) > twice_jh) continue;
            const Index i2 = static_cast<Index>((twice_jh - twice_m2) / 2);
            v(i1 * dh + i2, col) =
                clebsch_gordan(twice_jh, twice_m1, twice_jh, twice_m2, twice_j, twice_m);
        }
    }
    return v;
}

double dicke_bipartition_entropy(const Matrix& rho_satellite, const SectorBasis& basis) {
    if (basis.twice_j() != basis.n_satellites())
        throw std::invalid_argument(
            "dicke_bipartition_entropy: requires the fully symmetric sector (2j = N)");
    if (basis.n_satellites() % 2 != 0)
        throw std::invalid_argument("dicke_bipartition_entropy: N must be even");
    if (rho_satellite.rows() != basis.satellite_dim() ||
        rho_satellite.cols() != basis.satellite_dim())
        throw std::invalid_argument("dicke_bipartition_entropy: density matrix size");

    const RealMatrix v = dicke_bipartition_isometry(basis.n_satellites());
    const Index dh = static_cast<Index>(std::lround(std::sqrt(double(v.rows()))));
    const Matrix embedded = v * rho_satellite * v.transpose();

    Matrix rho_a = Matrix::Zero(dh, dh);
    for (Index a = 0; a < dh; ++a)
        for (Index b = 0; b < dh; ++b)
            for (Index c = 0; c < dh; ++c) rho_a(a, b) += embedded(a * dh + c, b * dh + c);

    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_a);
    if (solver.info() != Eigen::Success)
        throw numerical_error("dicke_bipartition_entropy: eigensolver failed");
    double entropy = 0.0;
    for (Index k = 0; k < dh; ++k) {
        const double lambda = solver.eigenvalues()[k];
        if (lambda > 1e-12) entropy -= lambda * std::log(lambda);
    }
    return entropy;
}

ScarOverlaps scar_overlaps(const Matrix& rho_satellite, const SectorBasis& basis) {
    const Index plus = basis.satellite_index_of(basis.twice_j());
    const Index minus = basis.satellite_index_of(-basis.twice_j());
    return {rho_satellite(plus, plus).real(), rho_satellite(minus, minus).real()};
}

std::vector<ScarRecord> scar_scatter(const ModelParams& params, const SectorBasis& basis) {
    if (basis.n_satellites() % 2 != 0)
        throw std::invalid_argument("scar_scatter: N must be even for the equal split");
    const UnitaryMatrix u_f = build_floquet(params, basis);
    const FloquetEigensystem es = floquet_eigensystem(u_f);

    std::vector<ScarRecord> records;
    records.reserve(static_cast<std::size_t>(basis.dim()));
    for (Index k = 0; k < basis.dim(); ++k) {
        Vector column = es.eigenvectors.col(k);
        column /= column.norm();
        const StateVector psi(basis, std::move(column));
        const Matrix rho = reduce_central(psi);
        const ScarOverlaps f = scar_overlaps(rho, basis);
        records.push_back({es.quasienergy_over_omega[k],
                           dicke_bipartition_entropy(rho, basis), f.plus, f.minus,
                           es.degenerate[static_cast<std::size_t>(k)]});
    }
    return records;
}

}  // namespace spinfloq
