#include "spinfloq/krylov.hpp"

#include <cmath>
#include <numbers>

namespace spinfloq {

KrylovReport krylov_subspace(const Matrix& generator, const StateVector& psi0,
                             double rank_tol, double occupation_threshold) {
    const Index dim = psi0.basis.dim();
    if (generator.rows() != dim || generator.cols() != dim)
        throw std::invalid_argument("krylov_subspace: generator/state dimension mismatch");

    std::vector<Vector> basis;
    basis.push_back(psi0.amplitudes / psi0.amplitudes.norm());

    KrylovReport report;
    Index expand = 0;       // next basis vector to apply the generator to
    Index applications = 0;
    Index since_addition = 0;
    while (expand < static_cast<Index>(basis.size()) && applications < 4 * dim &&
           since_addition < dim) {
        Vector w = generator * basis[expand];
        ++expand;
        ++applications;
        for (int pass = 0; pass < 2; ++pass)
            for (const Vector& b : basis) w -= b.dot(w) * b;
        const double residual = w.norm();
        report.residual_history.push_back(residual);
        if (residual > rank_tol) {
            basis.push_back(w / residual);
            since_addition = 0;
        } else {
            ++since_addition;
        }
    }

    report.dimension = static_cast<Index>(basis.size());
    report.basis_vectors.resize(dim, report.dimension);
    for (Index k = 0; k < report.dimension; ++k)
        report.basis_vectors.col(k) = basis[static_cast<std::size_t>(k)];

    for (Index i = 0; i < dim; ++i) {
        double weight = 0.0;
        for (Index k = 0; k < report.dimension; ++k)
            weight += std::norm(report.basis_vectors(i, k));
        if (weight > occupation_threshold)
            report.occupied_labels.push_back(psi0.basis.label_of(i));
    }
    return report;
}

OverlapMap overlap_map(const ModelParams& params, const StateVector& psi0,
                       const std::vector<std::int64_t>& cycles) {
    const UnitaryMatrix u_f = build_floquet(params, psi0.basis);
    const UnitaryEigensystem es = spectral_propagator(u_f.entries());

    OverlapMap map;
    map.sampled_cycles = cycles;
    for (Index i = 0; i < psi0.basis.dim(); ++i)
        map.columns.push_back(psi0.basis.label_of(i));
    map.overlaps.resize(static_cast<Index>(cycles.size()), psi0.basis.dim());
    for (std::size_t r = 0; r < cycles.size(); ++r) {
        if (cycles[r] < 0) throw std::invalid_argument("overlap_map: negative cycle");
        const Vector psi = apply_spectral_power(es, psi0.amplitudes, cycles[r]);
        for (Index i = 0; i < psi.size(); ++i)
            map.overlaps(static_cast<Index>(r), i) = std::norm(psi[i]);
    }
    return map;
}

std::vector<std::int64_t> fig2_cycle_sampler() {
    std::vector<std::int64_t> cycles;
    cycles.reserve(500);
    for (int k = 499; k >= 0; --k) cycles.push_back(100000 - 2 * k);
    return cycles;
}

std::vector<std::int64_t> stride_cycle_sampler(std::int64_t stride, std::int64_t max) {
    if (stride < 1 || max < 0)
        throw std::invalid_argument("stride_cycle_sampler: need stride >= 1, max >= 0");
    std::vector<std::int64_t> cycles;
    for (std::int64_t n = 0; n <= max; n += stride) cycles.push_back(n);
    return cycles;
}

OccupationSummary effective_dimension(const OverlapMap& map, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("effective_dimension: threshold must be in (0,1)");
    OccupationSummary summary;
    for (Index r = 0; r < map.overlaps.rows(); ++r) {
        int occupied = 0;
        double sum_sq = 0.0;
        for (Index c = 0; c < map.overlaps.cols(); ++c) {
            const double f = map.overlaps(r, c);
            if (f > threshold) ++occupied;
            sum_sq += f * f;
        }
        summary.occupied_count.push_back(occupied);
        summary.inverse_participation_ratio.push_back(sum_sq > 0.0 ? 1.0 / sum_sq : 0.0);
    }
    return summary;
}

Matrix floquet_hamiltonian(const Matrix& u_f, double period, bool* branch_ambiguous) {
    const UnitaryEigensystem es = spectral_propagator(u_f);
    if (branch_ambiguous) {
        *branch_ambiguous = false;
        for (Index k = 0; k < es.eigenphases.size(); ++k)
            if (std::numbers::pi - std::abs(es.eigenphases[k]) < 1e-9)
                *branch_ambiguous = true;
    }
    Vector energies(es.eigenphases.size());
    for (Index k = 0; k < es.eigenphases.size(); ++k)
        energies[k] = Complex(-es.eigenphases[k] / period, 0.0);
    Matrix h = es.eigenvectors * energies.asDiagonal() * es.eigenvectors.adjoint();
    // exact Hermitization of the reconstruction
    return 0.5 * (h + Matrix(h.adjoint()));
}

KrylovReport floquet_hamiltonian_krylov(const ModelParams& params,
                                        const StateVector& psi0, double rank_tol) {
    const UnitaryMatrix u_f = build_floquet(params, psi0.basis);
    bool ambiguous = false;
    const Matrix h_f = floquet_hamiltonian(u_f.entries(), params.period(), &ambiguous);
    KrylovReport report = krylov_subspace(h_f, psi0, rank_tol);
    report.branch_ambiguous = ambiguous;
    return report;
}

}  // namespace spinfloq
