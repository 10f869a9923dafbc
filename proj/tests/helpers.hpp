// helpers.hpp — shared test utilities: deterministic random draws, random
// states/unitaries, and the brute-force product-basis entropy oracle used to
// validate the Clebsch-Gordan path.

#pragma once

#include <spinfloq/basis.hpp>
#include <spinfloq/linalg.hpp>
#include <spinfloq/state.hpp>

#include <Eigen/Eigenvalues>

#include <bit>
#include <cmath>
#include <random>

namespace spinfloq::test {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = (double(rng() >> 11) + 0.5) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

inline Vector random_state(std::mt19937_64& rng, Index dim) {
    Vector v(dim);
    for (Index i = 0; i < dim; ++i) v[i] = Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
    v /= v.norm();
    return v;
}

inline Matrix random_hermitian(std::mt19937_64& rng, Index dim) {
    Matrix a(dim, dim);
    for (Index i = 0; i < dim; ++i)
        for (Index j = 0; j < dim; ++j)
            a(i, j) = Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
    return 0.5 * (a + Matrix(a.adjoint()));
}

// product of two Hermitian exponentials, as the spec's random-unitary recipe
inline Matrix random_unitary(std::mt19937_64& rng, Index dim) {
    return hermitian_expm_raw(random_hermitian(rng, dim), 0.7) *
           hermitian_expm_raw(random_hermitian(rng, dim), 1.3);
}

// random satellite density matrix supported on the symmetric sector
inline Matrix random_density_matrix(std::mt19937_64& rng, Index dim) {
    Matrix a(dim, dim);
    for (Index i = 0; i < dim; ++i)
        for (Index j = 0; j < dim; ++j)
            a(i, j) = Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
    Matrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    return rho;
}

// Dicke state |J=N/2, m> expanded in the 2^N product basis (bit = 1 means
// down), independent of the Clebsch-Gordan machinery under test.
inline Vector dicke_state_product_basis(int n, int twice_m) {
    const int n_down = (n - twice_m) / 2;
    Vector v = Vector::Zero(Index{1} << n);
    for (Index bits = 0; bits < (Index{1} << n); ++bits)
        if (std::popcount(static_cast<std::uint64_t>(bits)) == n_down) v[bits] = 1.0;
    v /= v.norm();
    return v;
}

// Entropy of the first-half reduction of a symmetric-sector satellite density
// matrix, computed entirely in the 2^N product basis.
inline double brute_force_dicke_entropy(const Matrix& rho_sector, int n) {
    const Index nm = rho_sector.rows();
    const Index half_dim = Index{1} << (n / 2);
    std::vector<Vector> dicke;
    for (Index col = 0; col < nm; ++col)
        dicke.push_back(dicke_state_product_basis(n, n - 2 * int(col)));

    Matrix rho_a = Matrix::Zero(half_dim, half_dim);
    // rho_full = sum_{m m'} rho[m,m'] |D_m><D_m'|, traced over the last N/2
    // spins (high bits)
    for (Index m = 0; m < nm; ++m) {
        for (Index mp = 0; mp < nm; ++mp) {
            if (std::abs(rho_sector(m, mp)) < 1e-300) continue;
            Matrix contrib = Matrix::Zero(half_dim, half_dim);
            for (Index hi = 0; hi < half_dim; ++hi) {
                for (Index a = 0; a < half_dim; ++a)
                    for (Index b = 0; b < half_dim; ++b)
                        contrib(a, b) += dicke[std::size_t(m)][(hi << (n / 2)) | a] *
                                         std::conj(dicke[std::size_t(mp)][(hi << (n / 2)) | b]);
            }
            rho_a += rho_sector(m, mp) * contrib;
        }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_a);
    double entropy = 0.0;
    for (Index k = 0; k < half_dim; ++k) {
        const double lambda = solver.eigenvalues()[k];
        if (lambda > 1e-12) entropy -= lambda * std::log(lambda);
    }
    return entropy;
}

}  // namespace spinfloq::test
