#include <spinfloq/operators.hpp>
#include <spinfloq/state.hpp>

#include <doctest.h>

#include "helpers.hpp"

#include <numbers>

using namespace spinfloq;

TEST_CASE("sector dimensions") {
    CHECK(build_sector(21, 21).dim() == 44);
    CHECK(build_sector(2, 0).dim() == 2);
    CHECK(build_sector(10, 10).dim() == 22);
}

TEST_CASE("sector ordering and index round trip") {
    const SectorBasis basis(7, 5);
    // decreasing 2m, up before down
    CHECK(basis.label_of(0) == BasisLabel{5, Spin::up});
    CHECK(basis.label_of(1) == BasisLabel{5, Spin::down});
    CHECK(basis.label_of(2) == BasisLabel{3, Spin::up});
    CHECK(basis.label_of(basis.dim() - 1) == BasisLabel{-5, Spin::down});
    for (Index i = 0; i < basis.dim(); ++i)
        CHECK(basis.index_of(basis.label_of(i)) == i);
}

TEST_CASE("sector rejects bad labels") {
    CHECK_THROWS_AS(build_sector(10, 11), std::invalid_argument);  // 2j > N
    CHECK_THROWS_AS(build_sector(10, 7), std::invalid_argument);   // parity
    CHECK_THROWS_AS(build_sector(0, 0), std::invalid_argument);
    const SectorBasis basis(6, 4);
    CHECK_THROWS_AS(basis.index_of(6, Spin::up), std::invalid_argument);
    CHECK_THROWS_AS(basis.index_of(3, Spin::up), std::invalid_argument);
}

TEST_CASE("collective ladder amplitudes") {
    // j = 1 sector: It+ |0 sigma> = sqrt(2) |1 sigma>, cross-checked against
    // the raising operator on the symmetric two-spin triplet: sum_p sigma_p^+
    // maps (|ud> + |du>)/sqrt(2) to 2|uu>/sqrt(2) = sqrt(2)|uu>
    CHECK(ladder_alpha(2, 0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    const SectorBasis basis(2, 2);
    const CollectiveOps ops = collective_ops(basis);
    const Index from = basis.index_of(0, Spin::down);
    const Index to = basis.index_of(2, Spin::down);
    CHECK(std::abs(ops.it_plus(to, from) - std::sqrt(2.0)) < 1e-14);

    // top of the ladder annihilates
    CHECK(ops.it_plus.col(basis.index_of(2, Spin::up)).norm() == 0.0);

    // It_z is diagonal with eigenvalue m
    for (Index i = 0; i < basis.dim(); ++i)
        CHECK(ops.it_z(i, i).real() ==
              doctest::Approx(0.5 * basis.label_of(i).twice_m));
}

TEST_CASE("collective operator structure") {
    const SectorBasis basis(9, 9);
    const CollectiveOps ops = collective_ops(basis);
    CHECK(max_abs(ops.it_minus - Matrix(ops.it_plus.adjoint())) == 0.0);
    CHECK(max_abs(ops.it_x - 0.5 * (ops.it_plus + ops.it_minus)) == 0.0);
    CHECK(max_abs(ops.it_z * ops.s0_z - ops.s0_z * ops.it_z) == 0.0);
}

TEST_CASE("h0 diagonal for ising couplings") {
    const SectorBasis basis(5, 5);
    ModelParams params;
    params.a_z = 1.3;
    params.b_z = 100.0;
    params.b_nz = 0.4;
    const Matrix h = build_h0(params, basis).entries();
    for (Index i = 0; i < basis.dim(); ++i) {
        const BasisLabel l = basis.label_of(i);
        const double m = 0.5 * l.twice_m;
        const double expected =
            (params.a_z * m + params.b_z) * 0.5 * spin_sign(l.sigma) + params.b_nz * m;
        CHECK(h(i, i).real() == doctest::Approx(expected).epsilon(1e-14));
        CHECK(h.row(i).cwiseAbs().sum() == doctest::Approx(std::abs(expected)));
    }
}

TEST_CASE("h0 zero params gives zero matrix") {
    const SectorBasis basis(4, 4);
    CHECK(max_abs(build_h0(ModelParams{}, basis).entries()) == 0.0);
}

TEST_CASE("fully polarized state is an h0 eigenvector") {
    const SectorBasis basis(10, 10);
    ModelParams params;
    params.a_xy = 1.3;
    params.a_z = 3.3;
    params.b_z = 100.0;
    const Matrix h = build_h0(params, basis).entries();
    const Index top = basis.index_of(basis.twice_j(), Spin::up);
    Vector e = Vector::Zero(basis.dim());
    e[top] = 1.0;
    const Vector he = h * e;
    const Complex eigenvalue = he[top];
    CHECK((he - eigenvalue * e).norm() < 1e-12);
    // with figure-scale positive couplings it carries the largest diagonal
    for (Index i = 0; i < basis.dim(); ++i)
        CHECK(h(i, i).real() <= h(top, top).real() + 1e-12);
}

TEST_CASE("h0 commutes with the total z projection") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const SectorBasis basis(9, 9);
        ModelParams params;
        params.a_xy = test::uniform(rng, -2, 2);
        params.a_z = test::uniform(rng, -2, 2);
        params.b_z = test::uniform(rng, -50, 50);
        const Matrix h = build_h0(params, basis).entries();
        const CollectiveOps ops = collective_ops(basis);
        const Matrix total_z = ops.it_z + ops.s0_z;
        CHECK(max_abs(h * total_z - total_z * h) <= 1e-12 * std::max(1.0, max_abs(h)));
    }
}

TEST_CASE("hermitian_expm basics") {
    const Matrix zero = Matrix::Zero(3, 3);
    CHECK(max_abs(hermitian_expm(HermitianMatrix(zero), 0.7).entries() -
                  Matrix::Identity(3, 3)) < 1e-14);

    Matrix diag = Matrix::Zero(3, 3);
    diag(0, 0) = 0.3;
    diag(1, 1) = -1.2;
    diag(2, 2) = 4.0;
    const Matrix u = hermitian_expm(HermitianMatrix(diag), 2.0).entries();
    for (Index k = 0; k < 3; ++k)
        CHECK(std::abs(u(k, k) - std::polar(1.0, -diag(k, k).real() * 2.0)) < 1e-14);

    // exp(-i pi sigma_x / 2) = -i sigma_x
    Matrix sx(2, 2);
    sx << 0.0, 1.0, 1.0, 0.0;
    const Matrix r = hermitian_expm(HermitianMatrix(0.5 * sx), std::numbers::pi).entries();
    CHECK(max_abs(r - Complex(0.0, -1.0) * sx) < 1e-14);
}

TEST_CASE("hermitian_expm semigroup and unitarity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix h = test::random_hermitian(rng, 8);
        const Matrix a = hermitian_expm_raw(h, 0.4);
        const Matrix b = hermitian_expm_raw(h, 1.1);
        const Matrix c = hermitian_expm_raw(h, 1.5);
        CHECK(max_abs(a * b - c) < 1e-10);
        CHECK(unitarity_defect(a) < 1e-10);
    }
}

TEST_CASE("ideal pulse maps |m sigma> to |-m sigma-bar> with phase (-i)^(2j+1)") {
    for (const int n : {3, 4, 7}) {
        const SectorBasis basis(n, n);
        const Matrix u = build_pulse(ModelParams{}, basis).entries();
        Complex phase{1.0, 0.0};
        for (int k = 0; k < (basis.twice_j() + 1) % 4; ++k) phase *= Complex(0.0, -1.0);
        for (Index i = 0; i < basis.dim(); ++i) {
            const BasisLabel l = basis.label_of(i);
            const Index target = basis.index_of(-l.twice_m, flip(l.sigma));
            CHECK(std::abs(u(target, i) - phase) < 1e-12);
        }
    }
}

TEST_CASE("pulse with theta = pi is the identity") {
    const SectorBasis basis(5, 5);
    ModelParams params;
    params.theta_e = std::numbers::pi;
    params.theta_n = std::numbers::pi;
    CHECK(max_abs(build_pulse(params, basis).entries() -
                  Matrix::Identity(basis.dim(), basis.dim())) < 1e-12);
}

TEST_CASE("split pulse errors act on their own tensor slot") {
    // theta_e = pi leaves the central spin alone while the satellites flip
    const SectorBasis basis(5, 5);
    ModelParams params;
    params.theta_e = std::numbers::pi;
    params.theta_n = 0.0;
    const Matrix u = build_pulse(params, basis).entries();
    for (Index i = 0; i < basis.dim(); ++i) {
        const BasisLabel l = basis.label_of(i);
        const Index target = basis.index_of(-l.twice_m, l.sigma);
        CHECK(std::abs(std::abs(u(target, i)) - 1.0) < 1e-12);
    }
}

TEST_CASE("floquet operator composition and unitarity") {
    std::mt19937_64 rng(23);
    const SectorBasis basis(7, 7);
    ModelParams params;
    params.a_xy = 0.9;
    params.a_z = 2.1;
    params.b_z = 17.0;
    params.theta_e = 0.07;
    params.theta_n = 0.11;
    const Matrix expected = build_pulse(params, basis).entries() *
                            hermitian_expm(build_h0(params, basis), params.period()).entries();
    const Matrix u_f = build_floquet(params, basis).entries();
    CHECK(max_abs(u_f - expected) < 1e-12);
    CHECK(unitarity_defect(u_f) < 1e-10);
}

TEST_CASE("pure pulse dynamics has exact period two") {
    const SectorBasis basis(6, 6);
    ModelParams params;  // H0 = 0, theta = 0
    const Matrix u = build_floquet(params, basis).entries();
    const Matrix u2 = u * u;
    const Complex phase = u2(0, 0);
    CHECK(std::abs(std::abs(phase) - 1.0) < 1e-12);
    CHECK(max_abs(u2 - phase * Matrix::Identity(basis.dim(), basis.dim())) < 1e-12);
}

TEST_CASE("ising two-cycle phases match the closed form") {
    const SectorBasis basis(7, 7);
    ModelParams params;
    params.a_z = 1.3;
    params.b_z = 100.0;
    const Matrix u = build_floquet(params, basis).entries();
    const Matrix u2 = u * u;
    // U_F^2 |m sigma> = conv * e^{-i Az m T sigma} |m sigma>
    Complex conv{1.0, 0.0};
    for (int k = 0; k < (2 * (basis.twice_j() + 1)) % 4; ++k) conv *= Complex(0.0, -1.0);
    for (Index i = 0; i < basis.dim(); ++i) {
        const BasisLabel l = basis.label_of(i);
        const double phase =
            params.a_z * 0.5 * l.twice_m * params.period() * spin_sign(l.sigma);
        CHECK(std::abs(u2(i, i) - conv * std::polar(1.0, -phase)) < 1e-11);
    }
}

TEST_CASE("xx single cycle produces the C/S pair") {
    const SectorBasis basis(9, 9);
    ModelParams params;
    params.a_xy = 0.83;
    const Matrix u = build_floquet(params, basis).entries();
    const int twice_m = 3;
    const double angle =
        params.a_xy * params.period() * ladder_alpha(basis.twice_j(), twice_m);
    Complex conv{1.0, 0.0};
    for (int k = 0; k < (basis.twice_j() + 1) % 4; ++k) conv *= Complex(0.0, -1.0);
    const Index from = basis.index_of(twice_m, Spin::up);
    CHECK(std::abs(u(basis.index_of(-twice_m, Spin::down), from) -
                   conv * std::cos(angle)) < 1e-12);
    CHECK(std::abs(u(basis.index_of(-twice_m - 2, Spin::up), from) -
                   conv * Complex(0.0, -1.0) * std::sin(angle)) < 1e-12);
}

TEST_CASE("ideal floquet maps 2d blocks onto their mirror blocks") {
    // span{|m up>, |m+1 down>} -> span{|-m down>, |-(m+1) up>} for any params
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 4; ++trial) {
        const SectorBasis basis(9, 9);
        ModelParams params;
        params.a_xy = test::uniform(rng, 0.2, 2.0);
        params.a_z = test::uniform(rng, 0.0, 3.0);
        params.b_z = test::uniform(rng, 0.0, 30.0);
        const Matrix u = build_floquet(params, basis).entries();
        for (int twice_m = -7; twice_m <= 7; twice_m += 4) {
            for (const auto& seed :
                 {BasisLabel{twice_m, Spin::up}, BasisLabel{twice_m + 2, Spin::down}}) {
                const Vector image = u.col(basis.index_of(seed));
                Vector residual = image;
                for (const auto& target : {BasisLabel{-twice_m, Spin::down},
                                           BasisLabel{-twice_m - 2, Spin::up}}) {
                    const Index t = basis.index_of(target);
                    residual[t] = 0.0;
                }
                CHECK(residual.norm() < 1e-10);
            }
        }
    }
}
