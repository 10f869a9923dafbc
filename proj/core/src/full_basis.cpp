#include "spinfloq/full_basis.hpp"

#include "spinfloq/dynamics.hpp"
#include "spinfloq/parallel.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace spinfloq {

namespace {

double sz_of_bit(Index state, int bit) { return ((state >> bit) & 1) == 0 ? 0.5 : -0.5; }

}  // namespace

bool FullBasisModel::homogeneous() const {
    for (int p = 1; p < n_satellites; ++p)
        if (a_xy[static_cast<std::size_t>(p)] != a_xy[0] ||
            a_z[static_cast<std::size_t>(p)] != a_z[0])
            return false;
    return true;
}

void FullBasisModel::validate() const {
    if (n_satellites < 1)
        throw std::invalid_argument("FullBasisModel: need at least one satellite");
    if (n_satellites > 14)
        throw std::invalid_argument("FullBasisModel: N > 14 exceeds the dense-matrix cap");
    if (a_xy.size() != static_cast<std::size_t>(n_satellites) ||
        a_z.size() != static_cast<std::size_t>(n_satellites))
        throw std::invalid_argument("FullBasisModel: coupling list length != N");
    if (!(omega > 0.0)) throw std::invalid_argument("FullBasisModel: omega must be positive");
}

FullBasisModel FullBasisModel::homogeneous_from(const ModelParams& params,
                                                int n_satellites) {
    params.validate();
    FullBasisModel model;
    model.n_satellites = n_satellites;
    model.a_xy.assign(static_cast<std::size_t>(n_satellites), params.a_xy);
    model.a_z.assign(static_cast<std::size_t>(n_satellites), params.a_z);
    model.b_z = params.b_z;
    model.omega = params.omega;
    model.theta_e = params.theta_e;
    model.theta_n = params.theta_n;
    return model;
}

HermitianMatrix build_full_hamiltonian(const FullBasisModel& model) {
    model.validate();
    const Index dim = model.dim();
    Matrix h = Matrix::Zero(dim, dim);
    for (Index s = 0; s < dim; ++s) {
        const double s0z = sz_of_bit(s, 0);
        double diag = model.b_z * s0z;
        for (int p = 1; p <= model.n_satellites; ++p)
            diag += model.a_z[static_cast<std::size_t>(p - 1)] * sz_of_bit(s, p) * s0z;
        h(s, s) = diag;
        // flip-flop Ip+ S0- + Ip- S0+ connects states with opposite
        // satellite/central bits; matrix element 1 in the ladder form
        for (int p = 1; p <= model.n_satellites; ++p) {
            const bool central_down = (s & 1) != 0;
            const bool satellite_down = ((s >> p) & 1) != 0;
            if (central_down != satellite_down)
                h(s ^ 1 ^ (Index{1} << p), s) += model.a_xy[static_cast<std::size_t>(p - 1)];
        }
    }
    return HermitianMatrix(std::move(h));
}

UnitaryMatrix build_full_pulse(const FullBasisModel& model) {
    model.validate();
    const Index dim = model.dim();
    const double pi = std::numbers::pi;
    Matrix gen = Matrix::Zero(dim, dim);
    for (Index s = 0; s < dim; ++s) {
        gen(s ^ 1, s) += (pi - model.theta_e) * 0.5;
        for (int p = 1; p <= model.n_satellites; ++p)
            gen(s ^ (Index{1} << p), s) += (pi - model.theta_n) * 0.5;
    }
    return hermitian_expm(HermitianMatrix(std::move(gen)), 1.0);
}

UnitaryMatrix full_floquet(const FullBasisModel& model) {
    const UnitaryMatrix pulse = build_full_pulse(model);
    const UnitaryMatrix u_h =
        hermitian_expm(build_full_hamiltonian(model), model.period());
    return UnitaryMatrix(pulse.entries() * u_h.entries());
}

RealVector full_itz_diagonal(int n_satellites) {
    const Index dim = Index{1} << (n_satellites + 1);
    RealVector d(dim);
    for (Index s = 0; s < dim; ++s) {
        double total = 0.0;
        for (int p = 1; p <= n_satellites; ++p) total += sz_of_bit(s, p);
        d[s] = total;
    }
    return d;
}

Matrix full_casimir(int n_satellites) {
    const Index dim = Index{1} << (n_satellites + 1);
    Matrix c = Matrix::Zero(dim, dim);
    for (Index s = 0; s < dim; ++s) {
        double diag = 0.0;
        for (int p = 1; p <= n_satellites; ++p) {
            diag += 0.75;  // Ip^2 = 3/4 per spin-1/2
            for (int q = 1; q <= n_satellites; ++q) {
                if (p == q) continue;
                diag += 0.5 * ((((s >> p) & 1) == ((s >> q) & 1)) ? 0.5 : -0.5);
            }
        }
        c(s, s) = diag;
        // transverse part: (Ip+ Iq- + Ip- Iq+)/2 * 2 -> swap antiparallel pairs
        for (int p = 1; p <= n_satellites; ++p)
            for (int q = p + 1; q <= n_satellites; ++q)
                if (((s >> p) & 1) != ((s >> q) & 1))
                    c(s ^ (Index{1} << p) ^ (Index{1} << q), s) += 1.0;
    }
    return c;
}

Matrix symmetric_sector_isometry(int n_satellites) {
    const int n = n_satellites;
    const Index dim = Index{1} << (n + 1);
    const Index sector_dim = 2 * (n + 1);
    // binomials up to N
    std::vector<double> log_binom(static_cast<std::size_t>(n + 1), 0.0);
    for (int k = 1; k <= n; ++k)
        log_binom[static_cast<std::size_t>(k)] =
            log_binom[static_cast<std::size_t>(k - 1)] +
            std::log(double(n - k + 1) / double(k));

    Matrix v = Matrix::Zero(dim, sector_dim);
    for (Index col = 0; col < sector_dim; ++col) {
        const int k = static_cast<int>(col / 2);       // decreasing m
        const int central_bit = static_cast<int>(col % 2);
        const int n_down = k;                          // 2m = N - 2k
        const double amp = std::exp(-0.5 * log_binom[static_cast<std::size_t>(n_down)]);
        for (Index bits = 0; bits < (Index{1} << n); ++bits) {
            if (std::popcount(static_cast<std::uint64_t>(bits)) != n_down) continue;
            v((bits << 1) | central_bit, col) = amp;
        }
    }
    return v;
}

Vector product_state(int n_satellites, const std::string& satellites, char central) {
    if (static_cast<int>(satellites.size()) != n_satellites)
        throw std::invalid_argument("product_state: satellite string length != N");
    Index state = 0;
    if (central == 'd') state |= 1;
    else if (central != 'u')
        throw std::invalid_argument("product_state: central spin must be 'u' or 'd'");
    for (int p = 0; p < n_satellites; ++p) {
        const char c = satellites[static_cast<std::size_t>(p)];
        if (c == 'd') state |= Index{1} << (p + 1);
        else if (c != 'u')
            throw std::invalid_argument("product_state: satellite chars must be 'u' or 'd'");
    }
    Vector psi = Vector::Zero(Index{1} << (n_satellites + 1));
    psi[state] = 1.0;
    return psi;
}

void DisorderSpec::validate() const {
    if (std < 0.0) throw std::invalid_argument("DisorderSpec: std must be >= 0");
    if (n_realizations < 1)
        throw std::invalid_argument("DisorderSpec: need at least one realization");
}

std::vector<std::vector<double>> sample_couplings(const DisorderSpec& spec,
                                                  int n_satellites) {
    spec.validate();
    std::vector<std::vector<double>> all;
    all.reserve(static_cast<std::size_t>(spec.n_realizations));
    for (int r = 0; r < spec.n_realizations; ++r) {
        GaussianSampler sampler(derive_stream_seed(spec.seed, static_cast<std::uint64_t>(r)));
        std::vector<double> couplings(static_cast<std::size_t>(n_satellites));
        for (double& c : couplings) c = spec.mean + spec.std * sampler.normal();
        all.push_back(std::move(couplings));
    }
    return all;
}

DisorderResult disorder_order_parameter(const DisorderSpec& spec,
                                        const FullBasisModel& base, const Vector& psi0,
                                        std::int64_t n_cycles, unsigned workers) {
    base.validate();
    if (n_cycles < 1)
        throw std::invalid_argument("disorder_order_parameter: N_C must be >= 1");
    if (psi0.size() != base.dim())
        throw std::invalid_argument("disorder_order_parameter: state dimension mismatch");
    if (std::abs(psi0.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("disorder_order_parameter: state not normalized");

    DisorderResult result;
    result.rng_identity = rng_identity_string;
    result.couplings = sample_couplings(spec, base.n_satellites);
    result.order_parameter.assign(static_cast<std::size_t>(spec.n_realizations), 0.0);

    const RealVector itz = full_itz_diagonal(base.n_satellites);
    if (workers == 0) workers = default_worker_count();

    parallel_for(static_cast<std::size_t>(spec.n_realizations), workers,
                 [&](std::size_t r) {
        FullBasisModel model = base;
        model.a_xy = result.couplings[r];
        const UnitaryMatrix u_f = full_floquet(model);
        const UnitaryEigensystem es = spectral_propagator(u_f.entries());
        result.order_parameter[r] =
            staggered_observable_sum(es, psi0, itz, n_cycles) /
            (double(base.n_satellites) * double(n_cycles));
    });
    return result;
}

}  // namespace spinfloq
