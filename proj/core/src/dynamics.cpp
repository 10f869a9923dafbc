#include "spinfloq/dynamics.hpp"

#include "spinfloq/parallel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace spinfloq {

namespace {

RealVector itz_diagonal(const SectorBasis& basis) {
    RealVector d(basis.dim());
    for (Index i = 0; i < basis.dim(); ++i) d[i] = 0.5 * basis.label_of(i).twice_m;
    return d;
}

double magnetization_of(const Vector& psi, const RealVector& itz, int n_satellites) {
    double m = 0.0;
    for (Index i = 0; i < psi.size(); ++i) m += itz[i] * std::norm(psi[i]);
    return m / n_satellites;
}

// sum_{n=1}^{NN} e^{i delta n} as a Dirichlet kernel; delta in (-pi, pi]
Complex phase_sum(double delta, std::int64_t count) {
    if (delta == 0.0) return Complex(static_cast<double>(count), 0.0);
    const double half = 0.5 * delta;
    const double ratio = std::sin(half * count) / std::sin(half);
    return std::polar(ratio, half * (count + 1));
}

double wrap_to_pi(double phi) {
    const double two_pi = 2.0 * std::numbers::pi;
    phi = std::fmod(phi, two_pi);
    if (phi > std::numbers::pi) phi -= two_pi;
    if (phi <= -std::numbers::pi) phi += two_pi;
    return phi;
}

}  // namespace

double staggered_observable_sum(const UnitaryEigensystem& es, const Vector& psi0,
                                const RealVector& observable_diag, std::int64_t count) {
    const Index d = psi0.size();
    const Vector w = es.eigenvectors.adjoint() * psi0;
    const Matrix c =
        es.eigenvectors.adjoint() * observable_diag.asDiagonal() * es.eigenvectors;
    Complex total(0.0, 0.0);
    for (Index k = 0; k < d; ++k) {
        for (Index kp = 0; kp < d; ++kp) {
            const Complex weight = std::conj(w[k]) * w[kp] * c(k, kp);
            if (std::abs(weight) < 1e-300) continue;
            const double delta =
                wrap_to_pi(es.eigenphases[kp] - es.eigenphases[k] + std::numbers::pi);
            total += weight * phase_sum(delta, count);
        }
    }
    return total.real();
}

StroboscopicSeries evolve(const UnitaryMatrix& u_f, const StateVector& psi0,
                          std::int64_t n_cycles, std::int64_t record_stride,
                          bool record_return_probability) {
    if (n_cycles < 0) throw std::invalid_argument("evolve: n_cycles must be >= 0");
    if (record_stride < 1) throw std::invalid_argument("evolve: stride must be >= 1");
    if (u_f.dim() != psi0.basis.dim())
        throw std::invalid_argument("evolve: operator/state dimension mismatch");

    const RealVector itz = itz_diagonal(psi0.basis);
    const int n_sat = psi0.basis.n_satellites();
    StroboscopicSeries series;
    if (record_return_probability) series.return_probability.emplace();

    auto record = [&](std::int64_t n, const Vector& psi) {
        const double mag = magnetization_of(psi, itz, n_sat);
        series.cycles.push_back(n);
        series.magnetization.push_back(mag);
        series.staggered.push_back((n % 2 == 0 ? 1.0 : -1.0) * mag);
        if (series.return_probability)
            series.return_probability->push_back(std::norm(psi0.amplitudes.dot(psi)));
    };

    const bool spectral = n_cycles * psi0.basis.dim() > 100000 * record_stride;
    if (spectral) {
        const UnitaryEigensystem es = spectral_propagator(u_f.entries());
        for (std::int64_t n = 0; n <= n_cycles; n += record_stride)
            record(n, apply_spectral_power(es, psi0.amplitudes, n));
    } else {
        Vector psi = psi0.amplitudes;
        record(0, psi);
        for (std::int64_t n = 1; n <= n_cycles; ++n) {
            psi = u_f.entries() * psi;
            if (n % record_stride == 0) record(n, psi);
        }
    }
    return series;
}

double order_parameter(const UnitaryMatrix& u_f, const StateVector& psi0,
                       std::int64_t n_cycles) {
    if (n_cycles < 1) throw std::invalid_argument("order_parameter: N_C must be >= 1");
    const UnitaryEigensystem es = spectral_propagator(u_f.entries());
    const RealVector itz = itz_diagonal(psi0.basis);
    return staggered_observable_sum(es, psi0.amplitudes, itz, n_cycles) /
           (static_cast<double>(psi0.basis.n_satellites()) *
            static_cast<double>(n_cycles));
}

double staggered_window_mean(const UnitaryMatrix& u_f, const StateVector& psi0,
                             std::int64_t n0, std::int64_t n1) {
    if (n1 <= n0 || n0 < 0)
        throw std::invalid_argument("staggered_window_mean: need 0 <= n0 < n1");
    const UnitaryEigensystem es = spectral_propagator(u_f.entries());
    const RealVector itz = itz_diagonal(psi0.basis);
    const double upper = staggered_observable_sum(es, psi0.amplitudes, itz, n1);
    const double lower =
        n0 == 0 ? 0.0 : staggered_observable_sum(es, psi0.amplitudes, itz, n0);
    return (upper - lower) / (static_cast<double>(psi0.basis.n_satellites()) *
                              static_cast<double>(n1 - n0));
}

AxisName parse_axis_name(const std::string& name) {
    if (name == "a") return AxisName::a;
    if (name == "a_xy" || name == "axy") return AxisName::a_xy;
    if (name == "a_z" || name == "az") return AxisName::a_z;
    if (name == "b_z" || name == "bz") return AxisName::b_z;
    if (name == "theta") return AxisName::theta;
    throw std::invalid_argument("axis name must be one of a, a_xy, a_z, b_z, theta");
}

std::string axis_name_string(AxisName name) {
    switch (name) {
        case AxisName::a: return "a";
        case AxisName::a_xy: return "a_xy";
        case AxisName::a_z: return "a_z";
        case AxisName::b_z: return "b_z";
        case AxisName::theta: return "theta";
    }
    return "?";
}

void AxisSpec::validate() const {
    if (count < 1) throw std::invalid_argument("AxisSpec: count must be >= 1");
    if (!(start <= stop)) throw std::invalid_argument("AxisSpec: need start <= stop");
    if (!std::isfinite(start) || !std::isfinite(stop))
        throw std::invalid_argument("AxisSpec: non-finite bound");
}

std::vector<double> AxisSpec::values() const {
    validate();
    std::vector<double> vals(static_cast<std::size_t>(count));
    if (count == 1) {
        vals[0] = start;
        return vals;
    }
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) vals[static_cast<std::size_t>(i)] = start + step * i;
    return vals;
}

ModelParams apply_axis(ModelParams params, AxisName name, double value) {
    switch (name) {
        case AxisName::a:
            params.a_xy = value;
            params.a_z = value;
            break;
        case AxisName::a_xy: params.a_xy = value; break;
        case AxisName::a_z: params.a_z = value; break;
        case AxisName::b_z: params.b_z = value; break;
        case AxisName::theta:
            params.theta_e = value;
            params.theta_n = value;
            break;
    }
    return params;
}

PhaseGrid phase_sweep(const ModelParams& base, const SectorBasis& basis,
                      const AxisSpec& x, const AxisSpec& y,
                      const InitialState& psi0, std::int64_t n_cycles,
                      unsigned workers) {
    if (x.name == y.name)
        throw std::invalid_argument("phase_sweep: axes must be distinct");
    const std::vector<double> xs = x.values();
    const std::vector<double> ys = y.values();

    PhaseGrid grid;
    grid.x_axis = x;
    grid.y_axis = y;
    grid.n_cycles = n_cycles;
    grid.fixed_params = base;
    grid.order_parameter.resize(static_cast<Index>(ys.size()),
                                static_cast<Index>(xs.size()));

    std::vector<std::string> cell_warnings(xs.size() * ys.size());
    if (workers == 0) workers = default_worker_count();

    parallel_for(xs.size() * ys.size(), workers, [&](std::size_t cell) {
        const std::size_t iy = cell / xs.size();
        const std::size_t ix = cell % xs.size();
        ModelParams p = apply_axis(base, x.name, xs[ix]);
        p = apply_axis(p, y.name, ys[iy]);
        try {
            const UnitaryMatrix u_f = build_floquet(p, basis);
            const StateVector psi = psi0.realize(basis);
            grid.order_parameter(static_cast<Index>(iy), static_cast<Index>(ix)) =
                order_parameter(u_f, psi, n_cycles);
        } catch (const std::exception& e) {
            grid.order_parameter(static_cast<Index>(iy), static_cast<Index>(ix)) =
                std::numeric_limits<double>::quiet_NaN();
            cell_warnings[cell] = "cell (" + axis_name_string(x.name) + "=" +
                                  std::to_string(xs[ix]) + ", " +
                                  axis_name_string(y.name) + "=" +
                                  std::to_string(ys[iy]) + "): " + e.what();
        }
    });

    for (auto& w : cell_warnings)
        if (!w.empty()) grid.warnings.push_back(std::move(w));
    return grid;
}

}  // namespace spinfloq
