#include "spinfloq/oracles.hpp"

#include "spinfloq/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinfloq {

namespace {

constexpr Complex imag_unit{0.0, 1.0};

void require_largest_sector(const SectorBasis& basis, const char* who) {
    if (basis.twice_j() != basis.n_satellites())
        throw std::invalid_argument(std::string(who) +
                                    ": derived for the largest sector j = N/2 only");
}

// sum_{r=0}^{count-1} x^r
Complex geometric_sum(Complex x, std::int64_t count) {
    if (std::abs(x - Complex(1.0, 0.0)) < 1e-12) return Complex(double(count), 0.0);
    return (Complex(1.0, 0.0) - std::pow(x, double(count))) / (Complex(1.0, 0.0) - x);
}

}  // namespace

LadderCoefficient ladder_coefficient(int twice_j, int twice_m) {
    return {ladder_alpha(twice_j, twice_m), ladder_alpha(twice_j, twice_m - 2)};
}

Complex kick_phase(int twice_j, std::int64_t n_cycles) {
    // (-i)^((2j+1) n) cycles with period 4 in the exponent
    const std::int64_t e = ((twice_j + 1) % 4) * (n_cycles % 4) % 4;
    switch ((e % 4 + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

OracleAmplitude ising_exact(int twice_m, Spin sigma, std::int64_t n_cycles,
                            const ModelParams& params, const SectorBasis& basis) {
    if (params.a_xy != 0.0)
        throw std::invalid_argument("ising_exact: requires a_xy = 0");
    if (n_cycles < 0) throw std::invalid_argument("ising_exact: negative cycle count");
    params.validate();
    if (!basis.holds(twice_m)) throw std::invalid_argument("ising_exact: 2m not in sector");

    const double t = params.period();
    const double m = 0.5 * twice_m;
    const double sign = spin_sign(sigma);
    const std::int64_t p = n_cycles / 2;

    // accumulated satellite Zeeman phase is shared by every visited state:
    // b_nz enters as e^{-i b_nz m T} per cycle at even cycles and flips sign
    // with m after the kick, cancelling pairwise; with the default b_nz = 0
    // nothing changes. Supported only for b_nz = 0, the case the closed
    // form covers.
    if (params.b_nz != 0.0)
        throw std::invalid_argument("ising_exact: derived for b_nz = 0");

    const Complex conv = kick_phase(basis.twice_j(), n_cycles);
    const double even_phase = double(p) * params.a_z * m * t * sign;
    if (n_cycles % 2 == 0)
        return {{twice_m, sigma}, conv * std::polar(1.0, -even_phase)};
    const double phi = (params.a_z * m + params.b_z) * t * sign / 2.0;
    return {{-twice_m, flip(sigma)}, conv * std::polar(1.0, -(even_phase + phi))};
}

bool ising_robustness(double a_z, double omega, double tol) {
    if (!(omega > 0.0)) throw std::invalid_argument("ising_robustness: omega <= 0");
    const double ratio = a_z / omega;
    const double nearest_odd = 2.0 * std::round((ratio - 1.0) / 2.0) + 1.0;
    return std::abs(ratio) > tol && std::abs(ratio - nearest_odd) <= tol;
}

std::vector<OracleAmplitude> ising_first_order(int twice_m, std::int64_t n_cycles,
                                               double theta, const ModelParams& params,
                                               const SectorBasis& basis) {
    if (params.a_xy != 0.0)
        throw std::invalid_argument("ising_first_order: requires a_xy = 0");
    if (n_cycles < 2 || n_cycles % 2 != 0)
        throw std::invalid_argument("ising_first_order: derived for even cycle counts");
    if (params.b_nz != 0.0)
        throw std::invalid_argument("ising_first_order: derived for b_nz = 0");
    params.validate();

    const double t = params.period();
    const double m = 0.5 * twice_m;
    const std::int64_t p = n_cycles / 2;
    const LadderCoefficient alpha = ladder_coefficient(basis.twice_j(), twice_m);

    // r even: e^{i r Az m T}; r odd: e^{i (r Az m T - Bz T)}; both r >= 0
    const Complex even_step = std::polar(1.0, 2.0 * params.a_z * m * t);
    Complex down_sum = geometric_sum(even_step, p);
    const Complex odd_base = std::polar(1.0, params.a_z * m * t - params.b_z * t);
    down_sum += odd_base * geometric_sum(even_step, p);

    // r = 0..2p-1 of e^{ -/+ i r Az T / 2 }
    const Complex plus_sum = geometric_sum(std::polar(1.0, -params.a_z * t / 2.0), n_cycles);
    const Complex minus_sum = geometric_sum(std::polar(1.0, params.a_z * t / 2.0), n_cycles);

    const Complex conv = kick_phase(basis.twice_j(), n_cycles);
    const Complex zeroth = std::polar(1.0, -double(p) * params.a_z * m * t);
    const Complex first_pref = conv * (imag_unit * theta / 2.0) * zeroth;

    std::vector<OracleAmplitude> amps;
    amps.push_back({{twice_m, Spin::up}, conv * zeroth});
    amps.push_back({{twice_m, Spin::down}, first_pref * down_sum});
    if (twice_m + 2 <= basis.twice_j())
        amps.push_back({{twice_m + 2, Spin::up}, first_pref * alpha.alpha_plus * plus_sum});
    if (twice_m - 2 >= -basis.twice_j())
        amps.push_back({{twice_m - 2, Spin::up}, first_pref * alpha.alpha_minus * minus_sum});
    return amps;
}

namespace {

struct XxTrig {
    double c = 1.0;
    double s = 0.0;
};

// C_m = cos(A T alpha_m^0), S_m = sin(A T alpha_m^0) on the largest sector
XxTrig xx_trig(const ModelParams& params, const SectorBasis& basis, int twice_m) {
    const double angle =
        params.a_xy * params.period() * ladder_alpha(basis.twice_j(), twice_m);
    return {std::cos(angle), std::sin(angle)};
}

void require_xx(const ModelParams& params, const char* who) {
    if (params.a_z != 0.0 || params.b_z != 0.0 || params.b_nz != 0.0)
        throw std::invalid_argument(std::string(who) +
                                    ": requires a_z = 0, b_z = 0, b_nz = 0");
    params.validate();
}

}  // namespace

XxAmplitudes xx_exact(int twice_m, std::int64_t n_cycles, const ModelParams& params,
                      const SectorBasis& basis) {
    require_xx(params, "xx_exact");
    require_largest_sector(basis, "xx_exact");
    if (n_cycles < 0) throw std::invalid_argument("xx_exact: negative cycle count");
    if (!basis.holds(twice_m)) throw std::invalid_argument("xx_exact: 2m not in sector");

    const XxTrig trig = xx_trig(params, basis, twice_m);
    const Complex beta2{trig.c * trig.c - trig.s * trig.s, 0.0};
    const Complex gamma2 = -imag_unit * 2.0 * trig.c * trig.s;

    Complex beta{1.0, 0.0};
    Complex gamma{0.0, 0.0};
    for (std::int64_t k = 0; k < n_cycles / 2; ++k) {
        const Complex b = beta * beta2 + gamma * gamma2;
        const Complex g = beta * gamma2 + gamma * beta2;
        beta = b;
        gamma = g;
    }
    if (n_cycles % 2 == 1) {
        const Complex b = beta * trig.c - imag_unit * gamma * trig.s;
        const Complex g = gamma * trig.c - imag_unit * beta * trig.s;
        beta = b;
        gamma = g;
    }

    const Complex conv = kick_phase(basis.twice_j(), n_cycles);
    XxAmplitudes out;
    out.beta = conv * beta;
    out.gamma = conv * gamma;
    if (n_cycles % 2 == 0) {
        out.beta_label = {twice_m, Spin::up};
        out.gamma_label = {twice_m + 2, Spin::down};
    } else {
        out.beta_label = {-twice_m, Spin::down};
        out.gamma_label = {-twice_m - 2, Spin::up};
    }
    return out;
}

std::vector<OracleAmplitude> xx_two_cycle_first_order(int twice_m, double theta,
                                                      const ModelParams& params,
                                                      const SectorBasis& basis) {
    require_xx(params, "xx_two_cycle_first_order");
    require_largest_sector(basis, "xx_two_cycle_first_order");
    if (!basis.holds(twice_m))
        throw std::invalid_argument("xx_two_cycle_first_order: 2m not in sector");

    const int twice_j = basis.twice_j();
    const XxTrig tm = xx_trig(params, basis, twice_m);
    const XxTrig tm_minus = xx_trig(params, basis, twice_m - 2);
    const XxTrig tm_plus = xx_trig(params, basis, twice_m + 2);
    const double am = ladder_alpha(twice_j, twice_m);
    const double am_minus = ladder_alpha(twice_j, twice_m - 2);
    const double am_plus = ladder_alpha(twice_j, twice_m + 2);

    // zeroth order: U_F^2 |m up> = (C^2 - S^2)|m up> - 2i S C |m+1 down>
    const Complex g_up{tm.c * tm.c - tm.s * tm.s, 0.0};
    const Complex g_down1 = -imag_unit * 2.0 * tm.s * tm.c;

    // first-order bracket [P U_F^2 + U_F P U_F] |m up>, collected per label
    const Complex g_m_down = g_up - imag_unit * 2.0 * tm.s * tm.c * am +
                             tm.c * (Complex(tm_minus.c, 0.0) -
                                     imag_unit * tm_minus.s * am_minus) -
                             imag_unit * tm.s * tm_minus.c * am;
    const Complex g_m_minus_up = g_up * am_minus + tm.c * tm_minus.c * am_minus -
                                 imag_unit * tm.c * tm_minus.s -
                                 tm.s * tm_minus.s * am;
    const Complex g_m_plus_up = g_up * am - imag_unit * 2.0 * tm.s * tm.c +
                                tm.c * tm_plus.c * am - tm.s * tm_plus.s * am_plus -
                                imag_unit * tm.s * tm_plus.c;
    const Complex g_m_plus2_down = -imag_unit * 2.0 * tm.s * tm.c * am_plus -
                                   imag_unit * tm.c * tm_plus.s * am -
                                   imag_unit * tm.s * tm_plus.c * am_plus -
                                   tm.s * tm_plus.s;

    const Complex conv = kick_phase(twice_j, 2);
    const Complex first_pref = conv * imag_unit * theta / 2.0;

    std::vector<OracleAmplitude> amps;
    amps.push_back({{twice_m, Spin::up}, conv * g_up});
    if (twice_m + 2 <= twice_j)
        amps.push_back({{twice_m + 2, Spin::down}, conv * g_down1});
    amps.push_back({{twice_m, Spin::down}, first_pref * g_m_down});
    if (twice_m - 2 >= -twice_j)
        amps.push_back({{twice_m - 2, Spin::up}, first_pref * g_m_minus_up});
    if (twice_m + 2 <= twice_j)
        amps.push_back({{twice_m + 2, Spin::up}, first_pref * g_m_plus_up});
    if (twice_m + 4 <= twice_j)
        amps.push_back({{twice_m + 4, Spin::down}, first_pref * g_m_plus2_down});
    return amps;
}

}  // namespace spinfloq
