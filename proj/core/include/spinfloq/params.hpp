// params.hpp — physical parameters of the driven central-spin model.
// Energies and frequencies in MHz, times in µs, hbar = 1.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spinfloq {

enum class Interaction { ising, xx, heisenberg, xxz, none };

struct ModelParams {
    double a_xy = 0.0;    // transverse coupling, coefficient of It+ S0- + It- S0+
    double a_z = 0.0;     // longitudinal coupling, coefficient of Itz S0z
    double b_z = 0.0;     // central-spin Zeeman field
    double b_nz = 0.0;    // satellite Zeeman field (z component)
    double omega = 1.0;   // drive frequency; period T = 2*pi/omega
    double theta_e = 0.0; // central-spin pulse error, radians
    double theta_n = 0.0; // satellite pulse error, radians

    double period() const { return 2.0 * std::numbers::pi / omega; }

    void validate() const {
        if (!(omega > 0.0))
            throw std::invalid_argument("ModelParams: omega must be positive");
        if (!std::isfinite(a_xy) || !std::isfinite(a_z) || !std::isfinite(b_z) ||
            !std::isfinite(b_nz) || !std::isfinite(theta_e) || !std::isfinite(theta_n))
            throw std::invalid_argument("ModelParams: non-finite parameter");
    }

    Interaction interaction() const {
        if (a_xy == 0.0 && a_z == 0.0) return Interaction::none;
        if (a_xy == 0.0) return Interaction::ising;
        if (a_z == 0.0) return Interaction::xx;
        if (a_xy == a_z) return Interaction::heisenberg;
        return Interaction::xxz;
    }
};

inline std::string interaction_name(Interaction k) {
    switch (k) {
        case Interaction::ising: return "ising";
        case Interaction::xx: return "xx";
        case Interaction::heisenberg: return "heisenberg";
        case Interaction::xxz: return "xxz";
        case Interaction::none: return "none";
    }
    return "unknown";
}

}  // namespace spinfloq
