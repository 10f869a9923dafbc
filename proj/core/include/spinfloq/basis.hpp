// basis.hpp — symmetry-sector basis |m_j sigma> of the collective satellite
// spin plus the central spin-1/2.
//
// Quantum numbers are stored doubled (2j, 2m) so half-integer spins stay in
// exact integer arithmetic. Flat ordering: decreasing 2m, and within equal
// 2m the central spin up state precedes down.

#pragma once

#include "spinfloq/types.hpp"

#include <stdexcept>
#include <string>

namespace spinfloq {

enum class Spin : int { up = 0, down = 1 };

inline Spin flip(Spin s) { return s == Spin::up ? Spin::down : Spin::up; }
inline double spin_sign(Spin s) { return s == Spin::up ? 1.0 : -1.0; }

struct BasisLabel {
    int twice_m = 0;
    Spin sigma = Spin::up;
    bool operator==(const BasisLabel&) const = default;
};

class SectorBasis {
  public:
    SectorBasis(int n_satellites, int twice_j)
        : n_satellites_(n_satellites), twice_j_(twice_j) {
        if (n_satellites < 1)
            throw std::invalid_argument("SectorBasis: need at least one satellite spin");
        if (twice_j < 0)
            throw std::invalid_argument("SectorBasis: 2j must be nonnegative");
        if (twice_j > n_satellites)
            throw std::invalid_argument("SectorBasis: 2j exceeds satellite count");
        if ((twice_j - n_satellites) % 2 != 0)
            throw std::invalid_argument("SectorBasis: 2j must have the parity of N");
    }

    int n_satellites() const { return n_satellites_; }
    int twice_j() const { return twice_j_; }
    Index dim() const { return 2 * (twice_j_ + 1); }
    Index satellite_dim() const { return twice_j_ + 1; }

    bool holds(int twice_m) const {
        return twice_m >= -twice_j_ && twice_m <= twice_j_ &&
               (twice_j_ - twice_m) % 2 == 0;
    }

    Index index_of(int twice_m, Spin sigma) const {
        if (!holds(twice_m))
            throw std::invalid_argument("SectorBasis: 2m = " + std::to_string(twice_m) +
                                        " not in sector 2j = " + std::to_string(twice_j_));
        return (twice_j_ - twice_m) + static_cast<int>(sigma);
    }
    Index index_of(const BasisLabel& l) const { return index_of(l.twice_m, l.sigma); }

    BasisLabel label_of(Index flat) const {
        if (flat < 0 || flat >= dim())
            throw std::invalid_argument("SectorBasis: flat index out of range");
        const int k = static_cast<int>(flat / 2);
        return {twice_j_ - 2 * k, flat % 2 == 0 ? Spin::up : Spin::down};
    }

    // index into the (2j+1)-dim satellite-only space, same decreasing-m order
    Index satellite_index_of(int twice_m) const {
        if (!holds(twice_m))
            throw std::invalid_argument("SectorBasis: 2m not in sector");
        return (twice_j_ - twice_m) / 2;
    }

    bool operator==(const SectorBasis&) const = default;

  private:
    int n_satellites_;
    int twice_j_;
};

inline SectorBasis build_sector(int n_satellites, int twice_j) {
    return SectorBasis(n_satellites, twice_j);
}

// largest sector j = N/2 used throughout the analyses
inline SectorBasis build_largest_sector(int n_satellites) {
    return SectorBasis(n_satellites, n_satellites);
}

inline std::string label_string(const BasisLabel& l) {
    return "m" + std::to_string(l.twice_m) + (l.sigma == Spin::up ? "_u" : "_d");
}

}  // namespace spinfloq
