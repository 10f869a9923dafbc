// state.hpp — normalized state vectors over a sector basis and the
// initial-state grammar shared by the analyses and the CLI.

#pragma once

#include "spinfloq/basis.hpp"
#include "spinfloq/types.hpp"

#include <stdexcept>
#include <string>

namespace spinfloq {

struct StateVector {
    SectorBasis basis;
    Vector amplitudes;

    StateVector(SectorBasis b, Vector amps) : basis(b), amplitudes(std::move(amps)) {
        if (amplitudes.size() != basis.dim())
            throw std::invalid_argument("StateVector: amplitude length != sector dim");
        if (std::abs(amplitudes.norm() - 1.0) > 1e-10)
            throw std::invalid_argument("StateVector: norm deviates from 1 by more than 1e-10");
    }
};

inline StateVector basis_state(const SectorBasis& basis, int twice_m, Spin sigma) {
    Vector v = Vector::Zero(basis.dim());
    v[basis.index_of(twice_m, sigma)] = 1.0;
    return StateVector(basis, std::move(v));
}

// Initial-state spec: |J sigma> or |m sigma> by doubled quantum number.
struct InitialState {
    enum class Kind { j_up, j_down, m_state } kind = Kind::j_up;
    int twice_m = 0;       // for m_state
    Spin sigma = Spin::up; // for m_state

    StateVector realize(const SectorBasis& basis) const {
        switch (kind) {
            case Kind::j_up: return basis_state(basis, basis.twice_j(), Spin::up);
            case Kind::j_down: return basis_state(basis, basis.twice_j(), Spin::down);
            case Kind::m_state: return basis_state(basis, twice_m, sigma);
        }
        throw std::invalid_argument("InitialState: bad kind");
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::j_up: return "J-up";
            case Kind::j_down: return "J-down";
            case Kind::m_state:
                return "m:" + std::to_string(twice_m) + "," +
                       (sigma == Spin::up ? "up" : "down");
        }
        return "?";
    }
};

// Parses "J-up", "J-down", "m:<twice_m>,<up|down>".
inline InitialState parse_initial_state(const std::string& text) {
    if (text == "J-up") return {InitialState::Kind::j_up, 0, Spin::up};
    if (text == "J-down") return {InitialState::Kind::j_down, 0, Spin::up};
    if (text.rfind("m:", 0) == 0) {
        const auto comma = text.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("initial state: expected m:<twice_m>,<up|down>");
        InitialState s;
        s.kind = InitialState::Kind::m_state;
        s.twice_m = std::stoi(text.substr(2, comma - 2));
        const std::string spin = text.substr(comma + 1);
        if (spin == "up") s.sigma = Spin::up;
        else if (spin == "down") s.sigma = Spin::down;
        else throw std::invalid_argument("initial state: spin must be up or down");
        return s;
    }
    throw std::invalid_argument("initial state: unrecognized spec '" + text + "'");
}

}  // namespace spinfloq
