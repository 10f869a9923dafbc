// types.hpp — shared scalar/matrix aliases and the numerical-failure exception

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace spinfloq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Thrown when a linear-algebra routine fails to meet its residual contract
// (as opposed to invalid_argument, which flags bad inputs).
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr const char* version_string = "0.1.0";

}  // namespace spinfloq
