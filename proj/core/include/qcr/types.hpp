// types.hpp — Shared scalar/matrix aliases for the qcr library

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace qcr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kImag{0.0, 1.0};

} // namespace qcr
