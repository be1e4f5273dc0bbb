#include "qcr/revival.hpp"

#include "qcr/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qcr::revival {
namespace {

RevivalEstimate assemble(double t_collapse, double t_revival, bool heuristic) {
    return RevivalEstimate{t_collapse, t_revival, 0.25 * t_revival,
                           0.75 * t_revival, heuristic};
}

} // namespace

RevivalEstimate field_revival_estimate(double n_bar, double lambda) {
    if (!(n_bar > 0.0)) {
        throw std::domain_error("field_revival_estimate: n_bar must be positive");
    }
    if (!(lambda > 0.0)) {
        throw std::domain_error("field_revival_estimate: lambda must be positive");
    }
    const double t_r = 2.0 * std::numbers::pi * std::sqrt(n_bar) / lambda;
    return assemble(2.0 / lambda, t_r, false);
}

RevivalEstimate spin_revival_estimate(double zeta_sq, int n_spins, double lambda) {
    if (!(zeta_sq > 0.0)) {
        throw std::domain_error("spin_revival_estimate: |zeta|^2 must be positive");
    }
    if (n_spins < 1) {
        throw std::domain_error("spin_revival_estimate: n_spins must be >= 1");
    }
    if (!(lambda > 0.0)) {
        throw std::domain_error("spin_revival_estimate: lambda must be positive");
    }
    const double N = static_cast<double>(n_spins);
    const double z = zeta_sq;
    const double numerator = 2.0 * std::numbers::pi * std::sqrt(N * z / (N + z));
    const double denominator =
        1.0 - 3.0 * z / (2.0 * (N + z)) - (N + z) / (N * z)
        + (z / (4.0 * N * N)) * (N * (z - 1.0) + z * (N - 1.0)) / ((N + z) * (N + z));
    if (!(denominator > 0.0)) {
        std::ostringstream msg;
        msg << "spin_revival_estimate: correction denominator " << denominator
            << " is not positive for N=" << n_spins << ", |zeta|^2=" << zeta_sq
            << "; the estimate is invalid in this regime";
        throw numerical_error(msg.str());
    }
    return assemble(2.0 / lambda, numerator / (lambda * denominator), true);
}

} // namespace qcr::revival
