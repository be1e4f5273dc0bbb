// revival.hpp — Closed-form collapse/revival time estimates used to place
// attractor instants, revival search windows and simulation horizons

#pragma once

namespace qcr::revival {

struct RevivalEstimate {
    double t_collapse{0.0};
    double t_revival{0.0};
    double t_attractor{0.0};          // t_revival / 4
    double t_second_attractor{0.0};   // 3 t_revival / 4
    // The composite-spin case reuses the field collapse heuristic 2/lambda.
    bool collapse_is_heuristic{false};
};

// t_c = 2/lambda, t_r = 2 pi sqrt(n_bar) / lambda.
RevivalEstimate field_revival_estimate(double n_bar, double lambda);

// Composite-spin revival time with all finite-N correction terms:
//   t_r = 2 pi sqrt(N z / (N + z)) / (lambda D),  z = |zeta|^2,
//   D = 1 - 3z/(2(N+z)) - (N+z)/(Nz)
//       + (z/(4 N^2)) (N(z-1) + z(N-1)) / (N+z)^2.
// Throws numerical_error when D <= 0 (pathologically small z).
RevivalEstimate spin_revival_estimate(double zeta_sq, int n_spins, double lambda);

} // namespace qcr::revival
