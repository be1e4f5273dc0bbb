// measures.hpp — Two-qubit diagnostics: reduced density matrix, linear
// entropy, Wootters concurrence and tangle, P_ee, attractor-state
// probabilities, and the basin-of-attraction tangle surface

#pragma once

#include "qcr/dynamics.hpp"
#include "qcr/types.hpp"

#include <vector>

namespace qcr::measures {

// rho_q(t): trace out the mode/ladder factor of a pure state. Never
// materialises the full density matrix.
Matrix reduced_two_qubit_density(const Vector& psi, const dynamics::HilbertSpec& spec);

// S^L = 1 - Tr(rho^2); in [0, 3/4] for a two-qubit state.
double linear_entropy(const Matrix& rho);

struct ConcurrenceResult {
    double concurrence;
    double tangle;   // always concurrence^2
};

// Wootters procedure. The spectrum of rho rho~ is obtained from the
// Hermitian sandwich sqrt(rho) rho~ sqrt(rho); eigenvalues of rho below
// -1e-8 reject the input, values in [-1e-8, 0) count as zero.
ConcurrenceResult concurrence_and_tangle(const Matrix& rho);

// <ee| rho |ee>
double p_ee(const Matrix& rho);

// <psi_att(sign, phase)| rho |psi_att(sign, phase)>
double attractor_probability(const Matrix& rho, int sign, double phase);

// Pure-state tangle of basin_state(a, 0); domain |a| <= 1/sqrt(2).
double basin_tangle(Complex a);

// One row of every time-series the scenarios emit.
struct DiagnosticsRecord {
    double t{0.0};
    double p_ee{0.0};
    double s_lin{0.0};
    double tangle{0.0};
    double concurrence{0.0};
    double p_att_plus{0.0};
    double p_att_minus{0.0};
};

// Evaluates the full record. `attractor_phase` is the phase the attractor
// projectors are rotated by at this instant (theta + omega t at resonance,
// so the overlap tracks the frame the attractors are stationary in).
DiagnosticsRecord diagnostics(double t, const Matrix& rho_q, double attractor_phase);

// Basin-of-attraction scan sample.
struct BasinSample {
    double r{0.0};
    double chi{0.0};
    Complex a{0.0};
    double tangle{0.0};
};

// Grid over a = r e^{i chi}: r^2 uniform on [0, 1/2] (r_steps points, so
// both tangle zeros at a = +-1/2 and both tangle-1 anchors at r = 0 and
// r = 1/sqrt(2) land exactly on grid nodes), chi uniform on [0, 2pi).
std::vector<BasinSample> basin_scan(int r_steps, int chi_steps);

} // namespace qcr::measures
