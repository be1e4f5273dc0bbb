// states.hpp — Constructors for every state the simulations start from or
// project onto: Fock coherent states, spin coherent states over the Dicke
// ladder, two-qubit states, attractor states, basin-of-attraction states

#pragma once

#include "qcr/types.hpp"

namespace qcr::states {

// Two-qubit amplitudes in the fixed ordering |ee>, |eg>, |ge>, |gg>.
struct TwoQubitState {
    Complex c_ee{0.0};
    Complex c_eg{0.0};
    Complex c_ge{0.0};
    Complex c_gg{0.0};

    Vector amplitudes() const;
    double norm() const;
};

// Coherent state of a bosonic mode, truncated at n_max photons.
// alpha = sqrt(n_bar) e^{-i theta}; amplitude_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!).
struct FockCoherent {
    Complex alpha;
    int n_max;
    Vector amplitudes;   // length n_max + 1
};

// Truncation default: ceil(n_bar + 10 sqrt(n_bar)), never below 16.
int default_fock_truncation(double n_bar);

// Throws numerical_error when the truncated norm falls short of 1 - 1e-12,
// naming the n_max that would suffice.
FockCoherent coherent_fock_amplitudes(Complex alpha, int n_max);

// Spin coherent state of N spin-1/2 particles expanded over the symmetric
// Dicke ladder |N/2, n - N/2>, n = 0..N. zeta = |zeta| e^{-i phi}.
// C_n = (1 + |zeta|^2/N)^{-N/2} sqrt(N choose n) (zeta/sqrt(N))^n,
// accumulated in log space so large N never overflows.
struct SpinCoherent {
    Complex zeta;
    int n_spins;
    Vector amplitudes;   // length n_spins + 1
};

SpinCoherent spin_coherent_amplitudes(Complex zeta, int n_spins);

// (1/sqrt(2)) (e^{-i theta} |e> +/- i |g>); sign must be +1 or -1.
Eigen::Vector2cd single_qubit_attractor(int sign, double theta);

// (1/2) (e^{-2i phase} |ee> +/- i e^{-i phase} (|eg> + |ge>) - |gg>)
TwoQubitState two_qubit_attractor(int sign, double phase);

// a (e^{-i theta} |ee> + e^{i theta} |gg>) + sqrt(1/2 - |a|^2) (|eg> + |ge>),
// defined for |a| <= 1/sqrt(2).
TwoQubitState basin_state(Complex a, double theta);

} // namespace qcr::states
