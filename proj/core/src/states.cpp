#include "qcr/states.hpp"

#include "qcr/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcr::states {
namespace {

constexpr double kTruncationTol = 1e-12;
constexpr double kInvSqrt2 = 0.70710678118654752440;

int required_truncation(Complex alpha) {
    // Walk the recurrence until the cumulative norm clears the tolerance.
    const double target = 1.0 - kTruncationTol;
    Complex amp = std::exp(-0.5 * std::norm(alpha));
    double acc = std::norm(amp);
    int n = 0;
    const int cap = 16 * 1024;
    while (acc < target && n < cap) {
        amp *= alpha / std::sqrt(static_cast<double>(n + 1));
        acc += std::norm(amp);
        ++n;
    }
    return n;
}

} // namespace

Vector TwoQubitState::amplitudes() const {
    Vector v(4);
    v << c_ee, c_eg, c_ge, c_gg;
    return v;
}

double TwoQubitState::norm() const {
    return std::sqrt(std::norm(c_ee) + std::norm(c_eg) + std::norm(c_ge) + std::norm(c_gg));
}

int default_fock_truncation(double n_bar) {
    if (n_bar < 0.0) {
        throw std::domain_error("default_fock_truncation: n_bar must be non-negative");
    }
    const int n = static_cast<int>(std::ceil(n_bar + 10.0 * std::sqrt(n_bar)));
    return n < 16 ? 16 : n;
}

FockCoherent coherent_fock_amplitudes(Complex alpha, int n_max) {
    if (n_max < 1) {
        throw std::domain_error("coherent_fock_amplitudes: n_max must be >= 1");
    }
    Vector amps(n_max + 1);
    amps(0) = std::exp(-0.5 * std::norm(alpha));
    // amplitude_{n+1} = amplitude_n * alpha / sqrt(n+1)
    for (int n = 0; n < n_max; ++n) {
        amps(n + 1) = amps(n) * alpha / std::sqrt(static_cast<double>(n + 1));
    }
    double acc = 0.0, comp = 0.0;  // Kahan
    for (int n = 0; n <= n_max; ++n) {
        const double term = std::norm(amps(n)) - comp;
        const double next = acc + term;
        comp = (next - acc) - term;
        acc = next;
    }
    if (acc < 1.0 - kTruncationTol) {
        std::ostringstream msg;
        msg << "coherent_fock_amplitudes: truncation at n_max=" << n_max
            << " leaves norm deficit " << 1.0 - acc
            << "; n_max >= " << required_truncation(alpha) << " is needed";
        throw numerical_error(msg.str());
    }
    return FockCoherent{alpha, n_max, std::move(amps)};
}

SpinCoherent spin_coherent_amplitudes(Complex zeta, int n_spins) {
    if (n_spins < 1) {
        throw std::domain_error("spin_coherent_amplitudes: n_spins must be >= 1");
    }
    const int N = n_spins;
    Vector amps = Vector::Zero(N + 1);
    const double mag = std::abs(zeta);
    if (mag == 0.0) {
        amps(0) = 1.0;   // Dicke ground state |N/2, -N/2>
        return SpinCoherent{zeta, N, std::move(amps)};
    }
    const double arg = std::arg(zeta);
    const double log_prefactor = -0.5 * N * std::log1p(mag * mag / N);
    const double log_step = std::log(mag / std::sqrt(static_cast<double>(N)));
    const double lg_n1 = std::lgamma(static_cast<double>(N) + 1.0);
    for (int n = 0; n <= N; ++n) {
        const double log_binom = 0.5 * (lg_n1
                                        - std::lgamma(static_cast<double>(N - n) + 1.0)
                                        - std::lgamma(static_cast<double>(n) + 1.0));
        const double log_mag = log_prefactor + log_binom + n * log_step;
        amps(n) = std::polar(std::exp(log_mag), n * arg);
    }
    return SpinCoherent{zeta, N, std::move(amps)};
}

Eigen::Vector2cd single_qubit_attractor(int sign, double theta) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("single_qubit_attractor: sign must be +1 or -1");
    }
    Eigen::Vector2cd v;
    v << kInvSqrt2 * std::polar(1.0, -theta),
         kInvSqrt2 * static_cast<double>(sign) * kImag;
    return v;
}

TwoQubitState two_qubit_attractor(int sign, double phase) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("two_qubit_attractor: sign must be +1 or -1");
    }
    const Complex edge = 0.5 * std::polar(1.0, -2.0 * phase);
    const Complex mid = 0.5 * static_cast<double>(sign) * kImag * std::polar(1.0, -phase);
    return TwoQubitState{edge, mid, mid, Complex{-0.5, 0.0}};
}

TwoQubitState basin_state(Complex a, double theta) {
    const double mag = std::abs(a);
    if (mag > kInvSqrt2 + 1e-12) {
        std::ostringstream msg;
        msg << "basin_state: |a| = " << mag << " exceeds 1/sqrt(2)";
        throw std::domain_error(msg.str());
    }
    const double rest = std::sqrt(std::max(0.0, 0.5 - mag * mag));
    return TwoQubitState{a * std::polar(1.0, -theta),
                         Complex{rest, 0.0},
                         Complex{rest, 0.0},
                         a * std::polar(1.0, theta)};
}

} // namespace qcr::states
