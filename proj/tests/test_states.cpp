#include "qcr/states.hpp"

#include "qcr/errors.hpp"
#include "qcr/linalg.hpp"

#include "doctest.h"

#include <bit>
#include <cmath>
#include <random>
#include <string>

using namespace qcr;

namespace {

double binom(int n, int k) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(n - k + 1.0) - std::lgamma(k + 1.0));
}

// Explicit N-spin product state (|e> amplitude c, |g> amplitude 1, normalised)
// over the full 2^N space; spin 0 slowest, bit set means |g>.
Vector product_state(Complex c, int n) {
    const double single_norm = std::sqrt(1.0 + std::norm(c));
    Vector out(Eigen::Index{1} << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const int excited = n - std::popcount(mask);
        out(mask) = std::pow(c, excited);
    }
    return out / std::pow(single_norm, n);
}

// Projection of a full-space state onto the normalised Dicke state with
// n_exc excited spins: sum over all bitmasks of that weight / sqrt(count).
Complex dicke_overlap(const Vector& psi, int n, int n_exc) {
    Complex acc = 0.0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (n - std::popcount(mask) == n_exc) {
            acc += psi(mask);
        }
    }
    return acc / std::sqrt(binom(n, n_exc));
}

} // namespace

TEST_SUITE("states") {

TEST_CASE("vacuum coherent state is (1, 0, ..., 0)") {
    const auto fock = states::coherent_fock_amplitudes(0.0, 8);
    CHECK(fock.amplitudes(0) == Complex{1.0});
    CHECK(fock.amplitudes.tail(8).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("coherent ground amplitude is e^{-|alpha|^2/2}") {
    const auto fock = states::coherent_fock_amplitudes(6.0, 96);
    CHECK(std::abs(fock.amplitudes(0)) == doctest::Approx(std::exp(-18.0)).epsilon(1e-13));
}

TEST_CASE("default truncation keeps the Poisson tail below 1e-12") {
    const int n_max = states::default_fock_truncation(36.0);
    CHECK(n_max == 96);
    const auto fock = states::coherent_fock_amplitudes(6.0, n_max);
    double acc = 0.0;
    for (int n = n_max; n >= 0; --n) {   // small terms first
        acc += std::norm(fock.amplitudes(n));
    }
    CHECK(acc >= 1.0 - 1e-12);
}

TEST_CASE("under-truncated coherent state names the n_max it needs") {
    try {
        (void)states::coherent_fock_amplitudes(6.0, 40);
        FAIL("expected a truncation error");
    } catch (const numerical_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("n_max") != std::string::npos);
        CHECK(msg.find("deficit") != std::string::npos);
    }
}

TEST_CASE("coherent phase convention alpha = sqrt(n_bar) e^{-i theta}") {
    const double theta = 0.9;
    const Complex alpha = std::polar(3.0, -theta);
    const auto fock = states::coherent_fock_amplitudes(alpha, 40);
    // amplitude_n phase is -n theta
    CHECK(std::arg(fock.amplitudes(1)) == doctest::Approx(-theta));
    CHECK(std::arg(fock.amplitudes(2) / fock.amplitudes(1)) == doctest::Approx(-theta));
}

TEST_CASE("spin coherent state at zeta = 0 is the lowest Dicke state") {
    const auto spin = states::spin_coherent_amplitudes(0.0, 20);
    CHECK(spin.amplitudes(0) == Complex{1.0});
    CHECK(spin.amplitudes.tail(20).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spin coherent C_0 matches the closed form (7/6)^{-75}") {
    // direct evaluation of the normalisation prefactor at N=150, |zeta|^2=25
    const auto spin = states::spin_coherent_amplitudes(5.0, 150);
    const double expected = std::pow(7.0 / 6.0, -75.0);
    CHECK(std::abs(spin.amplitudes(0)) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(9.5277593149638e-06).epsilon(1e-10));
}

TEST_CASE("spin coherent amplitudes are normalised for any zeta and N") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> mag(0.0, 8.0), ph(0.0, 6.28);
    for (int n : {1, 2, 7, 40, 150, 1000, 10000}) {
        const Complex zeta = std::polar(mag(rng), -ph(rng));
        const auto spin = states::spin_coherent_amplitudes(zeta, n);
        double acc = 0.0;
        for (int k = n; k >= 0; --k) {
            acc += std::norm(spin.amplitudes(k));
        }
        CHECK(std::abs(acc - 1.0) < 1e-12);
    }
}

TEST_CASE("spin coherent state equals the N-fold single-spin product") {
    // oracle: explicit 2^N tensor construction projected onto each Dicke state
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> mag(0.2, 4.0), ph(0.0, 6.28);
    for (int n = 1; n <= 12; ++n) {
        const Complex zeta = std::polar(mag(rng), -ph(rng));
        const Complex c = zeta / std::sqrt(static_cast<double>(n));
        const Vector full = product_state(c, n);
        const auto spin = states::spin_coherent_amplitudes(zeta, n);
        double projected = 0.0;
        for (int k = 0; k <= n; ++k) {
            const Complex overlap = dicke_overlap(full, n, k);
            projected += std::norm(overlap);
            CHECK(std::abs(overlap - spin.amplitudes(k)) < 1e-12);
        }
        // the product state lies entirely in the symmetric subspace
        CHECK(std::abs(projected - 1.0) < 1e-12);
    }
}

TEST_CASE("large-N spin coherent amplitudes approach the Fock coherent ones") {
    const int n_spins = 10000;
    const auto spin = states::spin_coherent_amplitudes(5.0, n_spins);
    const auto fock = states::coherent_fock_amplitudes(5.0, 60);
    double max_dev = 0.0;
    for (int n = 0; n <= 50; ++n) {
        max_dev = std::max(max_dev, std::abs(spin.amplitudes(n) - fock.amplitudes(n)));
    }
    CHECK(max_dev < 1e-2);
}

TEST_CASE("two-qubit attractor at phase 0 is (1/2)(1, i, i, -1)") {
    const auto att = states::two_qubit_attractor(+1, 0.0);
    CHECK(std::abs(att.c_ee - Complex{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(att.c_eg - Complex{0.0, 0.5}) < 1e-15);
    CHECK(std::abs(att.c_ge - Complex{0.0, 0.5}) < 1e-15);
    CHECK(std::abs(att.c_gg - Complex{-0.5, 0.0}) < 1e-15);
}

TEST_CASE("the two attractor signs are orthogonal") {
    for (double phase : {0.0, 0.4, 2.9}) {
        const Vector plus = states::two_qubit_attractor(+1, phase).amplitudes();
        const Vector minus = states::two_qubit_attractor(-1, phase).amplitudes();
        CHECK(std::abs(plus.adjoint().dot(minus)) < 1e-15);
        CHECK(std::abs(plus.norm() - 1.0) < 1e-15);
        const auto single_p = states::single_qubit_attractor(+1, phase);
        const auto single_m = states::single_qubit_attractor(-1, phase);
        CHECK(std::abs(single_p.adjoint().dot(single_m)) < 1e-15);
    }
}

TEST_CASE("two-qubit attractor is the square of the single-qubit one") {
    // 4-amplitude expansion of the tensor product, both signs, random phases
    for (double phase : {0.0, 1.234, 4.2}) {
        for (int sign : {+1, -1}) {
            const auto single = states::single_qubit_attractor(sign, phase);
            Vector tensored(4);
            tensored << single(0) * single(0), single(0) * single(1),
                        single(1) * single(0), single(1) * single(1);
            const Vector direct = states::two_qubit_attractor(sign, phase).amplitudes();
            CHECK((tensored - direct).cwiseAbs().maxCoeff() < 1e-15);
        }
    }
}

TEST_CASE("attractor sign must be +1 or -1") {
    CHECK_THROWS_AS(states::two_qubit_attractor(0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(states::single_qubit_attractor(2, 0.0), std::invalid_argument);
}

TEST_CASE("basin state endpoints") {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const auto bell = states::basin_state(inv_sqrt2, 0.0);
    CHECK(std::abs(bell.c_ee - Complex{inv_sqrt2}) < 1e-12);
    CHECK(std::abs(bell.c_gg - Complex{inv_sqrt2}) < 1e-12);
    CHECK(std::abs(bell.c_eg) < 1e-12);

    const auto middle = states::basin_state(0.0, 0.0);
    CHECK(std::abs(middle.c_eg - Complex{inv_sqrt2}) < 1e-15);
    CHECK(std::abs(middle.c_ge - Complex{inv_sqrt2}) < 1e-15);
    CHECK(std::abs(middle.c_ee) == 0.0);
}

TEST_CASE("basin state rejects |a| beyond 1/sqrt(2)") {
    CHECK_THROWS_AS(states::basin_state(0.8, 0.0), std::domain_error);
}

TEST_CASE("every constructed state has unit norm") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> mag(0.0, 1.0 / std::sqrt(2.0));
    std::uniform_real_distribution<double> ph(0.0, 6.28);
    for (int round = 0; round < 50; ++round) {
        const Complex a = std::polar(mag(rng), ph(rng));
        CHECK(std::abs(states::basin_state(a, ph(rng)).norm() - 1.0) < 1e-9);
        const int sign = round % 2 == 0 ? 1 : -1;
        CHECK(std::abs(states::two_qubit_attractor(sign, ph(rng)).norm() - 1.0) < 1e-9);
        CHECK(std::abs(states::single_qubit_attractor(sign, ph(rng)).norm() - 1.0) < 1e-9);
    }
}

} // TEST_SUITE
