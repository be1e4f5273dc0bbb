#include "qcr/measures.hpp"

#include "qcr/errors.hpp"
#include "qcr/linalg.hpp"
#include "qcr/states.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qcr::measures {
namespace {

constexpr double kDensityNegativeTol = 1e-8;
// Eigenvalues of the Hermitian sandwich at the eigensolver noise floor are
// exact zeros of the pure-state case; without the cut each one would
// contribute sqrt(noise) ~ 1e-8 to the concurrence sum.
constexpr double kSpectrumNoiseFloor = 1e-13;

const Matrix& spin_flip_kernel() {
    // sigma_y (x) sigma_y: anti-diagonal (-1, 1, 1, -1) in |ee>,|eg>,|ge>,|gg>
    static const Matrix yy = [] {
        Matrix m = Matrix::Zero(4, 4);
        m(0, 3) = -1.0;
        m(1, 2) = 1.0;
        m(2, 1) = 1.0;
        m(3, 0) = -1.0;
        return m;
    }();
    return yy;
}

void require_two_qubit_density(const Matrix& rho, const char* who) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        std::ostringstream msg;
        msg << who << ": expected a 4x4 density matrix, got "
            << rho.rows() << "x" << rho.cols();
        throw std::invalid_argument(msg.str());
    }
}

} // namespace

Matrix reduced_two_qubit_density(const Vector& psi, const dynamics::HilbertSpec& spec) {
    if (spec.m_q != 2) {
        throw std::invalid_argument("reduced_two_qubit_density: spec must describe two qubits");
    }
    if (psi.size() != spec.total_dim()) {
        std::ostringstream msg;
        msg << "reduced_two_qubit_density: state has dimension " << psi.size()
            << " but the space has " << spec.total_dim();
        throw std::invalid_argument(msg.str());
    }
    using RowMajorMap = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic,
                                                       Eigen::Dynamic, Eigen::RowMajor>>;
    RowMajorMap block(psi.data(), 4, spec.mode_dim);
    return block * block.adjoint();
}

double linear_entropy(const Matrix& rho) {
    if (rho.rows() != rho.cols()) {
        throw std::invalid_argument("linear_entropy: density matrix must be square");
    }
    return 1.0 - (rho * rho).trace().real();
}

ConcurrenceResult concurrence_and_tangle(const Matrix& rho) {
    require_two_qubit_density(rho, "concurrence_and_tangle");
    const Matrix& yy = spin_flip_kernel();
    const Matrix root = linalg::hermitian_sqrt(rho, kDensityNegativeTol);
    const Matrix flipped = yy * rho.conjugate() * yy;
    Matrix sandwich = root * flipped * root;
    sandwich = 0.5 * (sandwich + sandwich.adjoint().eval());

    RealVector mu = linalg::hermitian_eigenvalues(sandwich);
    const double floor = kSpectrumNoiseFloor * std::max(1.0, mu.cwiseAbs().maxCoeff());
    std::array<double, 4> lam{};
    for (Eigen::Index k = 0; k < 4; ++k) {
        lam[static_cast<std::size_t>(k)] = mu(k) > floor ? std::sqrt(mu(k)) : 0.0;
    }
    std::sort(lam.begin(), lam.end(), std::greater<>());
    const double c = std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
    return ConcurrenceResult{c, c * c};
}

double p_ee(const Matrix& rho) {
    require_two_qubit_density(rho, "p_ee");
    return rho(0, 0).real();
}

double attractor_probability(const Matrix& rho, int sign, double phase) {
    require_two_qubit_density(rho, "attractor_probability");
    const Vector att = states::two_qubit_attractor(sign, phase).amplitudes();
    return (att.adjoint() * rho * att)(0, 0).real();
}

double basin_tangle(Complex a) {
    if (std::abs(a) > 1.0 / std::numbers::sqrt2 + 1e-12) {
        throw std::domain_error("basin_tangle: |a| exceeds 1/sqrt(2)");
    }
    const Vector psi = states::basin_state(a, 0.0).amplitudes();
    const Matrix rho = psi * psi.adjoint();
    return concurrence_and_tangle(rho).tangle;
}

DiagnosticsRecord diagnostics(double t, const Matrix& rho_q, double attractor_phase) {
    DiagnosticsRecord rec;
    rec.t = t;
    rec.p_ee = p_ee(rho_q);
    rec.s_lin = linear_entropy(rho_q);
    const ConcurrenceResult ct = concurrence_and_tangle(rho_q);
    rec.concurrence = ct.concurrence;
    rec.tangle = ct.tangle;
    rec.p_att_plus = attractor_probability(rho_q, +1, attractor_phase);
    rec.p_att_minus = attractor_probability(rho_q, -1, attractor_phase);
    return rec;
}

std::vector<BasinSample> basin_scan(int r_steps, int chi_steps) {
    if (r_steps < 2 || chi_steps < 1) {
        throw std::domain_error("basin_scan: need r_steps >= 2 and chi_steps >= 1");
    }
    std::vector<BasinSample> out;
    out.reserve(static_cast<std::size_t>(r_steps) * static_cast<std::size_t>(chi_steps));
    for (int i = 0; i < r_steps; ++i) {
        const double r_sq = 0.5 * static_cast<double>(i) / (r_steps - 1);
        const double r = std::sqrt(r_sq);
        for (int j = 0; j < chi_steps; ++j) {
            const double chi = 2.0 * std::numbers::pi * j / chi_steps;
            const Complex a = r * Complex{std::cos(chi), std::sin(chi)};
            out.push_back(BasinSample{r, chi, a, basin_tangle(a)});
        }
    }
    return out;
}

} // namespace qcr::measures
