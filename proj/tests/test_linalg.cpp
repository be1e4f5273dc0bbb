#include "qcr/linalg.hpp"

#include "qcr/errors.hpp"

#include "doctest.h"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>

using namespace qcr;
using linalg::Subsystem;

namespace {

Matrix identity2() { return Matrix::Identity(2, 2); }

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

Matrix sigma_plus() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;   // |e><g| in (e, g) ordering
    return m;
}

Matrix random_matrix(Eigen::Index n, std::mt19937& rng) {
    std::normal_distribution<double> dist;
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = Complex{dist(rng), dist(rng)};
        }
    }
    return m;
}

Matrix random_hermitian(Eigen::Index n, std::mt19937& rng) {
    const Matrix m = random_matrix(n, rng);
    return 0.5 * (m + m.adjoint().eval());
}

Vector random_state(Eigen::Index n, std::mt19937& rng) {
    std::normal_distribution<double> dist;
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = Complex{dist(rng), dist(rng)};
    }
    v.normalize();
    return v;
}

// Entries whose products are exact in binary floating point.
Matrix random_dyadic(Eigen::Index n, std::mt19937& rng) {
    static const double vals[] = {0.0, 1.0, -1.0, 0.5, -0.5, 2.0, -2.0, 0.25};
    std::uniform_int_distribution<int> pick(0, 7);
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = Complex{vals[pick(rng)], vals[pick(rng)]};
        }
    }
    return m;
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("kron of identities is the identity") {
    const Matrix i4 = linalg::kron(identity2(), identity2());
    CHECK((i4 - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kron basis convention: sigma_z (x) I has diagonal (1,1,-1,-1)") {
    const Matrix m = linalg::kron(pauli_z(), identity2());
    REQUIRE(m.rows() == 4);
    CHECK(m(0, 0) == Complex{1.0});
    CHECK(m(1, 1) == Complex{1.0});
    CHECK(m(2, 2) == Complex{-1.0});
    CHECK(m(3, 3) == Complex{-1.0});
    CHECK(m.cwiseAbs().sum() == doctest::Approx(4.0));
}

TEST_CASE("(sigma+ (x) I)(sigma- (x) I) equals |e><e| (x) I") {
    // oracle: direct 4x4 multiplication of the two embedded operators
    const Matrix sp = linalg::kron(sigma_plus(), identity2());
    const Matrix sm = linalg::kron(Matrix(sigma_plus().adjoint()), identity2());
    const Matrix product = sp * sm;
    Matrix projector = Matrix::Zero(2, 2);
    projector(0, 0) = 1.0;
    const Matrix expected = linalg::kron(projector, identity2());
    CHECK((product - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("kron associativity is exact for exactly-representable entries") {
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        const Matrix a = random_dyadic(2, rng);
        const Matrix b = random_dyadic(3, rng);
        const Matrix c = random_dyadic(2, rng);
        const Matrix left = linalg::kron(linalg::kron(a, b), c);
        const Matrix right = linalg::kron(a, linalg::kron(b, c));
        CHECK((left - right).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("kron rejects empty operands") {
    CHECK_THROWS_AS(linalg::kron(Matrix(), identity2()), std::invalid_argument);
}

TEST_CASE("partial trace of a product state returns the kept factor") {
    std::mt19937 rng(11);
    const Vector a = random_state(3, rng);
    const Vector b = random_state(5, rng);
    const Matrix rho_a = a * a.adjoint();
    const Matrix rho_b = b * b.adjoint();
    const Matrix rho = linalg::kron(rho_a, rho_b);
    CHECK((linalg::partial_trace(rho, 3, 5, Subsystem::left) - rho_a).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((linalg::partial_trace(rho, 3, 5, Subsystem::right) - rho_b).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
    Vector bell = Vector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const Matrix rho = bell * bell.adjoint();
    const Matrix reduced = linalg::partial_trace(rho, 2, 2, Subsystem::left);
    CHECK((reduced - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("partial trace preserves trace, hermiticity and positivity") {
    std::mt19937 rng(13);
    const Vector psi = random_state(3 * 7, rng);
    const Matrix rho = psi * psi.adjoint();
    for (auto keep : {Subsystem::left, Subsystem::right}) {
        const Matrix red = linalg::partial_trace(rho, 3, 7, keep);
        CHECK(std::abs(red.trace().real() - 1.0) < 1e-12);
        CHECK(linalg::hermiticity_defect(red) < 1e-12);
        CHECK(linalg::hermitian_eigenvalues(red).minCoeff() >= -1e-10);
    }
}

TEST_CASE("both reductions of a pure state share their nonzero spectrum") {
    // Schmidt oracle via full eigendecompositions of the two reductions
    std::mt19937 rng(17);
    const Eigen::Index da = 4, db = 6;
    const Vector psi = random_state(da * db, rng);
    const Matrix rho = psi * psi.adjoint();
    RealVector sa = linalg::hermitian_eigenvalues(
        linalg::partial_trace(rho, da, db, Subsystem::left));
    RealVector sb = linalg::hermitian_eigenvalues(
        linalg::partial_trace(rho, da, db, Subsystem::right));
    std::vector<double> va(sa.data(), sa.data() + sa.size());
    std::vector<double> vb(sb.data(), sb.data() + sb.size());
    std::sort(va.rbegin(), va.rend());
    std::sort(vb.rbegin(), vb.rend());
    for (std::size_t k = 0; k < va.size(); ++k) {
        CHECK(std::abs(va[k] - vb[k]) < 1e-10);
    }
}

TEST_CASE("partial trace rejects dimension mismatches") {
    const Matrix rho = Matrix::Identity(6, 6) / 6.0;
    CHECK_THROWS_AS(linalg::partial_trace(rho, 4, 2, Subsystem::left),
                    std::invalid_argument);
}

TEST_CASE("eigendecomposition reconstructs and is unitary") {
    std::mt19937 rng(19);
    const Matrix h = random_hermitian(9, rng);
    const auto es = linalg::EigenSystem::decompose(h);
    CHECK((es.reconstruct() - h).cwiseAbs().maxCoeff() < 1e-10);
    const Matrix gram = es.eigenvectors.adjoint() * es.eigenvectors;
    CHECK((gram - Matrix::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-10);
    for (Eigen::Index k = 1; k < es.eigenvalues.size(); ++k) {
        CHECK(es.eigenvalues(k) >= es.eigenvalues(k - 1));
    }
}

TEST_CASE("propagation at t = 0 is the identity") {
    std::mt19937 rng(23);
    const Matrix h = random_hermitian(8, rng);
    const Vector psi0 = random_state(8, rng);
    const double t0 = 0.0;
    const auto states = linalg::eigh_propagate(h, psi0, std::span{&t0, 1});
    REQUIRE(states.size() == 1);
    CHECK((states[0] - psi0).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("propagation is unitary at every time") {
    std::mt19937 rng(29);
    const Matrix h = random_hermitian(12, rng);
    const Vector psi0 = random_state(12, rng);
    const std::vector<double> times{0.0, 0.3, 1.7, 9.2, 44.0};
    for (const auto& psi : linalg::eigh_propagate(h, psi0, times)) {
        CHECK(std::abs(psi.squaredNorm() - 1.0) < 1e-9);
    }
}

TEST_CASE("resonant vacuum-Rabi block oscillates as cos^2(lambda t)") {
    // closed-form two-level solution on the {|e,0>, |g,1>} block
    const double lambda = 0.83;
    Matrix h(2, 2);
    h << 0.0, lambda, lambda, 0.0;
    Vector psi0(2);
    psi0 << 1.0, 0.0;
    const std::vector<double> times{0.0, 0.17, 0.5, 1.3, 2.9, 6.1};
    const auto states = linalg::eigh_propagate(h, psi0, times);
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double expected = std::cos(lambda * times[k]) * std::cos(lambda * times[k]);
        CHECK(std::abs(std::norm(states[k](0)) - expected) < 1e-12);
    }
}

TEST_CASE("non-Hermitian input is rejected with the residual") {
    Matrix h = Matrix::Zero(3, 3);
    h(0, 1) = Complex{0.0, 0.5};   // no conjugate partner
    CHECK_THROWS_AS(linalg::EigenSystem::decompose(h), numerical_error);
    try {
        (void)linalg::EigenSystem::decompose(h);
    } catch (const numerical_error& e) {
        CHECK(std::string(e.what()).find("Hermitian") != std::string::npos);
    }
}

TEST_CASE("hermitian_sqrt squares back and rejects negative spectra") {
    std::mt19937 rng(31);
    const Vector psi = random_state(4, rng);
    Matrix rho = 0.7 * (psi * psi.adjoint());
    rho += 0.3 * Matrix::Identity(4, 4) / 4.0;
    const Matrix root = linalg::hermitian_sqrt(rho);
    CHECK((root * root - rho).cwiseAbs().maxCoeff() < 1e-12);

    Matrix bad = Matrix::Zero(4, 4);
    bad(0, 0) = 1.0 + 1e-6;
    bad(1, 1) = -1e-6;   // clearly below the -1e-8 tolerance
    CHECK_THROWS_AS(linalg::hermitian_sqrt(bad), numerical_error);
}

} // TEST_SUITE
