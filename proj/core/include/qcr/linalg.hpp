// linalg.hpp — Dense complex kernel: Kronecker products, partial trace,
// Hermitian eigendecomposition and exact propagation under e^{-iHt}

#pragma once

#include "qcr/types.hpp"

#include <span>
#include <vector>

namespace qcr::linalg {

// Kronecker product with the left factor varying slowest:
// out((i*rb+k), (j*cb+l)) = a(i,j) * b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

// Column vector version, same ordering convention.
Vector kron_vec(const Vector& a, const Vector& b);

enum class Subsystem { left, right };

// Partial trace of a density matrix over a bipartite space of
// dimensions dim_left x dim_right (left factor slowest). `keep` names
// the factor that survives.
Matrix partial_trace(const Matrix& rho, Eigen::Index dim_left,
                     Eigen::Index dim_right, Subsystem keep);

// Largest entry of |M - M^dagger|.
double hermiticity_defect(const Matrix& m);

// Ascending eigenvalues of a Hermitian matrix.
RealVector hermitian_eigenvalues(const Matrix& m);

// Eigendecomposition h = V diag(E) V^dagger of a Hermitian matrix.
// Rejects inputs whose hermiticity defect exceeds `hermitian_tol`.
struct EigenSystem {
    RealVector eigenvalues;   // ascending
    Matrix eigenvectors;      // unitary, columns

    static EigenSystem decompose(const Matrix& h, double hermitian_tol = 1e-10);

    Matrix reconstruct() const;

    // psi(t) = V exp(-i E t) V^dagger psi0
    Vector propagate(const Vector& psi0, double t) const;
};

// One decomposition reused across all requested times.
std::vector<Vector> eigh_propagate(const Matrix& h, const Vector& psi0,
                                   std::span<const double> times);

// Principal square root of a positive-semidefinite Hermitian matrix.
// Eigenvalues in [-negative_tol, 0) are treated as zero; anything below
// -negative_tol is rejected as an invalid density matrix.
Matrix hermitian_sqrt(const Matrix& rho, double negative_tol = 1e-8);

} // namespace qcr::linalg
