#include "qcr/linalg.hpp"

#include "qcr/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcr::linalg {

Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.size() == 0 || b.size() == 0) {
        throw std::invalid_argument("kron: operands must be non-empty");
    }
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector kron_vec(const Vector& a, const Vector& b) {
    if (a.size() == 0 || b.size() == 0) {
        throw std::invalid_argument("kron_vec: operands must be non-empty");
    }
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

Matrix partial_trace(const Matrix& rho, Eigen::Index dim_left,
                     Eigen::Index dim_right, Subsystem keep) {
    if (dim_left <= 0 || dim_right <= 0) {
        throw std::invalid_argument("partial_trace: factor dimensions must be positive");
    }
    if (rho.rows() != rho.cols() || rho.rows() != dim_left * dim_right) {
        std::ostringstream msg;
        msg << "partial_trace: density matrix is " << rho.rows() << "x" << rho.cols()
            << " but the space is " << dim_left << "x" << dim_right;
        throw std::invalid_argument(msg.str());
    }
    if (keep == Subsystem::left) {
        Matrix out = Matrix::Zero(dim_left, dim_left);
        for (Eigen::Index i = 0; i < dim_left; ++i) {
            for (Eigen::Index j = 0; j < dim_left; ++j) {
                for (Eigen::Index n = 0; n < dim_right; ++n) {
                    out(i, j) += rho(i * dim_right + n, j * dim_right + n);
                }
            }
        }
        return out;
    }
    Matrix out = Matrix::Zero(dim_right, dim_right);
    for (Eigen::Index n = 0; n < dim_right; ++n) {
        for (Eigen::Index m = 0; m < dim_right; ++m) {
            for (Eigen::Index i = 0; i < dim_left; ++i) {
                out(n, m) += rho(i * dim_right + n, i * dim_right + m);
            }
        }
    }
    return out;
}

double hermiticity_defect(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("hermiticity_defect: matrix must be square");
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

RealVector hermitian_eigenvalues(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw numerical_error("hermitian_eigenvalues: eigensolver failed to converge");
    }
    return solver.eigenvalues();
}

EigenSystem EigenSystem::decompose(const Matrix& h, double hermitian_tol) {
    if (h.rows() != h.cols() || h.rows() == 0) {
        throw std::invalid_argument("EigenSystem: matrix must be square and non-empty");
    }
    const double defect = hermiticity_defect(h);
    if (defect > hermitian_tol) {
        std::ostringstream msg;
        msg << "EigenSystem: input is not Hermitian (max |H - H^dagger| = "
            << defect << ", tolerance " << hermitian_tol << ")";
        throw numerical_error(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw numerical_error("EigenSystem: eigensolver failed to converge");
    }
    return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix EigenSystem::reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

Vector EigenSystem::propagate(const Vector& psi0, double t) const {
    if (psi0.size() != eigenvectors.rows()) {
        throw std::invalid_argument("EigenSystem::propagate: state dimension mismatch");
    }
    Vector w = eigenvectors.adjoint() * psi0;
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        w(k) *= std::polar(1.0, -eigenvalues(k) * t);
    }
    return eigenvectors * w;
}

std::vector<Vector> eigh_propagate(const Matrix& h, const Vector& psi0,
                                   std::span<const double> times) {
    const EigenSystem es = EigenSystem::decompose(h);
    const Vector w0 = es.eigenvectors.adjoint() * psi0;
    std::vector<Vector> out;
    out.reserve(times.size());
    Vector w(w0.size());
    for (double t : times) {
        for (Eigen::Index k = 0; k < w.size(); ++k) {
            w(k) = w0(k) * std::polar(1.0, -es.eigenvalues(k) * t);
        }
        out.push_back(es.eigenvectors * w);
    }
    return out;
}

Matrix hermitian_sqrt(const Matrix& rho, double negative_tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
    if (solver.info() != Eigen::Success) {
        throw numerical_error("hermitian_sqrt: eigensolver failed to converge");
    }
    RealVector ev = solver.eigenvalues();
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        if (ev(k) < -negative_tol) {
            std::ostringstream msg;
            msg << "hermitian_sqrt: eigenvalue " << ev(k)
                << " below -" << negative_tol << "; not a density matrix";
            throw numerical_error(msg.str());
        }
        ev(k) = ev(k) > 0.0 ? std::sqrt(ev(k)) : 0.0;
    }
    return solver.eigenvectors() * ev.asDiagonal() * solver.eigenvectors().adjoint();
}

} // namespace qcr::linalg
