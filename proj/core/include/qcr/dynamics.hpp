// dynamics.hpp — Hamiltonians for qubits coupled to a field mode or to a
// composite spin restricted to its symmetric Dicke ladder, plus exact
// evolution (dense eigendecomposition or excitation-sector blocks)

#pragma once

#include "qcr/linalg.hpp"
#include "qcr/types.hpp"

#include <span>
#include <vector>

namespace qcr::dynamics {

enum class ModelKind { field, spin };

// Every Hamiltonian symbol in one bag. `couplings[i]` is lambda_i; the
// composite-spin model divides by sqrt(N) internally. `delta` records the
// applied coupling mismatch (lambda_1 = lambda_2 + delta) for bookkeeping.
struct ModelParams {
    ModelKind kind{ModelKind::field};
    double omega{1.0};
    std::vector<double> qubit_freqs;   // Omega_i
    std::vector<double> couplings;     // lambda_i
    int m_q{2};
    int n_max{0};     // field truncation (mode dim n_max + 1)
    int n_spins{0};   // composite spin size N (ladder dim N + 1)
    double delta{0.0};
};

// Throws std::invalid_argument when list lengths or signs are off.
void validate(const ModelParams& p);

// Composite basis bookkeeping: qubit factor slowest (|q1 q2 ...>, e before g
// per qubit), mode/ladder index fastest.
struct HilbertSpec {
    int m_q{2};
    Eigen::Index mode_dim{0};

    Eigen::Index qubit_dim() const { return Eigen::Index{1} << m_q; }
    Eigen::Index total_dim() const { return qubit_dim() * mode_dim; }
};

HilbertSpec spec_of(const ModelParams& p);

// Mode ladder abstraction shared by both models: diagonal level energies
// (omega * n for both; the spin model's +N/2 shift is absorbed) and the
// raising element <n+1|raise|n> that multiplies lambda_i.
struct ModeLadder {
    RealVector level;      // length mode_dim
    RealVector raise_el;   // length mode_dim - 1
};

ModeLadder field_ladder(int n_max);
ModeLadder spin_ladder(int n_spins);

// H = omega a^dag a + (1/2) sum_i Omega_i sigma^z_i
//     + sum_i lambda_i (a^dag sigma^-_i + a sigma^+_i)
Matrix build_field_hamiltonian(const ModelParams& p);

// H = omega (J^z + N/2) + (1/2) sum_i Omega_i sigma^z_i
//     + (1/sqrt(N)) sum_i lambda_i (J^+ sigma^-_i + J^- sigma^+_i)
// restricted to the j = N/2 ladder, J^pm |N/2,m> =
// sqrt(N/2 (N/2+1) - m (m+-1)) |N/2, m+-1>.
Matrix build_spin_hamiltonian(const ModelParams& p);

Matrix build_hamiltonian(const ModelParams& p);

// Conserved excitation count per basis state: mode index plus number of
// excited qubits. Both Hamiltonians commute with it.
std::vector<int> excitation_labels(const HilbertSpec& spec);

// <psi| N_ex |psi> evaluated from the labels.
double excitation_expectation(const Vector& psi, const HilbertSpec& spec);

// Uniform grid 0 = t_0 < ... < t_{n-1} = t_max.
std::vector<double> uniform_grid(double t_max, int n_points);

// Exact evolution via one dense Hermitian eigendecomposition.
// The grid must start at 0 and strictly increase.
std::vector<Vector> evolve_series(const Matrix& h, const Vector& psi0,
                                  std::span<const double> grid);

// Evolution through per-sector eigendecompositions. The blocks are
// assembled directly from the ladder matrix elements, independently of the
// dense builders, and sector dimension never exceeds 2^m_q, so states of
// dimension ~10^4 propagate in milliseconds.
class SectorPropagator {
public:
    static SectorPropagator build(const ModelParams& p);

    // Initial state bound to the decomposition; evaluating at a time costs
    // O(total dimension).
    class Bound {
    public:
        Vector at(double t) const;

    private:
        friend class SectorPropagator;
        const SectorPropagator* prop_{nullptr};
        std::vector<Vector> coeffs_;   // V^dagger psi0 per sector
    };

    Bound bind(const Vector& psi0) const;
    std::vector<Vector> series(const Vector& psi0, std::span<const double> grid) const;

    Eigen::Index dim() const { return dim_; }

private:
    struct Sector {
        std::vector<Eigen::Index> index;   // global basis indices
        linalg::EigenSystem es;
    };

    Eigen::Index dim_{0};
    std::vector<Sector> sectors_;
};

} // namespace qcr::dynamics
