#include "qcr/dynamics.hpp"

#include "qcr/errors.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcr::dynamics {
namespace {

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

Matrix sigma_z() {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;   // basis order (e, g)
    return m;
}

Matrix sigma_minus() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 0) = 1.0;   // |g><e|
    return m;
}

// op acting on qubit `which` (0-based, qubit 0 slowest) within m_q qubits.
Matrix embed_qubit(const Matrix& op, int which, int m_q) {
    Matrix out = Matrix::Identity(1, 1);
    for (int k = 0; k < m_q; ++k) {
        out = linalg::kron(out, k == which ? op : identity(2));
    }
    return out;
}

int mode_levels(const ModelParams& p) {
    return p.kind == ModelKind::field ? p.n_max + 1 : p.n_spins + 1;
}

// Number of excited qubits in configuration c (bit 0 means excited).
int excited_count(unsigned config, int m_q) {
    return m_q - std::popcount(config);
}

Matrix build_from_ladder(const ModelParams& p, const ModeLadder& ladder) {
    const Eigen::Index md = ladder.level.size();
    const Eigen::Index qd = Eigen::Index{1} << p.m_q;

    Matrix raise = Matrix::Zero(md, md);
    for (Eigen::Index n = 0; n + 1 < md; ++n) {
        raise(n + 1, n) = ladder.raise_el(n);
    }

    Matrix h = p.omega * linalg::kron(identity(qd), Matrix(ladder.level.asDiagonal()));
    for (int i = 0; i < p.m_q; ++i) {
        h += 0.5 * p.qubit_freqs[i]
             * linalg::kron(embed_qubit(sigma_z(), i, p.m_q), identity(md));
        const Matrix lower_qubit = embed_qubit(sigma_minus(), i, p.m_q);
        const Matrix term = p.couplings[i] * linalg::kron(lower_qubit, raise);
        h += term + term.adjoint();
    }
    return h;
}

} // namespace

void validate(const ModelParams& p) {
    if (p.m_q < 1) {
        throw std::invalid_argument("ModelParams: m_q must be >= 1");
    }
    if (static_cast<int>(p.qubit_freqs.size()) != p.m_q
        || static_cast<int>(p.couplings.size()) != p.m_q) {
        std::ostringstream msg;
        msg << "ModelParams: expected " << p.m_q << " qubit_freqs and couplings, got "
            << p.qubit_freqs.size() << " and " << p.couplings.size();
        throw std::invalid_argument(msg.str());
    }
    if (p.omega <= 0.0) {
        throw std::invalid_argument("ModelParams: omega must be positive");
    }
    for (double f : p.qubit_freqs) {
        if (f <= 0.0) {
            throw std::invalid_argument("ModelParams: qubit frequencies must be positive");
        }
    }
    if (p.kind == ModelKind::field && p.n_max < 1) {
        throw std::invalid_argument("ModelParams: field model needs n_max >= 1");
    }
    if (p.kind == ModelKind::spin && p.n_spins < 1) {
        throw std::invalid_argument("ModelParams: spin model needs n_spins >= 1");
    }
}

HilbertSpec spec_of(const ModelParams& p) {
    validate(p);
    return HilbertSpec{p.m_q, static_cast<Eigen::Index>(mode_levels(p))};
}

ModeLadder field_ladder(int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("field_ladder: n_max must be >= 1");
    }
    ModeLadder ladder;
    ladder.level = RealVector::LinSpaced(n_max + 1, 0.0, static_cast<double>(n_max));
    ladder.raise_el.resize(n_max);
    for (int n = 0; n < n_max; ++n) {
        ladder.raise_el(n) = std::sqrt(static_cast<double>(n + 1));
    }
    return ladder;
}

ModeLadder spin_ladder(int n_spins) {
    if (n_spins < 1) {
        throw std::invalid_argument("spin_ladder: n_spins must be >= 1");
    }
    const double N = static_cast<double>(n_spins);
    ModeLadder ladder;
    ladder.level = RealVector::LinSpaced(n_spins + 1, 0.0, N);
    ladder.raise_el.resize(n_spins);
    // <n+1|J^+|n> / sqrt(N) with m = n - N/2: sqrt((n+1)(N-n)) / sqrt(N)
    for (int n = 0; n < n_spins; ++n) {
        ladder.raise_el(n) = std::sqrt((n + 1.0) * (N - n) / N);
    }
    return ladder;
}

Matrix build_field_hamiltonian(const ModelParams& p) {
    validate(p);
    if (p.kind != ModelKind::field) {
        throw std::invalid_argument("build_field_hamiltonian: params describe a spin model");
    }
    return build_from_ladder(p, field_ladder(p.n_max));
}

Matrix build_spin_hamiltonian(const ModelParams& p) {
    validate(p);
    if (p.kind != ModelKind::spin) {
        throw std::invalid_argument("build_spin_hamiltonian: params describe a field model");
    }
    return build_from_ladder(p, spin_ladder(p.n_spins));
}

Matrix build_hamiltonian(const ModelParams& p) {
    return p.kind == ModelKind::field ? build_field_hamiltonian(p)
                                      : build_spin_hamiltonian(p);
}

std::vector<int> excitation_labels(const HilbertSpec& spec) {
    std::vector<int> labels(static_cast<std::size_t>(spec.total_dim()));
    for (Eigen::Index c = 0; c < spec.qubit_dim(); ++c) {
        const int exc = excited_count(static_cast<unsigned>(c), spec.m_q);
        for (Eigen::Index n = 0; n < spec.mode_dim; ++n) {
            labels[static_cast<std::size_t>(c * spec.mode_dim + n)] = exc + static_cast<int>(n);
        }
    }
    return labels;
}

double excitation_expectation(const Vector& psi, const HilbertSpec& spec) {
    if (psi.size() != spec.total_dim()) {
        throw std::invalid_argument("excitation_expectation: state dimension mismatch");
    }
    const auto labels = excitation_labels(spec);
    double acc = 0.0;
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
        acc += labels[static_cast<std::size_t>(k)] * std::norm(psi(k));
    }
    return acc;
}

std::vector<double> uniform_grid(double t_max, int n_points) {
    if (!(t_max > 0.0)) {
        throw std::domain_error("uniform_grid: t_max must be positive");
    }
    if (n_points < 2) {
        throw std::domain_error("uniform_grid: need at least two points");
    }
    std::vector<double> grid(static_cast<std::size_t>(n_points));
    const double dt = t_max / (n_points - 1);
    for (int k = 0; k < n_points; ++k) {
        grid[static_cast<std::size_t>(k)] = k * dt;
    }
    grid.back() = t_max;
    return grid;
}

namespace {

void validate_grid(std::span<const double> grid) {
    if (grid.empty()) {
        throw std::invalid_argument("evolve_series: empty time grid");
    }
    if (grid.front() != 0.0) {
        throw std::invalid_argument("evolve_series: grid must start at t = 0");
    }
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (!(grid[k] > grid[k - 1])) {
            throw std::invalid_argument("evolve_series: grid must strictly increase");
        }
        if (!std::isfinite(grid[k])) {
            throw std::invalid_argument("evolve_series: grid times must be finite");
        }
    }
}

} // namespace

std::vector<Vector> evolve_series(const Matrix& h, const Vector& psi0,
                                  std::span<const double> grid) {
    validate_grid(grid);
    if (psi0.size() != h.rows()) {
        throw std::invalid_argument("evolve_series: state dimension mismatch");
    }
    return linalg::eigh_propagate(h, psi0, grid);
}

SectorPropagator SectorPropagator::build(const ModelParams& p) {
    validate(p);
    const ModeLadder ladder = p.kind == ModelKind::field ? field_ladder(p.n_max)
                                                         : spin_ladder(p.n_spins);
    const Eigen::Index md = ladder.level.size();
    const Eigen::Index qd = Eigen::Index{1} << p.m_q;

    SectorPropagator prop;
    prop.dim_ = qd * md;

    const int max_label = p.m_q + static_cast<int>(md) - 1;
    for (int s = 0; s <= max_label; ++s) {
        // members of sector s: (config c, mode n = s - excited(c)) when valid
        std::vector<std::pair<unsigned, Eigen::Index>> members;
        for (unsigned c = 0; c < static_cast<unsigned>(qd); ++c) {
            const Eigen::Index n = s - excited_count(c, p.m_q);
            if (n >= 0 && n < md) {
                members.emplace_back(c, n);
            }
        }
        if (members.empty()) {
            continue;
        }
        const Eigen::Index d = static_cast<Eigen::Index>(members.size());
        Matrix block = Matrix::Zero(d, d);
        for (Eigen::Index a = 0; a < d; ++a) {
            const auto [c, n] = members[static_cast<std::size_t>(a)];
            double diag = p.omega * ladder.level(n);
            for (int i = 0; i < p.m_q; ++i) {
                const bool excited = ((c >> (p.m_q - 1 - i)) & 1u) == 0u;
                diag += 0.5 * p.qubit_freqs[i] * (excited ? 1.0 : -1.0);
            }
            block(a, a) = diag;
            // couplings: de-excite qubit i, raise the mode by one
            for (int i = 0; i < p.m_q; ++i) {
                const unsigned bit = 1u << (p.m_q - 1 - i);
                if ((c & bit) != 0u) {
                    continue;   // qubit already in |g>
                }
                if (n + 1 >= md) {
                    continue;
                }
                const unsigned c_low = c | bit;
                for (Eigen::Index b = 0; b < d; ++b) {
                    if (members[static_cast<std::size_t>(b)].first == c_low
                        && members[static_cast<std::size_t>(b)].second == n + 1) {
                        const double el = p.couplings[i] * ladder.raise_el(n);
                        block(b, a) += el;
                        block(a, b) += el;
                        break;
                    }
                }
            }
        }
        Sector sector;
        sector.index.reserve(members.size());
        for (const auto& [c, n] : members) {
            sector.index.push_back(static_cast<Eigen::Index>(c) * md + n);
        }
        sector.es = linalg::EigenSystem::decompose(block);
        prop.sectors_.push_back(std::move(sector));
    }
    return prop;
}

SectorPropagator::Bound SectorPropagator::bind(const Vector& psi0) const {
    if (psi0.size() != dim_) {
        throw std::invalid_argument("SectorPropagator::bind: state dimension mismatch");
    }
    Bound bound;
    bound.prop_ = this;
    bound.coeffs_.reserve(sectors_.size());
    for (const auto& sector : sectors_) {
        Vector local(static_cast<Eigen::Index>(sector.index.size()));
        for (std::size_t k = 0; k < sector.index.size(); ++k) {
            local(static_cast<Eigen::Index>(k)) = psi0(sector.index[k]);
        }
        bound.coeffs_.push_back(sector.es.eigenvectors.adjoint() * local);
    }
    return bound;
}

Vector SectorPropagator::Bound::at(double t) const {
    Vector out = Vector::Zero(prop_->dim_);
    for (std::size_t s = 0; s < prop_->sectors_.size(); ++s) {
        const auto& sector = prop_->sectors_[s];
        const Vector& w0 = coeffs_[s];
        Vector w(w0.size());
        for (Eigen::Index k = 0; k < w.size(); ++k) {
            w(k) = w0(k) * std::polar(1.0, -sector.es.eigenvalues(k) * t);
        }
        const Vector local = sector.es.eigenvectors * w;
        for (std::size_t k = 0; k < sector.index.size(); ++k) {
            out(sector.index[k]) = local(static_cast<Eigen::Index>(k));
        }
    }
    return out;
}

std::vector<Vector> SectorPropagator::series(const Vector& psi0,
                                             std::span<const double> grid) const {
    validate_grid(grid);
    const Bound bound = bind(psi0);
    std::vector<Vector> out;
    out.reserve(grid.size());
    for (double t : grid) {
        out.push_back(bound.at(t));
    }
    return out;
}

} // namespace qcr::dynamics
