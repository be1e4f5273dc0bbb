#include "qcr/mismatch.hpp"

#include "qcr/errors.hpp"
#include "qcr/measures.hpp"
#include "qcr/parallel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcr::mismatch {

MismatchEnsemble gaussian_weight_grid(double width, int sample_count) {
    if (width < 0.0) {
        throw std::domain_error("gaussian_weight_grid: width must be >= 0");
    }
    if (sample_count < 1 || sample_count % 2 == 0) {
        std::ostringstream msg;
        msg << "gaussian_weight_grid: sample_count must be odd and >= 1, got "
            << sample_count;
        throw std::domain_error(msg.str());
    }
    MismatchEnsemble ens;
    ens.width = width;
    if (width == 0.0 || sample_count == 1) {
        ens.deltas = {0.0};
        ens.weights = {1.0};
        return ens;
    }
    const int half = (sample_count - 1) / 2;
    const double step = 3.0 * width / half;
    ens.deltas.resize(static_cast<std::size_t>(sample_count));
    ens.weights.resize(static_cast<std::size_t>(sample_count));
    double total = 0.0;
    for (int k = 0; k < sample_count; ++k) {
        const double delta = (k - half) * step;   // exact mirror symmetry
        const double w = std::exp(-delta * delta / (2.0 * width * width));
        ens.deltas[static_cast<std::size_t>(k)] = delta;
        ens.weights[static_cast<std::size_t>(k)] = w;
        total += w;
    }
    for (double& w : ens.weights) {
        w /= total;
    }
    return ens;
}

dynamics::ModelParams member_params(const dynamics::ModelParams& base, double delta) {
    if (base.m_q != 2) {
        throw std::invalid_argument("member_params: mismatch averaging needs m_q = 2");
    }
    dynamics::ModelParams p = base;
    p.couplings[0] = base.couplings[1] + delta;   // lambda_1 = lambda_2 + delta
    p.delta = delta;
    return p;
}

std::vector<Matrix> ensemble_average_series(const dynamics::ModelParams& base,
                                            const MismatchEnsemble& ensemble,
                                            const Vector& psi0,
                                            std::span<const double> grid) {
    dynamics::validate(base);
    if (base.m_q != 2) {
        throw std::invalid_argument("ensemble_average_series: base params need m_q = 2");
    }
    if (ensemble.deltas.empty() || ensemble.deltas.size() != ensemble.weights.size()) {
        throw std::invalid_argument("ensemble_average_series: malformed ensemble");
    }
    const dynamics::HilbertSpec spec = dynamics::spec_of(base);
    const std::size_t members = ensemble.deltas.size();
    const std::size_t steps = grid.size();

    std::vector<std::vector<Matrix>> reduced(members);
    parallel::parallel_for(members, [&](std::size_t m) {
        const auto params = member_params(base, ensemble.deltas[m]);
        const auto prop = dynamics::SectorPropagator::build(params);
        const auto bound = prop.bind(psi0);
        std::vector<Matrix> series;
        series.reserve(steps);
        for (std::size_t k = 0; k < steps; ++k) {
            series.push_back(measures::reduced_two_qubit_density(bound.at(grid[k]), spec));
        }
        reduced[m] = std::move(series);
    });

    // Fixed ascending-delta reduction order.
    std::vector<Matrix> averaged(steps, Matrix::Zero(4, 4));
    for (std::size_t m = 0; m < members; ++m) {
        const double w = ensemble.weights[m];
        for (std::size_t k = 0; k < steps; ++k) {
            averaged[k] += w * reduced[m][k];
        }
    }
    return averaged;
}

} // namespace qcr::mismatch
