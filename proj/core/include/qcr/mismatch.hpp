// mismatch.hpp — Gaussian coupling-mismatch decoherence: discrete delta
// grids with normal weights and weighted density-matrix averaging

#pragma once

#include "qcr/dynamics.hpp"
#include "qcr/types.hpp"

#include <span>
#include <vector>

namespace qcr::mismatch {

// delta sampled uniformly on [-3 width, 3 width], weighted by the normal
// density and renormalised to sum to one. width = 0 degenerates to the
// single sample delta = 0.
struct MismatchEnsemble {
    double width{0.0};
    std::vector<double> deltas;    // ascending, symmetric about 0
    std::vector<double> weights;   // positive, sum to 1
};

// sample_count must be odd and >= 1.
MismatchEnsemble gaussian_weight_grid(double width, int sample_count);

// One evolved member per delta with lambda_1 = lambda_2 + delta_i (lambda_2
// taken from base.couplings[1]); the averaged two-qubit density matrix per
// grid time is the weighted sum in ascending-delta order, so the result is
// bitwise reproducible for any worker count. Members evolve concurrently.
std::vector<Matrix> ensemble_average_series(const dynamics::ModelParams& base,
                                            const MismatchEnsemble& ensemble,
                                            const Vector& psi0,
                                            std::span<const double> grid);

// The per-member parameter set the averaging loop uses; exposed for tests.
dynamics::ModelParams member_params(const dynamics::ModelParams& base, double delta);

} // namespace qcr::mismatch
