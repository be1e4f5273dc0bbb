// scenario.hpp — Scenario configuration (flat key=value files), validation,
// and the full pipeline from config to diagnostic time series

#pragma once

#include "qcr/dynamics.hpp"
#include "qcr/measures.hpp"
#include "qcr/revival.hpp"
#include "qcr/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcr::scenario {

// Everything a run needs. Defaults follow the headline simulations: unit
// coupling, resonance, 1200 grid points out to 1.1 revival times.
struct ScenarioConfig {
    dynamics::ModelKind model{dynamics::ModelKind::field};
    int m_q{2};
    double n_bar{0.0};       // field: mean photon number
    double theta{0.0};       // field: initial coherent phase
    double zeta_sq{0.0};     // spin: |zeta|^2
    int n_spins{0};          // spin: N
    double phi{0.0};         // spin: initial phase
    Complex c_ee{0.0};
    Complex c_eg{0.0};
    Complex c_ge{0.0};
    Complex c_gg{0.0};
    double lambda{1.0};
    double delta_width{0.0};
    int delta_samples{61};
    double t_max_factor{1.1};
    int n_points{1200};
    std::optional<int> n_max;          // field truncation override
    std::vector<std::string> outputs;  // columns to plot; CSV always has all
    std::string out_path;
    std::string svg_path;              // optional; renders `outputs` when set
};

// "re", "re+imi" or "re-imi" (e.g. 0.7071067811865476+0i).
Complex parse_complex(const std::string& text);

// Flat key=value lines, '#' comments. Unknown keys are config errors that
// name the key. `origin` labels error messages (usually the file name).
ScenarioConfig parse_config_text(const std::string& text, const std::string& origin);
ScenarioConfig parse_config_file(const std::string& path);

// Normalisation, count and range checks; throws config_error naming the
// offending key.
void validate(const ScenarioConfig& config);

struct TimeSeries {
    std::vector<measures::DiagnosticsRecord> records;

    std::size_t size() const { return records.size(); }
};

// Revival estimate for the configured model.
revival::RevivalEstimate revival_estimate(const ScenarioConfig& config);

// Initial product state (two qubits) (x) (mode/ladder).
Vector initial_state(const ScenarioConfig& config);

// Base Hamiltonian parameters at resonance omega = Omega_i = lambda.
dynamics::ModelParams base_params(const ScenarioConfig& config);

// Deterministic end-to-end run: ensemble-averaged two-qubit density matrix
// per grid time (a width-0 ensemble is the bare trajectory) and the full
// diagnostics record at every point.
TimeSeries run_scenario(const ScenarioConfig& config);

// The fixed CSV column set, in emission order.
const std::vector<std::string>& diagnostic_columns();

} // namespace qcr::scenario
