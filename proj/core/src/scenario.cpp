#include "qcr/scenario.hpp"

#include "qcr/errors.hpp"
#include "qcr/mismatch.hpp"
#include "qcr/states.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace qcr::scenario {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& value, const std::string& key,
                    const std::string& origin) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw config_error(origin + ": key '" + key + "' has a malformed number: " + value);
    }
}

int parse_int(const std::string& value, const std::string& key,
              const std::string& origin) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw config_error(origin + ": key '" + key + "' has a malformed integer: " + value);
    }
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

} // namespace

Complex parse_complex(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) {
        throw config_error("empty complex literal");
    }
    auto to_double = [&](const std::string& part) {
        std::size_t used = 0;
        const double v = std::stod(part, &used);
        if (used != part.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    };
    try {
        if (s.back() != 'i') {
            return Complex{to_double(s), 0.0};
        }
        const std::string body = s.substr(0, s.size() - 1);
        // split at the last sign that is not an exponent sign and not leading
        std::size_t split = std::string::npos;
        for (std::size_t k = body.size(); k-- > 1;) {
            const char ch = body[k];
            if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        if (split == std::string::npos) {
            // pure imaginary: "0.5i", "i", "-i"
            if (body.empty() || body == "+") return Complex{0.0, 1.0};
            if (body == "-") return Complex{0.0, -1.0};
            return Complex{0.0, to_double(body)};
        }
        const double re = to_double(body.substr(0, split));
        std::string imag = body.substr(split);
        if (imag == "+") imag = "1";
        else if (imag == "-") imag = "-1";
        return Complex{re, to_double(imag)};
    } catch (const std::exception&) {
        throw config_error("malformed complex literal '" + s + "' (expected re+imi)");
    }
}

ScenarioConfig parse_config_text(const std::string& text, const std::string& origin) {
    ScenarioConfig config;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << origin << ":" << line_no << ": expected key = value";
            throw config_error(msg.str());
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            std::ostringstream msg;
            msg << origin << ":" << line_no << ": empty key or value";
            throw config_error(msg.str());
        }
        if (!seen.insert(key).second) {
            throw config_error(origin + ": duplicate key '" + key + "'");
        }

        if (key == "model") {
            if (value == "field") config.model = dynamics::ModelKind::field;
            else if (value == "spin") config.model = dynamics::ModelKind::spin;
            else throw config_error(origin + ": key 'model' must be field or spin, got " + value);
        } else if (key == "m_q") {
            config.m_q = parse_int(value, key, origin);
        } else if (key == "n_bar") {
            config.n_bar = parse_double(value, key, origin);
        } else if (key == "theta") {
            config.theta = parse_double(value, key, origin);
        } else if (key == "zeta2") {
            config.zeta_sq = parse_double(value, key, origin);
        } else if (key == "n_spins") {
            config.n_spins = parse_int(value, key, origin);
        } else if (key == "phi") {
            config.phi = parse_double(value, key, origin);
        } else if (key == "c_ee") {
            config.c_ee = parse_complex(value);
        } else if (key == "c_eg") {
            config.c_eg = parse_complex(value);
        } else if (key == "c_ge") {
            config.c_ge = parse_complex(value);
        } else if (key == "c_gg") {
            config.c_gg = parse_complex(value);
        } else if (key == "lambda") {
            config.lambda = parse_double(value, key, origin);
        } else if (key == "delta_width") {
            config.delta_width = parse_double(value, key, origin);
        } else if (key == "delta_samples") {
            config.delta_samples = parse_int(value, key, origin);
        } else if (key == "t_max_factor") {
            config.t_max_factor = parse_double(value, key, origin);
        } else if (key == "n_points") {
            config.n_points = parse_int(value, key, origin);
        } else if (key == "n_max") {
            config.n_max = parse_int(value, key, origin);
        } else if (key == "outputs") {
            config.outputs = split_list(value);
        } else if (key == "out_path") {
            config.out_path = value;
        } else if (key == "svg_path") {
            config.svg_path = value;
        } else {
            throw config_error(origin + ": unknown key '" + key + "'");
        }
    }
    return config;
}

ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

const std::vector<std::string>& diagnostic_columns() {
    static const std::vector<std::string> cols = {
        "t", "p_ee", "s_lin", "tangle", "concurrence", "p_att_plus", "p_att_minus"};
    return cols;
}

void validate(const ScenarioConfig& config) {
    if (config.m_q != 2) {
        throw config_error("key 'm_q': two-qubit diagnostics require m_q = 2");
    }
    const double norm_sq = std::norm(config.c_ee) + std::norm(config.c_eg)
                           + std::norm(config.c_ge) + std::norm(config.c_gg);
    if (std::abs(norm_sq - 1.0) > 2e-9) {
        std::ostringstream msg;
        msg << "keys 'c_ee..c_gg': initial amplitudes have squared norm " << norm_sq
            << "; must be normalised within 1e-9";
        throw config_error(msg.str());
    }
    if (!(config.lambda > 0.0)) {
        throw config_error("key 'lambda': must be positive");
    }
    if (config.model == dynamics::ModelKind::field) {
        if (!(config.n_bar > 0.0)) {
            throw config_error("key 'n_bar': field scenarios need n_bar > 0");
        }
        if (config.n_max && *config.n_max < 1) {
            throw config_error("key 'n_max': must be >= 1");
        }
    } else {
        if (!(config.zeta_sq > 0.0)) {
            throw config_error("key 'zeta2': spin scenarios need |zeta|^2 > 0");
        }
        if (config.n_spins < 1) {
            throw config_error("key 'n_spins': spin scenarios need N >= 1");
        }
    }
    if (config.delta_width < 0.0) {
        throw config_error("key 'delta_width': must be >= 0");
    }
    if (config.delta_samples < 1 || config.delta_samples % 2 == 0) {
        throw config_error("key 'delta_samples': must be odd and >= 1");
    }
    if (!(config.t_max_factor > 0.0)) {
        throw config_error("key 't_max_factor': must be positive");
    }
    if (config.n_points < 2) {
        throw config_error("key 'n_points': need at least two grid points");
    }
    const auto& cols = diagnostic_columns();
    for (const auto& name : config.outputs) {
        const bool known = std::find(cols.begin() + 1, cols.end(), name) != cols.end();
        if (!known) {
            throw config_error("key 'outputs': unknown column '" + name + "'");
        }
    }
}

revival::RevivalEstimate revival_estimate(const ScenarioConfig& config) {
    if (config.model == dynamics::ModelKind::field) {
        return revival::field_revival_estimate(config.n_bar, config.lambda);
    }
    return revival::spin_revival_estimate(config.zeta_sq, config.n_spins, config.lambda);
}

Vector initial_state(const ScenarioConfig& config) {
    const Vector qubits = states::TwoQubitState{config.c_ee, config.c_eg,
                                                config.c_ge, config.c_gg}.amplitudes();
    if (config.model == dynamics::ModelKind::field) {
        const Complex alpha = std::polar(std::sqrt(config.n_bar), -config.theta);
        const int n_max = config.n_max.value_or(states::default_fock_truncation(config.n_bar));
        const auto mode = states::coherent_fock_amplitudes(alpha, n_max);
        return linalg::kron_vec(qubits, mode.amplitudes);
    }
    const Complex zeta = std::polar(std::sqrt(config.zeta_sq), -config.phi);
    const auto mode = states::spin_coherent_amplitudes(zeta, config.n_spins);
    return linalg::kron_vec(qubits, mode.amplitudes);
}

dynamics::ModelParams base_params(const ScenarioConfig& config) {
    dynamics::ModelParams p;
    p.kind = config.model;
    p.m_q = 2;
    // Resonance with energies in coupling units: omega = Omega_i = lambda.
    p.omega = config.lambda;
    p.qubit_freqs = {config.lambda, config.lambda};
    p.couplings = {config.lambda, config.lambda};
    if (config.model == dynamics::ModelKind::field) {
        p.n_max = config.n_max.value_or(states::default_fock_truncation(config.n_bar));
    } else {
        p.n_spins = config.n_spins;
    }
    return p;
}

TimeSeries run_scenario(const ScenarioConfig& config) {
    validate(config);
    const auto params = base_params(config);
    const Vector psi0 = initial_state(config);
    const auto estimate = revival_estimate(config);
    const auto grid = dynamics::uniform_grid(config.t_max_factor * estimate.t_revival,
                                             config.n_points);
    const auto ensemble = mismatch::gaussian_weight_grid(config.delta_width,
                                                         config.delta_samples);
    const auto rho_series = mismatch::ensemble_average_series(params, ensemble, psi0, grid);

    const double phase0 = config.model == dynamics::ModelKind::field ? config.theta
                                                                     : config.phi;
    TimeSeries series;
    series.records.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        // Attractors are stationary in the rotating frame; at resonance the
        // lab-frame overlap needs the phase advanced by omega t.
        const double phase = phase0 + params.omega * grid[k];
        series.records.push_back(measures::diagnostics(grid[k], rho_series[k], phase));
    }
    return series;
}

} // namespace qcr::scenario
