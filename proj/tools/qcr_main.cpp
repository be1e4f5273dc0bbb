// qcr_main.cpp — Scenario runner: run configs, plot CSVs as SVG, scan the
// basin of attraction, and launch bundled figure presets

#include "qcr/csv.hpp"
#include "qcr/errors.hpp"
#include "qcr/measures.hpp"
#include "qcr/scenario.hpp"
#include "qcr/svg.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

std::filesystem::path preset_dir() {
    if (const char* env = std::getenv("QCR_PRESET_DIR")) {
        return env;
    }
#ifdef QCR_PRESET_DIR_DEFAULT
    return QCR_PRESET_DIR_DEFAULT;
#else
    return "presets";
#endif
}

std::vector<std::string> list_presets() {
    std::vector<std::string> names;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(preset_dir(), ec)) {
        if (entry.path().extension() == ".cfg") {
            names.push_back(entry.path().stem().string());
        }
    }
    std::sort(names.begin(), names.end());
    return names;
}

void run_config(const qcr::scenario::ScenarioConfig& config, const std::string& origin) {
    if (config.out_path.empty()) {
        throw qcr::config_error(origin + ": key 'out_path' is required");
    }
    const auto series = qcr::scenario::run_scenario(config);
    qcr::io::write_csv(series, config.out_path);
    std::cout << "wrote " << series.size() << " rows to " << config.out_path << "\n";
    if (!config.svg_path.empty()) {
        if (config.outputs.empty()) {
            throw qcr::config_error(origin + ": key 'outputs' must select columns when svg_path is set");
        }
        const auto table = qcr::io::parse_table(qcr::io::csv_text(series), origin);
        qcr::plot::render_plot(table, config.outputs, config.svg_path);
        std::cout << "wrote plot to " << config.svg_path << "\n";
    }
}

struct GridSpec {
    int r_steps = 75;
    int chi_steps = 144;
};

GridSpec parse_grid(const std::string& text) {
    // "r:75,chi:144"
    GridSpec grid;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) {
            throw qcr::config_error("basin grid: expected name:count, got '" + part + "'");
        }
        const std::string name = part.substr(0, colon);
        int value = 0;
        try {
            value = std::stoi(part.substr(colon + 1));
        } catch (const std::exception&) {
            throw qcr::config_error("basin grid: malformed count in '" + part + "'");
        }
        if (name == "r") {
            grid.r_steps = value;
        } else if (name == "chi") {
            grid.chi_steps = value;
        } else {
            throw qcr::config_error("basin grid: unknown axis '" + name + "'");
        }
    }
    return grid;
}

void write_basin_csv(const GridSpec& grid, const std::string& path) {
    const auto samples = qcr::measures::basin_scan(grid.r_steps, grid.chi_steps);
    std::string out = "r,chi,a_re,a_im,tangle\n";
    char buf[160];
    for (const auto& s : samples) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g\n",
                      s.r, s.chi, s.a.real(), s.a.imag(), s.tangle);
        out += buf;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw qcr::io_error("cannot open for writing: " + path);
    }
    file << out;
    if (!file) {
        throw qcr::io_error("write failed: " + path);
    }
    std::cout << "wrote " << samples.size() << " basin samples to " << path << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collapse and revival of two-qubit entanglement: scenario runner"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "Run a scenario config file and write its CSV");
    run->add_option("config", config_path, "key=value config file")->required();

    std::string csv_path, plot_out;
    std::vector<std::string> plot_columns;
    auto* plot = app.add_subcommand("plot", "Render columns of a CSV as an SVG line plot");
    plot->add_option("csv", csv_path, "input CSV")->required();
    plot->add_option("--columns", plot_columns, "comma separated column names")
        ->required()
        ->delimiter(',');
    plot->add_option("--out", plot_out, "output SVG path")->required();

    std::string grid_text = "r:75,chi:144";
    std::string basin_out;
    auto* basin = app.add_subcommand("basin", "Scan the basin-of-attraction tangle surface");
    basin->add_option("--grid", grid_text, "grid spec, e.g. r:75,chi:144");
    basin->add_option("--out", basin_out, "output CSV path")->required();

    std::string preset_name;
    auto* preset = app.add_subcommand("preset", "Run a bundled figure preset by name");
    preset->add_option("name", preset_name, "preset name (try 'list')")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*run) {
            run_config(qcr::scenario::parse_config_file(config_path), config_path);
        } else if (*plot) {
            qcr::plot::render_plot(qcr::io::read_table(csv_path), plot_columns, plot_out);
            std::cout << "wrote plot to " << plot_out << "\n";
        } else if (*basin) {
            write_basin_csv(parse_grid(grid_text), basin_out);
        } else if (*preset) {
            if (preset_name == "list") {
                for (const auto& name : list_presets()) {
                    std::cout << name << "\n";
                }
                return 0;
            }
            const auto path = preset_dir() / (preset_name + ".cfg");
            if (!std::filesystem::exists(path)) {
                throw qcr::config_error("unknown preset '" + preset_name
                                        + "' (looked in " + preset_dir().string() + ")");
            }
            run_config(qcr::scenario::parse_config_file(path.string()), path.string());
        }
    } catch (const qcr::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qcr::io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qcr::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
