// Copyright 2026 Google LLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "star/decoder.h"
#include "star/estimator.h"
#include "star/injection.h"
#include "star/rotation.h"
#include "star/surface_code.h"
#include "star/version.h"

namespace star {

namespace {

class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}

template <typename T>
std::string join(const std::vector<T> &values) {
    std::string s;
    for (size_t k = 0; k < values.size(); k++) {
        if (k) {
            s += ",";
        }
        if constexpr (std::is_floating_point_v<T>) {
            s += num(values[k]);
        } else {
            s += std::to_string(values[k]);
        }
    }
    return s;
}

struct RunConfig {
    std::vector<int> ds;
    std::vector<double> ps;
    uint64_t shots = 100000;
    uint64_t seed = 0;
    int threads = 0;
    std::string variant = "direct";
    std::string scheme = "compact";
    double n_phys = 1e4;
    std::string out_path;
    std::string format = "csv";
    bool oracle = false;
    std::string in_path;
    bool reference = false;
    double divisor = 1;
    std::string fit_path;
    double p_z1 = 0;
    uint64_t samples = 1000000;
};

void check_distances(const std::vector<int> &ds) {
    if (ds.empty()) {
        throw ConfigError("--d needs at least one distance");
    }
    for (int d : ds) {
        if (d < 3 || d % 2 == 0) {
            throw ConfigError("code distance must be odd and at least 3, got " + std::to_string(d));
        }
    }
}

void check_rates(const std::vector<double> &ps) {
    if (ps.empty()) {
        throw ConfigError("--p needs at least one value");
    }
    for (double p : ps) {
        if (!(p >= 0 && p <= 0.1)) {
            throw ConfigError("physical error rate must lie in [0, 0.1], got " + num(p));
        }
    }
}

void check_shots(uint64_t shots) {
    if (shots == 0) {
        throw ConfigError("--shots must be positive");
    }
}

std::string header(const std::string &command, const std::string &config, uint64_t seed) {
    return std::string("# star ") + VERSION + " " + command + (config.empty() ? "" : " " + config) +
           " seed=" + std::to_string(seed) + "\n";
}

// Emits a table as CSV or as a JSON array of objects with the same keys.
class Table {
   public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}
    void add(std::vector<std::string> cells, std::vector<bool> numeric) {
        rows_.push_back(std::move(cells));
        numeric_.push_back(std::move(numeric));
    }
    std::string render(const std::string &format) const {
        std::ostringstream s;
        if (format == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (size_t r = 0; r < rows_.size(); r++) {
                nlohmann::ordered_json obj;
                for (size_t c = 0; c < columns_.size(); c++) {
                    if (numeric_[r][c]) {
                        obj[columns_[c]] = nlohmann::ordered_json::parse(rows_[r][c]);
                    } else {
                        obj[columns_[c]] = rows_[r][c];
                    }
                }
                arr.push_back(obj);
            }
            s << arr.dump(2) << "\n";
            return s.str();
        }
        for (size_t c = 0; c < columns_.size(); c++) {
            s << (c ? "," : "") << columns_[c];
        }
        s << "\n";
        for (const auto &row : rows_) {
            for (size_t c = 0; c < row.size(); c++) {
                s << (c ? "," : "") << row[c];
            }
            s << "\n";
        }
        return s.str();
    }

   private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
    std::vector<std::vector<bool>> numeric_;
};

std::string cmd_memory(const RunConfig &cfg) {
    check_distances(cfg.ds);
    check_rates(cfg.ps);
    check_shots(cfg.shots);
    Table table({"d", "p", "shots", "failures_Z", "failures_X", "P_LZ", "sigma_Z", "P_LX", "sigma_X"});
    for (int d : cfg.ds) {
        for (double p : cfg.ps) {
            LogicalErrorEstimate e = estimate_logical_error_rate(d, p, cfg.shots, cfg.seed, cfg.threads);
            table.add({std::to_string(d), num(p), std::to_string(e.shots), std::to_string(e.failures_z),
                       std::to_string(e.failures_x), sci(e.rate_z()), sci(e.sigma_z()), sci(e.rate_x()),
                       sci(e.sigma_x())},
                      std::vector<bool>(9, true));
        }
    }
    return header("memory",
                  "d=" + join(cfg.ds) + " p=" + join(cfg.ps) + " shots=" + std::to_string(cfg.shots) +
                      " format=" + cfg.format,
                  cfg.seed) +
           table.render(cfg.format);
}

std::string cmd_inject(const RunConfig &cfg) {
    Variant variant = parse_variant(cfg.variant);
    check_distances(cfg.ds);
    std::string config = "variant=" + cfg.variant + " d=" + join(cfg.ds);
    if (cfg.oracle) {
        Table table({"variant", "d", "c_Z", "c_X", "c_reject_stage1", "c_reject_stage2"});
        for (int d : cfg.ds) {
            OracleResult r = oracle_leading_coefficients(variant, d);
            table.add({cfg.variant, std::to_string(d), r.c_z.str(), r.c_x.str(), r.c_reject_stage1.str(),
                       r.c_reject_stage2.str()},
                      {false, true, false, false, false, false});
        }
        return header("inject", config + " oracle format=" + cfg.format, cfg.seed) + table.render(cfg.format);
    }
    check_rates(cfg.ps);
    check_shots(cfg.shots);
    Table table({"d", "p", "variant", "shots", "accepted", "rejected_stage1", "rejected_stage2", "P_Z", "sigma"});
    for (int d : cfg.ds) {
        for (double p : cfg.ps) {
            InjectionEstimate e = run_injection_experiment(d, p, cfg.shots, variant, cfg.seed, cfg.threads);
            table.add({std::to_string(d), num(p), cfg.variant, std::to_string(e.shots), std::to_string(e.accepted),
                       std::to_string(e.rejected_stage1), std::to_string(e.rejected_stage2), sci(e.rate_z()),
                       sci(e.sigma_z())},
                      {true, true, false, true, true, true, true, true, true});
        }
    }
    return header("inject",
                  config + " p=" + join(cfg.ps) + " shots=" + std::to_string(cfg.shots) + " format=" + cfg.format,
                  cfg.seed) +
           table.render(cfg.format);
}

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    return cells;
}

nlohmann::ordered_json fit_json(const FitResult &fit) {
    return {{"C_Z", fit.z.c},       {"sigma_C_Z", fit.z.sigma_c},       {"p_th_Z", fit.z.p_th},
            {"sigma_p_th_Z", fit.z.sigma_p_th}, {"C_X", fit.x.c},       {"sigma_C_X", fit.x.sigma_c},
            {"p_th_X", fit.x.p_th}, {"sigma_p_th_X", fit.x.sigma_p_th}};
}

std::string cmd_fit(const RunConfig &cfg) {
    FitResult fit;
    std::string config;
    if (cfg.reference) {
        fit = reference_fit();
        config = "reference";
    } else {
        if (cfg.in_path.empty()) {
            throw ConfigError("fit needs --in <memory csv> or --reference");
        }
        std::ifstream in(cfg.in_path);
        if (!in) {
            throw ConfigError("cannot read " + cfg.in_path);
        }
        std::vector<std::string> columns;
        std::vector<ScalingPoint> z, x;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') {
                continue;
            }
            std::vector<std::string> cells = split_csv_line(line);
            if (columns.empty()) {
                columns = cells;
                continue;
            }
            auto col = [&](const std::string &name) {
                for (size_t c = 0; c < columns.size(); c++) {
                    if (columns[c] == name && c < cells.size()) {
                        return std::stod(cells[c]);
                    }
                }
                throw ConfigError("input is missing column " + name);
            };
            int d = (int)col("d");
            double p = col("p");
            z.push_back({d, p, col("P_LZ"), col("sigma_Z")});
            x.push_back({d, p, col("P_LX"), col("sigma_X")});
        }
        fit.z = fit_scaling(z);
        fit.x = fit_scaling(x);
        config = "in=" + cfg.in_path;
    }
    return header("fit", config, cfg.seed) + fit_json(fit).dump(2) + "\n";
}

FitResult load_fit(const RunConfig &cfg) {
    if (cfg.fit_path.empty()) {
        return reference_fit();
    }
    std::ifstream in(cfg.fit_path);
    if (!in) {
        throw ConfigError("cannot read " + cfg.fit_path);
    }
    std::string text, line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            text += line + "\n";
        }
    }
    nlohmann::json j = nlohmann::json::parse(text);
    FitResult fit;
    fit.z = {j.at("C_Z").get<double>(), j.at("p_th_Z").get<double>(), j.value("sigma_C_Z", 0.0),
             j.value("sigma_p_th_Z", 0.0)};
    fit.x = {j.at("C_X").get<double>(), j.at("p_th_X").get<double>(), j.value("sigma_C_X", 0.0),
             j.value("sigma_p_th_X", 0.0)};
    return fit;
}

struct DeviceConfig {
    int d;
    double p;
    double c_z;
};

DeviceConfig device(const RunConfig &cfg) {
    if (cfg.ds.size() != 1 || cfg.ps.size() != 1) {
        throw ConfigError("this command takes a single --d and a single --p");
    }
    if (cfg.ds[0] < 1) {
        throw ConfigError("code distance must be positive");
    }
    if (!(cfg.ps[0] > 0 && cfg.ps[0] < 0.5)) {
        throw ConfigError("physical error rate must lie in (0, 0.5)");
    }
    if (!(cfg.n_phys > 0)) {
        throw ConfigError("--n-phys must be positive");
    }
    Variant variant = parse_variant(cfg.variant);
    double c_z = oracle_leading_coefficients(variant, 3).c_z.to_double();
    return {cfg.ds[0], cfg.ps[0], c_z};
}

std::string device_config(const RunConfig &cfg) {
    return "n_phys=" + num(cfg.n_phys) + " d=" + join(cfg.ds) + " p=" + join(cfg.ps) + " variant=" + cfg.variant;
}

std::string cmd_estimate(const RunConfig &cfg) {
    DeviceConfig dev = device(cfg);
    LayoutScheme scheme = parse_scheme(cfg.scheme);
    if (!(cfg.divisor > 0)) {
        throw ConfigError("--divisor must be positive");
    }
    ResourceReport r = build_report(load_fit(cfg), cfg.n_phys, dev.p, dev.d, scheme, dev.c_z, cfg.divisor);
    std::string config = device_config(cfg) + " scheme=" + cfg.scheme;
    if (cfg.format == "json") {
        return header("estimate", config, cfg.seed) + r.to_json() + "\n";
    }
    Table table({"quantity", "value"});
    auto row = [&](const std::string &k, const std::string &v) { table.add({k, v}, {false, true}); };
    row("n_logical", std::to_string(r.n_logical));
    row("p_round", sci(r.clifford.p_round));
    row("n_clifford", sci(r.clifford.n_clifford));
    row("n_rotation", std::to_string(r.rotation.n_rotation));
    row("pec_overhead", num(r.rotation.pec_overhead));
    row("qv_nisq", std::to_string(r.qv.m_nisq));
    row("qv_star", std::to_string(r.qv.log2_vq_star));
    return header("estimate", config, cfg.seed) + table.render("csv");
}

std::string cmd_compare(const RunConfig &cfg) {
    DeviceConfig dev = device(cfg);
    FtqcComparison cmp = ftqc_comparison(cfg.n_phys, dev.p, dev.d, dev.c_z);
    Table table({"architecture", "logical_qubits", "clocks_per_rotation"});
    for (const FtqcRow &row : cmp.rows) {
        table.add({row.architecture, std::to_string(row.logical_qubits), std::to_string(row.clocks_per_rotation)},
                  {false, true, true});
    }
    return header("compare", device_config(cfg), cfg.seed) + "# injected_error=" + sci(cmp.injected_error) +
           " distilled_error=" + sci(cmp.distilled_error) + " t_count=" + std::to_string(cmp.t_count) + "\n" +
           table.render(cfg.format);
}

std::string cmd_apps(const RunConfig &cfg) {
    DeviceConfig dev = device(cfg);
    int64_t n = max_logical_qubits(cfg.n_phys, dev.d, LayoutScheme::COMPACT);
    RotationBudget budget = rotation_budget(dev.p, dev.c_z);
    ApplicationSizing a = application_sizing(n, budget.n_rotation);
    Table table({"application", "size", "rotations_per_unit", "repetitions"});
    table.add({"hubbard", std::to_string(a.hubbard.sites), std::to_string(a.hubbard.rotations_per_step),
               std::to_string(a.hubbard.trotter_steps)},
              {false, true, true, true});
    table.add({"qaoa", std::to_string(a.qaoa.nodes), std::to_string(a.qaoa.rotations_per_layer),
               std::to_string(a.qaoa.depth)},
              {false, true, true, true});
    return header("apps", device_config(cfg), cfg.seed) + table.render(cfg.format);
}

std::string cmd_layout(const RunConfig &cfg) {
    check_distances(cfg.ds);
    if (cfg.ds.size() != 1) {
        throw ConfigError("layout takes a single --d");
    }
    return header("layout", "d=" + join(cfg.ds), cfg.seed) + build_layout(cfg.ds[0]).to_json() + "\n";
}

std::string cmd_rus(const RunConfig &cfg) {
    if (!(cfg.p_z1 >= 0 && cfg.p_z1 < 0.5)) {
        throw ConfigError("--p-z1 must lie in [0, 1/2)");
    }
    if (cfg.samples == 0) {
        throw ConfigError("--samples must be positive");
    }
    RusModel model{0.5, cfg.p_z1};
    std::mt19937_64 rng = shot_stream(cfg.seed, 0);
    double steps = 0, steps_sq = 0;
    uint64_t flips = 0;
    for (uint64_t k = 0; k < cfg.samples; k++) {
        RusSample s = simulate_rus(model, rng);
        steps += s.steps;
        steps_sq += (double)s.steps * s.steps;
        flips += s.z_flip;
    }
    double n = (double)cfg.samples;
    double mean = steps / n;
    Table table({"quantity", "value"});
    auto row = [&](const std::string &k, const std::string &v) { table.add({k, v}, {false, true}); };
    row("mean_steps_series", num(rus_mean_steps()));
    row("mean_steps_sampled", num(mean));
    row("sigma_steps", sci(std::sqrt((steps_sq / n - mean * mean) / n)));
    row("p_z_exact", sci(rus_error_exact(cfg.p_z1)));
    row("p_z_sampled", sci((double)flips / n));
    row("sigma_p_z", sci(binomial_sigma(flips, cfg.samples)));
    return header("rus", "p_z1=" + num(cfg.p_z1) + " samples=" + std::to_string(cfg.samples), cfg.seed) +
           table.render(cfg.format);
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulation and resource estimation for partially fault-tolerant quantum computing", "star"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--seed", cfg.seed, "Random seed");
        sub->add_option("--threads", cfg.threads, "Worker threads (default: STAR_THREADS or all cores)");
        sub->add_option("--out", cfg.out_path, "Write output to this file");
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };
    auto grid = [&](CLI::App *sub, std::vector<int> ds, std::vector<double> ps) {
        cfg.ds = ds;
        cfg.ps = ps;
        sub->add_option("--d", cfg.ds, "Code distances (comma separated)")->delimiter(',');
        sub->add_option("--p", cfg.ps, "Physical error rates (comma separated)")->delimiter(',');
    };

    CLI::App *memory = app.add_subcommand("memory", "Logical error rates of surface-code memory");
    common(memory);
    memory->add_option("--shots", cfg.shots, "Shots per (d, p)");
    CLI::App *inject = app.add_subcommand("inject", "Ancilla-state injection: Monte Carlo or exact coefficients");
    common(inject);
    inject->add_option("--shots", cfg.shots, "Shots per (d, p)");
    inject->add_option("--variant", cfg.variant, "direct, indirect_two_cnot or indirect_ancilla");
    inject->add_flag("--oracle", cfg.oracle, "Exact first-order coefficients from single-fault replay");
    CLI::App *fit = app.add_subcommand("fit", "Fit C and p_th to memory results");
    common(fit);
    fit->add_option("--in", cfg.in_path, "CSV written by the memory command");
    fit->add_flag("--reference", cfg.reference, "Print the bundled reference fit");
    CLI::App *estimate = app.add_subcommand("estimate", "Resource report for a device");
    common(estimate);
    CLI::App *compare = app.add_subcommand("compare", "Comparison with distillation-based layouts");
    common(compare);
    CLI::App *apps = app.add_subcommand("apps", "Hubbard and QAOA problem sizes");
    common(apps);
    for (CLI::App *sub : {estimate, compare, apps}) {
        sub->add_option("--n-phys", cfg.n_phys, "Physical qubits");
        sub->add_option("--variant", cfg.variant, "Injection variant setting the rotation error");
    }
    estimate->add_option("--scheme", cfg.scheme, "4n, 3n, 2n, compact or intermediate");
    estimate->add_option("--fit", cfg.fit_path, "JSON from the fit command (default: reference fit)");
    estimate->add_option("--divisor", cfg.divisor, "Divide the Clifford budget by this factor");
    CLI::App *layout = app.add_subcommand("layout", "Dump the code layout as JSON");
    common(layout);
    CLI::App *rus = app.add_subcommand("rus", "Repeat-until-success rotation statistics");
    common(rus);
    rus->add_option("--p-z1", cfg.p_z1, "Phase-flip probability per attempt");
    rus->add_option("--samples", cfg.samples, "Sampled RUS runs");

    // Defaults differ per command, so they are applied before parsing.
    std::string first = args.empty() ? "" : args[0];
    if (first == "memory") {
        grid(memory, {3}, {1e-3});
    } else if (first == "inject") {
        grid(inject, {3}, {1e-4});
    } else if (first == "estimate" || first == "compare" || first == "apps") {
        grid(first == "estimate" ? estimate : first == "compare" ? compare : apps, {7}, {1e-4});
    } else if (first == "layout") {
        grid(layout, {3}, {0});
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : EXIT_CONFIG_ERROR;
    }

    try {
        std::string result;
        if (memory->parsed()) {
            result = cmd_memory(cfg);
        } else if (inject->parsed()) {
            result = cmd_inject(cfg);
        } else if (fit->parsed()) {
            result = cmd_fit(cfg);
        } else if (estimate->parsed()) {
            result = cmd_estimate(cfg);
        } else if (compare->parsed()) {
            result = cmd_compare(cfg);
        } else if (apps->parsed()) {
            result = cmd_apps(cfg);
        } else if (layout->parsed()) {
            result = cmd_layout(cfg);
        } else if (rus->parsed()) {
            result = cmd_rus(cfg);
        }
        if (cfg.out_path.empty()) {
            out << result;
        } else {
            std::ofstream file(cfg.out_path);
            if (!file) {
                throw ConfigError("cannot write " + cfg.out_path);
            }
            file << result;
        }
        return 0;
    } catch (const ScheduleInvalidError &e) {
        err << "error: schedule invalid: " << e.what() << "\n";
        return EXIT_SCHEDULE_INVALID;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_CONFIG_ERROR;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_CONFIG_ERROR;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace star
