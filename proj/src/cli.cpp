// cli.cpp — classify / witness / export command implementations

#include "rudiv/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "rudiv/channels.hpp"
#include "rudiv/divisibility.hpp"
#include "rudiv/errors.hpp"
#include "rudiv/io.hpp"
#include "rudiv/rates.hpp"
#include "rudiv/scenarios.hpp"
#include "rudiv/weyl.hpp"
#include "rudiv/witnesses.hpp"

namespace rudiv {

namespace {

namespace fs = std::filesystem;

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Everything a command needs: the rate profile plus the derived spectrum and
// probabilities. Scenario sources use their exact evaluators; rate tables go
// through the trapezoid pipeline.
struct EvolutionData {
    int dim = 2;
    std::unique_ptr<WeylBasis> basis;
    TimeGrid grid;
    RateProfile rates;
    Spectrum spectrum;
    ProbabilityProfile probs;
    std::string source;
    std::optional<double> c;
};

void validate_common(const RunConfig& config)
{
    if (!(config.t_max > 0.0)) {
        throw ConfigError("config: t-max must be positive");
    }
    if (config.steps < 2) {
        throw ConfigError("config: steps must be at least 2");
    }
    if (config.grid_kind != "uniform" && config.grid_kind != "log") {
        throw ConfigError("config: grid must be 'uniform' or 'log'");
    }
    if (config.scenario.empty() == config.rates_path.empty()) {
        throw ConfigError("config: exactly one of --scenario and --rates is required");
    }
    for (const auto& f : config.formats) {
        if (f != "csv" && f != "json") {
            throw ConfigError("config: unknown format '" + f + "'");
        }
    }
}

bool wants(const RunConfig& config, const char* format)
{
    return std::find(config.formats.begin(), config.formats.end(), format)
        != config.formats.end();
}

TimeGrid make_grid(const RunConfig& config)
{
    return config.grid_kind == "log" ? TimeGrid::log_spaced(config.t_max, config.steps)
                                     : TimeGrid::uniform(config.t_max, config.steps);
}

EvolutionData load_evolution(const RunConfig& config)
{
    EvolutionData data;
    if (!config.scenario.empty()) {
        const Scenario sc = scenario_by_name(config.scenario, config.c, config.dim);
        data.dim = sc.dim;
        data.basis = std::make_unique<WeylBasis>(data.dim);
        data.grid = make_grid(config);
        data.source = "scenario:" + sc.name;
        data.c = sc.c;
        data.rates = sc.rates(data.grid);
        data.spectrum = sc.spectrum(data.grid);
        data.probs = sc.probabilities(data.grid);
        return data;
    }

    data.rates = read_rate_profile_csv(config.rates_path);
    if (config.dim != 0 && config.dim != data.rates.dim) {
        throw ConfigError("config: --d " + std::to_string(config.dim)
                          + " does not match rate table dimension "
                          + std::to_string(data.rates.dim));
    }
    data.dim = data.rates.dim;
    data.basis = std::make_unique<WeylBasis>(data.dim);
    data.grid = data.rates.grid;
    data.source = "rates:" + config.rates_path;
    data.spectrum = spectrum_from_cumulative(*data.basis, cumulative(data.rates));
    data.probs = probs_from_lambdas(*data.basis, data.spectrum);
    return data;
}

nlohmann::json run_meta(const EvolutionData& data, const RunConfig& config)
{
    nlohmann::json meta = {{"dimension", data.dim},
                           {"source", data.source},
                           {"grid", {{"kind", config.grid_kind},
                                     {"t_max", data.grid.back()},
                                     {"points", data.grid.size()}}}};
    if (data.c) meta["c"] = *data.c;
    return meta;
}

int guarded(int (*body)(const RunConfig&), const RunConfig& config, const char* name)
{
    try {
        return body(config);
    } catch (const ConfigError& e) {
        std::cerr << name << ": " << e.what() << "\n";
        return kExitInputError;
    } catch (const CsvError& e) {
        std::cerr << name << ": " << e.what() << "\n";
        return kExitInputError;
    } catch (const NonHermitianSpectrum& e) {
        std::cerr << name << ": " << e.what() << "\n";
        return kExitModelError;
    } catch (const NonRealRates& e) {
        std::cerr << name << ": " << e.what() << "\n";
        return kExitModelError;
    } catch (const SpectrumSingularity& e) {
        std::cerr << name << ": " << e.what() << "\n";
        return kExitModelError;
    } catch (const std::invalid_argument& e) {
        std::cerr << name << ": " << e.what() << "\n";
        return kExitInputError;
    }
}

int classify_body(const RunConfig& config)
{
    validate_common(config);
    const EvolutionData data = load_evolution(config);

    const DivisibilityReport report = classify(*data.basis, data.rates);

    nlohmann::json j = report_to_json(report);
    j["run"] = run_meta(data, config);
    j["probabilities_legitimate"] = data.probs.legitimate();

    const fs::path out(config.out_dir);
    write_text_file(out / "report.json", j.dump(2) + "\n");
    if (wants(config, "csv")) {
        write_profiles_csv(out / "profiles.csv", data.rates, data.spectrum, data.probs);
    }
    std::cout << report.summary << "\n";
    return kExitOk;
}

int witness_body(const RunConfig& config)
{
    validate_common(config);
    if (!config.seed) {
        throw ConfigError("config: --seed is required for randomized witnesses");
    }
    if (config.pairs < 1) {
        throw ConfigError("config: pairs must be at least 1");
    }
    if (config.trials < 1) {
        throw ConfigError("config: trials must be at least 1");
    }
    const EvolutionData data = load_evolution(config);

    const WitnessTrace trace = run_witness_suite(*data.basis, data.spectrum, config.pairs,
                                                 *config.seed);

    // Falsifier runs on the Phi map at the grid time with the most negative
    // rate; on an everywhere-Markovian table that is just the first point.
    Eigen::Index worst_row = 0;
    double worst = data.rates.values.row(0).minCoeff();
    for (Eigen::Index i = 1; i < data.rates.values.rows(); ++i) {
        const double m = data.rates.values.row(i).minCoeff();
        if (m < worst) {
            worst = m;
            worst_row = i;
        }
    }
    const PhiDecomposition phi =
        phi_decomposition(Eigen::VectorXd(data.rates.values.row(worst_row)));
    const DiagonalMap phi_map{data.dim, phi.coefficients, MapKind::phi};

    nlohmann::json falsifier = {{"t", data.grid[static_cast<std::size_t>(worst_row)]},
                                {"per_k", nlohmann::json::array()}};
    for (int k = 1; k <= data.dim; ++k) {
        const auto violation =
            k_positivity_falsifier(*data.basis, phi_map, k, config.trials, *config.seed);
        nlohmann::json entry = {{"k", k}};
        if (violation) {
            entry["violation_value"] = violation->value;
        } else {
            entry["violation_value"] = nullptr;
        }
        falsifier["per_k"].push_back(std::move(entry));
    }

    nlohmann::json j = witness_trace_to_json(trace);
    j["run"] = run_meta(data, config);
    j["seed"] = *config.seed;
    j["pairs"] = config.pairs;
    j["trials"] = config.trials;
    j["falsifier"] = std::move(falsifier);

    const fs::path out(config.out_dir);
    write_text_file(out / "witness.json", j.dump(2) + "\n");
    if (wants(config, "csv")) {
        write_witness_csv(out / "witness.csv", trace);
    }
    std::cout << "witness violations: " << trace.violations.size() << "\n";
    return kExitOk;
}

int export_body(const RunConfig& config)
{
    validate_common(config);
    const EvolutionData data = load_evolution(config);
    const VolumeTrace volume = volume_measure(data.spectrum);

    const fs::path out(config.out_dir);
    const std::size_t n = data.grid.size();
    const std::size_t picks[3] = {0, (n - 1) / 2, n - 1};
    const char* labels[3] = {"t0", "tmid", "tmax"};

    if (wants(config, "csv")) {
        write_rate_profile_csv(out / "rates.csv", data.rates);
        write_spectrum_csv(out / "lambdas.csv", data.spectrum);
        write_probability_profile_csv(out / "probs.csv", data.probs);
        std::ostringstream vol;
        vol << "t,V\n";
        for (std::size_t i = 0; i < n; ++i) {
            vol << format_double(data.grid[i]) << ','
                << format_double(volume.v[static_cast<Eigen::Index>(i)]) << "\n";
        }
        write_text_file(out / "volume.csv", vol.str());
        for (int s = 0; s < 3; ++s) {
            const DiagonalMap channel{
                data.dim,
                Eigen::VectorXd(data.probs.values.row(static_cast<Eigen::Index>(picks[s]))),
                MapKind::channel};
            write_process_matrix_csv(out / (std::string("process_") + labels[s] + ".csv"),
                                     process_matrix(*data.basis, channel));
        }
    }

    if (wants(config, "json")) {
        nlohmann::json j = {{"run", run_meta(data, config)},
                            {"rates", rate_profile_to_json(data.rates)},
                            {"lambdas", spectrum_to_json(data.spectrum)},
                            {"probabilities", probability_profile_to_json(data.probs)},
                            {"volume", std::vector<double>(volume.v.data(),
                                                           volume.v.data() + volume.v.size())},
                            {"volume_measure", volume.measure}};
        nlohmann::json processes = nlohmann::json::array();
        for (int s = 0; s < 3; ++s) {
            const Eigen::VectorXd coeffs =
                data.probs.values.row(static_cast<Eigen::Index>(picks[s]));
            const DiagonalMap channel{data.dim, coeffs, MapKind::channel};
            processes.push_back({{"t", data.grid[picks[s]]},
                                 {"coefficients", coefficients_to_json(coeffs)},
                                 {"matrix", process_matrix_to_json(process_matrix(*data.basis, channel))}});
        }
        j["process_matrices"] = std::move(processes);
        write_text_file(out / "export.json", j.dump(2) + "\n");
    }
    return kExitOk;
}

} // namespace

int cmd_classify(const RunConfig& config)
{
    return guarded(classify_body, config, "classify");
}

int cmd_witness(const RunConfig& config)
{
    return guarded(witness_body, config, "witness");
}

int cmd_export(const RunConfig& config)
{
    return guarded(export_body, config, "export");
}

} // namespace rudiv
