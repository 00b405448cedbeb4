// main.cpp — rudiv command-line front end

#include <cstdint>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rudiv/cli.hpp"

namespace {

std::vector<std::string> split_formats(const std::string& spec)
{
    std::vector<std::string> out;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void add_common_options(CLI::App* cmd, rudiv::RunConfig& config, std::string& formats,
                        std::uint64_t& seed, bool& seed_set)
{
    cmd->add_option("--scenario", config.scenario,
                    "builtin scenario: pauli-tanh, qutrit-e3, unitary");
    cmd->add_option("--c", config.c, "scenario rate constant (inverse time units)");
    cmd->add_option("--rates", config.rates_path,
                    "rate-table CSV with header t,gamma_1,...,gamma_{d^2-1}");
    cmd->add_option("--d", config.dim, "system dimension (inferred when omitted)");
    cmd->add_option("--t-max", config.t_max, "grid end time");
    cmd->add_option("--steps", config.steps, "number of grid points");
    cmd->add_option("--grid", config.grid_kind, "grid spacing: uniform or log")
        ->check(CLI::IsMember({"uniform", "log"}));
    cmd->add_option("--pairs", config.pairs, "number of random state pairs / states");
    cmd->add_option("--trials", config.trials, "falsifier trials per positivity level");
    cmd->add_option("--seed", seed, "RNG seed (required for witness)")
        ->each([&seed_set](const std::string&) { seed_set = true; });
    cmd->add_option("--out", config.out_dir, "output directory");
    cmd->add_option("--format", formats, "comma-separated output formats (csv,json)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"random unitary evolutions: divisibility classification and witnesses"};
    app.require_subcommand(1);

    rudiv::RunConfig config;
    std::string formats = "csv,json";
    std::uint64_t seed = 0;
    bool seed_set = false;

    CLI::App* classify = app.add_subcommand(
        "classify", "classify divisibility degree and write report.json / profiles.csv");
    CLI::App* witness = app.add_subcommand(
        "witness", "run monotonicity witnesses and write witness.csv / witness.json");
    CLI::App* exportcmd = app.add_subcommand(
        "export", "write plot-ready profile CSVs and process matrices");
    for (CLI::App* cmd : {classify, witness, exportcmd}) {
        add_common_options(cmd, config, formats, seed, seed_set);
    }

    CLI11_PARSE(app, argc, argv);

    config.formats = split_formats(formats);
    if (seed_set) {
        config.seed = seed;
    }

    if (classify->parsed()) return rudiv::cmd_classify(config);
    if (witness->parsed()) return rudiv::cmd_witness(config);
    return rudiv::cmd_export(config);
}
