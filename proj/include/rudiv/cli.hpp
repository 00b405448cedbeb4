// cli.hpp — command implementations behind the rudiv executable; exposed as
// library functions so they can be driven in-process by tests.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rudiv {

struct RunConfig {
    int dim = 0;                     // 0 = infer from scenario / rate table
    std::string scenario;            // builtin name, or empty when rates_path is set
    double c = 1.0;
    std::string rates_path;
    double t_max = 5.0;
    int steps = 500;                 // number of grid points
    std::string grid_kind = "uniform";  // "uniform" | "log"
    int pairs = 20;
    int trials = 1000;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
    std::vector<std::string> formats = {"csv", "json"};
};

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitModelError = 3;

// Writes report.json and profiles.csv. Exit 2 on malformed input, 3 on an
// inconsistent rate table (non-real spectrum or singularity).
int cmd_classify(const RunConfig& config);

// Writes witness.csv and witness.json; requires a seed. Repeated runs with
// the same config and seed produce byte-identical JSON.
int cmd_witness(const RunConfig& config);

// Writes plot-ready CSVs of lambda(t), p(t), gamma(t), V(t) and the process
// matrices at the first, middle and last grid times.
int cmd_export(const RunConfig& config);

} // namespace rudiv
