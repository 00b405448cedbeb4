// io.hpp — CSV and JSON serialization of profiles, reports and witness
// traces.  All numbers are written with 17 significant digits so that a
// serialize/parse round trip is bit-exact at double precision.

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "rudiv/divisibility.hpp"
#include "rudiv/rates.hpp"
#include "rudiv/witnesses.hpp"

namespace rudiv {

// Malformed CSV input (bad header, ragged rows, unparsable numbers).
struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double x);

// Rate table: header "t,gamma_1,...,gamma_{d^2-1}", flat Weyl ordering; the
// dimension is inferred from the column count.
void write_rate_profile_csv(const std::filesystem::path& path, const RateProfile& r);
RateProfile read_rate_profile_csv(const std::filesystem::path& path);

void write_probability_profile_csv(const std::filesystem::path& path,
                                   const ProbabilityProfile& p);
ProbabilityProfile read_probability_profile_csv(const std::filesystem::path& path);

// Complex values as re/im column pairs.
void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s);
Spectrum read_spectrum_csv(const std::filesystem::path& path);

void write_cumulative_csv(const std::filesystem::path& path, const CumulativeRates& g);

// Combined per-time table: t, gamma_*, lambda_*_re/im, p_*.
void write_profiles_csv(const std::filesystem::path& path, const RateProfile& r,
                        const Spectrum& s, const ProbabilityProfile& p);

nlohmann::json rate_profile_to_json(const RateProfile& r);
RateProfile rate_profile_from_json(const nlohmann::json& j);
nlohmann::json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const nlohmann::json& j);
nlohmann::json probability_profile_to_json(const ProbabilityProfile& p);

nlohmann::json report_to_json(const DivisibilityReport& report);

// WitnessTrace CSV: t, one distance column per pair, one entropy column per
// state, then V(t).
void write_witness_csv(const std::filesystem::path& path, const WitnessTrace& trace);
nlohmann::json witness_trace_to_json(const WitnessTrace& trace);

void write_process_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXcd& p);
nlohmann::json process_matrix_to_json(const Eigen::MatrixXcd& p);
nlohmann::json coefficients_to_json(const Eigen::VectorXd& coefficients);

void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace rudiv
