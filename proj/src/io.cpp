// io.cpp

#include "rudiv/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace rudiv {

namespace {

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

double parse_double(const std::string& field, const std::filesystem::path& path)
{
    const char* begin = field.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || (end != nullptr && *end != '\0' && *end != '\r')) {
        throw CsvError(path.string() + ": cannot parse number '" + field + "'");
    }
    return value;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw CsvError(path.string() + ": cannot open file");
    }
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw CsvError(path.string() + ": empty file, expected a header row");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    table.header = split(line, ',');
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != table.header.size()) {
            throw CsvError(path.string() + ": row has " + std::to_string(fields.size())
                           + " fields, header has " + std::to_string(table.header.size()));
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) {
            row.push_back(parse_double(f, path));
        }
        table.rows.push_back(std::move(row));
    }
    if (table.rows.size() < 2) {
        throw CsvError(path.string() + ": need at least 2 data rows");
    }
    return table;
}

TimeGrid grid_from_rows(const CsvTable& table, const std::filesystem::path& path)
{
    std::vector<double> pts;
    pts.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        pts.push_back(row[0]);
    }
    try {
        return TimeGrid(std::move(pts));
    } catch (const std::invalid_argument& e) {
        throw CsvError(path.string() + ": " + e.what());
    }
}

int dim_from_component_count(std::size_t count, bool squares, const std::filesystem::path& path)
{
    // squares: count == d^2; otherwise count == d^2 - 1
    for (int d = 2; d <= 64; ++d) {
        const std::size_t expect = squares ? static_cast<std::size_t>(d) * d
                                           : static_cast<std::size_t>(d) * d - 1;
        if (expect == count) return d;
    }
    throw CsvError(path.string() + ": column count " + std::to_string(count)
                   + " does not match any dimension");
}

void write_lines(const std::filesystem::path& path, const std::string& content)
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

nlohmann::json grid_to_json(const TimeGrid& grid)
{
    return nlohmann::json(grid.points);
}

TimeGrid grid_from_json(const nlohmann::json& j)
{
    return TimeGrid(j.get<std::vector<double>>());
}

nlohmann::json real_matrix_to_json(const Eigen::MatrixXd& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json complex_matrix_to_json(const Eigen::MatrixXcd& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_rate_profile_csv(const std::filesystem::path& path, const RateProfile& r)
{
    r.validate();
    std::ostringstream out;
    out << "t";
    for (Eigen::Index k = 1; k <= r.values.cols(); ++k) {
        out << ",gamma_" << k;
    }
    out << "\n";
    for (Eigen::Index i = 0; i < r.values.rows(); ++i) {
        out << format_double(r.grid[static_cast<std::size_t>(i)]);
        for (Eigen::Index k = 0; k < r.values.cols(); ++k) {
            out << ',' << format_double(r.values(i, k));
        }
        out << "\n";
    }
    write_lines(path, out.str());
}

RateProfile read_rate_profile_csv(const std::filesystem::path& path)
{
    const CsvTable table = read_csv(path);
    if (table.header.empty() || table.header[0] != "t") {
        throw CsvError(path.string() + ": first header column must be 't'");
    }
    const int dim = dim_from_component_count(table.header.size() - 1, false, path);
    for (std::size_t k = 1; k < table.header.size(); ++k) {
        if (table.header[k] != "gamma_" + std::to_string(k)) {
            throw CsvError(path.string() + ": expected header column 'gamma_"
                           + std::to_string(k) + "', got '" + table.header[k] + "'");
        }
    }
    RateProfile r;
    r.dim = dim;
    r.grid = grid_from_rows(table, path);
    r.provenance = "tabulated:" + path.string();
    r.values.resize(static_cast<Eigen::Index>(table.rows.size()),
                    static_cast<Eigen::Index>(table.header.size() - 1));
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        for (std::size_t k = 1; k < table.header.size(); ++k) {
            r.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k - 1)) =
                table.rows[i][k];
        }
    }
    r.validate();
    return r;
}

void write_probability_profile_csv(const std::filesystem::path& path,
                                   const ProbabilityProfile& p)
{
    p.validate();
    std::ostringstream out;
    out << "t";
    for (Eigen::Index a = 0; a < p.values.cols(); ++a) {
        out << ",p_" << a;
    }
    out << "\n";
    for (Eigen::Index i = 0; i < p.values.rows(); ++i) {
        out << format_double(p.grid[static_cast<std::size_t>(i)]);
        for (Eigen::Index a = 0; a < p.values.cols(); ++a) {
            out << ',' << format_double(p.values(i, a));
        }
        out << "\n";
    }
    write_lines(path, out.str());
}

ProbabilityProfile read_probability_profile_csv(const std::filesystem::path& path)
{
    const CsvTable table = read_csv(path);
    if (table.header.empty() || table.header[0] != "t") {
        throw CsvError(path.string() + ": first header column must be 't'");
    }
    const int dim = dim_from_component_count(table.header.size() - 1, true, path);
    ProbabilityProfile p;
    p.dim = dim;
    p.grid = grid_from_rows(table, path);
    p.values.resize(static_cast<Eigen::Index>(table.rows.size()),
                    static_cast<Eigen::Index>(table.header.size() - 1));
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        for (std::size_t a = 1; a < table.header.size(); ++a) {
            p.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a - 1)) =
                table.rows[i][a];
        }
    }
    p.validate();
    return p;
}

void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s)
{
    s.validate();
    std::ostringstream out;
    out << "t";
    for (Eigen::Index a = 0; a < s.values.cols(); ++a) {
        out << ",lambda_" << a << "_re,lambda_" << a << "_im";
    }
    out << "\n";
    for (Eigen::Index i = 0; i < s.values.rows(); ++i) {
        out << format_double(s.grid[static_cast<std::size_t>(i)]);
        for (Eigen::Index a = 0; a < s.values.cols(); ++a) {
            out << ',' << format_double(s.values(i, a).real())
                << ',' << format_double(s.values(i, a).imag());
        }
        out << "\n";
    }
    write_lines(path, out.str());
}

Spectrum read_spectrum_csv(const std::filesystem::path& path)
{
    const CsvTable table = read_csv(path);
    if (table.header.empty() || table.header[0] != "t") {
        throw CsvError(path.string() + ": first header column must be 't'");
    }
    if ((table.header.size() - 1) % 2 != 0) {
        throw CsvError(path.string() + ": spectrum columns must come in re/im pairs");
    }
    const int dim = dim_from_component_count((table.header.size() - 1) / 2, true, path);
    Spectrum s;
    s.dim = dim;
    s.grid = grid_from_rows(table, path);
    const Eigen::Index comps = static_cast<Eigen::Index>((table.header.size() - 1) / 2);
    s.values.resize(static_cast<Eigen::Index>(table.rows.size()), comps);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        for (Eigen::Index a = 0; a < comps; ++a) {
            const double re = table.rows[i][static_cast<std::size_t>(1 + 2 * a)];
            const double im = table.rows[i][static_cast<std::size_t>(2 + 2 * a)];
            s.values(static_cast<Eigen::Index>(i), a) = {re, im};
        }
    }
    s.validate();
    return s;
}

void write_cumulative_csv(const std::filesystem::path& path, const CumulativeRates& g)
{
    g.validate();
    std::ostringstream out;
    out << "t";
    for (Eigen::Index k = 1; k <= g.values.cols(); ++k) {
        out << ",Gamma_" << k;
    }
    out << "\n";
    for (Eigen::Index i = 0; i < g.values.rows(); ++i) {
        out << format_double(g.grid[static_cast<std::size_t>(i)]);
        for (Eigen::Index k = 0; k < g.values.cols(); ++k) {
            out << ',' << format_double(g.values(i, k));
        }
        out << "\n";
    }
    write_lines(path, out.str());
}

void write_profiles_csv(const std::filesystem::path& path, const RateProfile& r,
                        const Spectrum& s, const ProbabilityProfile& p)
{
    std::ostringstream out;
    out << "t";
    for (Eigen::Index k = 1; k <= r.values.cols(); ++k) out << ",gamma_" << k;
    for (Eigen::Index a = 0; a < s.values.cols(); ++a) {
        out << ",lambda_" << a << "_re,lambda_" << a << "_im";
    }
    for (Eigen::Index a = 0; a < p.values.cols(); ++a) out << ",p_" << a;
    out << "\n";
    for (Eigen::Index i = 0; i < r.values.rows(); ++i) {
        out << format_double(r.grid[static_cast<std::size_t>(i)]);
        for (Eigen::Index k = 0; k < r.values.cols(); ++k) {
            out << ',' << format_double(r.values(i, k));
        }
        for (Eigen::Index a = 0; a < s.values.cols(); ++a) {
            out << ',' << format_double(s.values(i, a).real())
                << ',' << format_double(s.values(i, a).imag());
        }
        for (Eigen::Index a = 0; a < p.values.cols(); ++a) {
            out << ',' << format_double(p.values(i, a));
        }
        out << "\n";
    }
    write_lines(path, out.str());
}

nlohmann::json rate_profile_to_json(const RateProfile& r)
{
    return {{"dimension", r.dim},
            {"grid", grid_to_json(r.grid)},
            {"values", real_matrix_to_json(r.values)},
            {"provenance", r.provenance}};
}

RateProfile rate_profile_from_json(const nlohmann::json& j)
{
    RateProfile r;
    r.dim = j.at("dimension").get<int>();
    r.grid = grid_from_json(j.at("grid"));
    r.provenance = j.value("provenance", std::string{});
    const auto& rows = j.at("values");
    r.values.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(r.dim) * r.dim - 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto row = rows[i].get<std::vector<double>>();
        if (row.size() != static_cast<std::size_t>(r.values.cols())) {
            throw std::invalid_argument("rate_profile_from_json: bad row length");
        }
        for (std::size_t k = 0; k < row.size(); ++k) {
            r.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = row[k];
        }
    }
    r.validate();
    return r;
}

nlohmann::json spectrum_to_json(const Spectrum& s)
{
    return {{"dimension", s.dim},
            {"grid", grid_to_json(s.grid)},
            {"values", complex_matrix_to_json(s.values)}};
}

Spectrum spectrum_from_json(const nlohmann::json& j)
{
    Spectrum s;
    s.dim = j.at("dimension").get<int>();
    s.grid = grid_from_json(j.at("grid"));
    const auto& rows = j.at("values");
    s.values.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(s.dim) * s.dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != static_cast<std::size_t>(s.values.cols())) {
            throw std::invalid_argument("spectrum_from_json: bad row length");
        }
        for (std::size_t a = 0; a < rows[i].size(); ++a) {
            s.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a)) = {
                rows[i][a][0].get<double>(), rows[i][a][1].get<double>()};
        }
    }
    s.validate();
    return s;
}

nlohmann::json probability_profile_to_json(const ProbabilityProfile& p)
{
    return {{"dimension", p.dim},
            {"grid", grid_to_json(p.grid)},
            {"values", real_matrix_to_json(p.values)},
            {"legitimate", p.legitimate()}};
}

nlohmann::json report_to_json(const DivisibilityReport& report)
{
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : report.certificates) {
        nlohmann::json jc = {{"t", c.time},
                             {"cp_divisible", c.cp_divisible},
                             {"k_certified", c.k_certified},
                             {"positivity_upper", c.positivity_upper},
                             {"p_condition", c.p_condition},
                             {"geometric_condition", c.geometric}};
        if (c.two_div_condition) jc["two_div_condition"] = *c.two_div_condition;
        if (c.triple_condition) jc["triple_condition"] = *c.triple_condition;
        certs.push_back(std::move(jc));
    }
    auto opt = [](const std::optional<double>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    nlohmann::json bracket = {
        {"divisibility_lower", report.bracket.divisibility_lower},
        {"divisibility_upper", report.bracket.divisibility_upper},
        {"nmd_lower", report.bracket.nmd_lower},
        {"nmd_upper", report.bracket.nmd_upper},
        {"first_cp_violation", opt(report.bracket.first_cp_violation)},
        {"first_necessity_violation", opt(report.bracket.first_necessity_violation)},
        {"first_p_violation", opt(report.bracket.first_p_violation)},
        {"first_two_div_violation", opt(report.bracket.first_two_div_violation)},
        {"first_triple_violation", opt(report.bracket.first_triple_violation)},
        {"first_geometric_violation", opt(report.bracket.first_geometric_violation)}};
    return {{"dimension", report.dim},
            {"certificates", certs},
            {"bracket", bracket},
            {"cp_divisible_everywhere", report.cp_divisible_everywhere},
            {"p_condition_everywhere", report.p_condition_everywhere},
            {"summary", report.summary}};
}

void write_witness_csv(const std::filesystem::path& path, const WitnessTrace& trace)
{
    std::ostringstream out;
    out << "t";
    for (Eigen::Index p = 0; p < trace.distances.cols(); ++p) out << ",distance_pair_" << p;
    for (Eigen::Index p = 0; p < trace.entropies.cols(); ++p) out << ",entropy_state_" << p;
    out << ",V\n";
    for (Eigen::Index i = 0; i < trace.distances.rows(); ++i) {
        out << format_double(trace.grid[static_cast<std::size_t>(i)]);
        for (Eigen::Index p = 0; p < trace.distances.cols(); ++p) {
            out << ',' << format_double(trace.distances(i, p));
        }
        for (Eigen::Index p = 0; p < trace.entropies.cols(); ++p) {
            out << ',' << format_double(trace.entropies(i, p));
        }
        out << ',' << format_double(trace.volume[i]) << "\n";
    }
    write_lines(path, out.str());
}

nlohmann::json witness_trace_to_json(const WitnessTrace& trace)
{
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : trace.violations) {
        violations.push_back({{"kind", v.kind},
                              {"t", v.time},
                              {"magnitude", v.magnitude},
                              {"subject", v.subject}});
    }
    return {{"max_distance_derivative",
             trace.distance_derivatives.size() > 0 ? trace.distance_derivatives.maxCoeff() : 0.0},
            {"min_entropy_derivative",
             trace.entropy_derivatives.size() > 0 ? trace.entropy_derivatives.minCoeff() : 0.0},
            {"volume_measure", trace.volume_measure},
            {"violations", violations}};
}

void write_process_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXcd& p)
{
    std::ostringstream out;
    out << "row";
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
        out << ",col_" << j << "_re,col_" << j << "_im";
    }
    out << "\n";
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        out << i;
        for (Eigen::Index j = 0; j < p.cols(); ++j) {
            out << ',' << format_double(p(i, j).real()) << ',' << format_double(p(i, j).imag());
        }
        out << "\n";
    }
    write_lines(path, out.str());
}

nlohmann::json process_matrix_to_json(const Eigen::MatrixXcd& p)
{
    return complex_matrix_to_json(p);
}

nlohmann::json coefficients_to_json(const Eigen::VectorXd& coefficients)
{
    return nlohmann::json(
        std::vector<double>(coefficients.data(), coefficients.data() + coefficients.size()));
}

void write_text_file(const std::filesystem::path& path, const std::string& content)
{
    write_lines(path, content);
}

} // namespace rudiv
