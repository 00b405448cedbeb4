// divisibility.cpp

#include "rudiv/divisibility.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rudiv/tolerances.hpp"

namespace rudiv {

bool k_positivity_certificate(const std::vector<double>& b, const std::vector<double>& c,
                              int dim, int k)
{
    if (k <= 0) {
        throw std::invalid_argument("k_positivity_certificate: k must be positive");
    }
    for (double v : b) {
        if (v < 0.0) throw std::invalid_argument("k_positivity_certificate: b entries must be >= 0");
    }
    for (double v : c) {
        if (v < 0.0) throw std::invalid_argument("k_positivity_certificate: c entries must be >= 0");
    }
    const int n = static_cast<int>(c.size());
    if (static_cast<long>(k) * n >= dim) {
        return false;
    }
    if (n == 0) {
        return true;
    }
    const double c_sum = std::accumulate(c.begin(), c.end(), 0.0);
    const double b_min = b.empty() ? 0.0 : *std::min_element(b.begin(), b.end());
    const double bound = static_cast<double>(k) / (dim - static_cast<long>(k) * n) * c_sum;
    return b_min >= bound - kInequalityTol;
}

bool p_divisibility_condition(const Eigen::VectorXd& rates, int dim)
{
    if (rates.size() != static_cast<Eigen::Index>(dim) * dim - 1) {
        throw std::invalid_argument("p_divisibility_condition: rate vector length must be d^2-1");
    }
    std::vector<double> sorted(rates.data(), rates.data() + rates.size());
    std::partial_sort(sorted.begin(), sorted.begin() + dim, sorted.end());
    const double worst = std::accumulate(sorted.begin(), sorted.begin() + dim, 0.0);
    return worst >= -kInequalityTol;
}

bool two_divisibility_condition(const Eigen::VectorXd& rates)
{
    if (rates.size() != 8) {
        throw std::invalid_argument("two_divisibility_condition: d = 3 only (8 rates)");
    }
    for (Eigen::Index i = 0; i < rates.size(); ++i) {
        for (Eigen::Index j = 0; j < rates.size(); ++j) {
            if (i == j) continue;
            if (rates[i] + 2.0 * rates[j] < -kInequalityTol) {
                return false;
            }
        }
    }
    return true;
}

bool qubit_cp_map_condition(const Eigen::Vector3d& lambda)
{
    return lambda[0] + lambda[1] <= 1.0 + lambda[2] + kInequalityTol
        && lambda[1] + lambda[2] <= 1.0 + lambda[0] + kInequalityTol
        && lambda[2] + lambda[0] <= 1.0 + lambda[1] + kInequalityTol;
}

bool geometric_condition(const Eigen::VectorXd& rates)
{
    return rates.sum() >= -kInequalityTol;
}

namespace {

DivisibilityCertificate certify_time(const Eigen::VectorXd& gamma, int dim, double time)
{
    DivisibilityCertificate cert;
    cert.time = time;
    cert.cp_divisible = gamma.minCoeff() >= -kInequalityTol;
    cert.p_condition = p_divisibility_condition(gamma, dim);
    cert.geometric = geometric_condition(gamma);
    if (dim == 3) {
        cert.two_div_condition = two_divisibility_condition(gamma);
        cert.triple_condition = cert.p_condition;
    }

    if (cert.cp_divisible) {
        cert.k_certified = dim;
        cert.positivity_upper = dim;
        return cert;
    }

    const PhiDecomposition phi = phi_decomposition(gamma);
    // clamp roundoff negatives out of b before feeding the inequality
    std::vector<double> b = phi.b;
    for (double& v : b) v = std::max(v, 0.0);

    cert.k_certified = 0;
    cert.positivity_upper = dim;
    for (int k = 1; k <= dim; ++k) {
        if (static_cast<long>(k) * phi.negative_count() >= dim) {
            break;  // out of the theorem's regime; larger k stay out too
        }
        if (k_positivity_certificate(b, phi.c, dim, k)) {
            cert.k_certified = k;
        } else {
            cert.positivity_upper = k;  // violated at k => not (k+1)-positive
            break;
        }
    }
    return cert;
}

} // namespace

DivisibilityReport classify(const WeylBasis& basis, const RateProfile& rates)
{
    rates.validate();
    if (rates.dim != basis.dim()) {
        throw std::invalid_argument("classify: dimension mismatch");
    }
    const int dim = rates.dim;

    DivisibilityReport report;
    report.dim = dim;
    report.certificates.reserve(rates.grid.size());

    int lower = dim;
    int upper = dim;
    report.cp_divisible_everywhere = true;
    report.p_condition_everywhere = true;

    auto note_first = [](std::optional<double>& slot, double t) {
        if (!slot) slot = t;
    };

    for (std::size_t i = 0; i < rates.grid.size(); ++i) {
        const Eigen::VectorXd gamma = rates.values.row(static_cast<Eigen::Index>(i));
        DivisibilityCertificate cert = certify_time(gamma, dim, rates.grid[i]);

        lower = std::min(lower, cert.k_certified);
        upper = std::min(upper, cert.positivity_upper);
        if (!cert.cp_divisible) {
            report.cp_divisible_everywhere = false;
            note_first(report.bracket.first_cp_violation, cert.time);
            // a strict negative rate rules out CP-divisibility exactly
            upper = std::min(upper, dim - 1);
        }
        if (cert.positivity_upper < dim) {
            note_first(report.bracket.first_necessity_violation, cert.time);
        }
        if (!cert.p_condition) {
            report.p_condition_everywhere = false;
            note_first(report.bracket.first_p_violation, cert.time);
        }
        if (cert.two_div_condition && !*cert.two_div_condition) {
            note_first(report.bracket.first_two_div_violation, cert.time);
        }
        if (cert.triple_condition && !*cert.triple_condition) {
            note_first(report.bracket.first_triple_violation, cert.time);
        }
        if (!cert.geometric) {
            note_first(report.bracket.first_geometric_violation, cert.time);
        }
        report.certificates.push_back(std::move(cert));
    }

    report.bracket.divisibility_lower = lower;
    report.bracket.divisibility_upper = upper;
    report.bracket.nmd_lower = dim - upper;
    report.bracket.nmd_upper = dim - lower;

    std::ostringstream summary;
    if (report.cp_divisible_everywhere) {
        summary << "CP-divisible (Markovian) at every grid time; NMD = 0";
    } else {
        summary << "not CP-divisible (first negative rate at t="
                << *report.bracket.first_cp_violation << ")";
        if (report.p_condition_everywhere) {
            summary << "; P-divisible by the d-subset rate condition at every grid time";
        } else {
            summary << "; d-subset rate condition fails from t="
                    << *report.bracket.first_p_violation
                    << " (P-divisibility no longer certified)";
        }
        summary << "; NMD in [" << report.bracket.nmd_lower << ", "
                << report.bracket.nmd_upper << "]";
    }
    report.summary = summary.str();
    return report;
}

} // namespace rudiv
