// divisibility.hpp — k-positivity certificates for Weyl-diagonal maps and
// the per-time / global non-Markovianity-degree classification built on them.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rudiv/channels.hpp"
#include "rudiv/rates.hpp"
#include "rudiv/weyl.hpp"

namespace rudiv {

// Sufficient certificate: with N strict negatives of total weight sum(c) and
// kN < d, the split map is k-positive when every b_i >= k/(d-kN) * sum(c).
// A failed inequality at level k additionally witnesses "not (k+1)-positive";
// callers read that off via k_certified/positivity_upper below.
bool k_positivity_certificate(const std::vector<double>& b, const std::vector<double>& c,
                              int dim, int k);

// Every d-subset of rates has nonnegative sum, evaluated as the sum of the d
// smallest rates; sufficient for P-divisibility.
bool p_divisibility_condition(const Eigen::VectorXd& rates, int dim);

// d = 3 only: gamma_{i1} + 2 gamma_{i2} >= 0 for all ordered pairs i1 != i2;
// sufficient for 2-divisibility.
bool two_divisibility_condition(const Eigen::VectorXd& rates);

// d = 2 only: the map with eigenvalues lambda (the three non-identity
// components) is CP iff lambda_1 + lambda_2 <= 1 + lambda_3 and cyclic
// permutations. The condition set is permutation symmetric.
bool qubit_cp_map_condition(const Eigen::Vector3d& lambda);

// sum_k gamma_k >= 0, i.e. -gamma_0 >= 0; rules out growth of the volume of
// accessible states.
bool geometric_condition(const Eigen::VectorXd& rates);

struct DivisibilityCertificate {
    double time = 0.0;
    bool cp_divisible = false;          // all rates >= 0 at this time
    int k_certified = 0;                // largest certified k; d when CP
    int positivity_upper = 0;           // bound from the failed inequality alone:
                                        // the smallest violated level k witnesses
                                        // "not (k+1)-positive"; d when none fails
    bool p_condition = false;
    std::optional<bool> two_div_condition;   // d = 3 only
    std::optional<bool> triple_condition;    // d = 3 only
    bool geometric = false;
};

struct NmdBracket {
    int divisibility_lower = 0;   // certified k-divisibility over all times
    int divisibility_upper = 0;   // from necessity violations and the rate sign test
    int nmd_lower = 0;            // d - divisibility_upper
    int nmd_upper = 0;            // d - divisibility_lower
    std::optional<double> first_cp_violation;
    std::optional<double> first_necessity_violation;
    std::optional<double> first_p_violation;
    std::optional<double> first_two_div_violation;
    std::optional<double> first_triple_violation;
    std::optional<double> first_geometric_violation;
};

struct DivisibilityReport {
    int dim = 2;
    std::vector<DivisibilityCertificate> certificates;
    NmdBracket bracket;
    bool cp_divisible_everywhere = false;
    bool p_condition_everywhere = false;
    std::string summary;
};

// Per-time certificates plus the global bracket. Deterministic and
// grid-order independent.
DivisibilityReport classify(const WeylBasis& basis, const RateProfile& rates);

} // namespace rudiv
