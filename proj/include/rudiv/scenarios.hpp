// scenarios.hpp — built-in evolutions with exact closed-form evaluators, so
// finite-difference and quadrature errors can be measured against ground truth.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rudiv/rates.hpp"
#include "rudiv/time_grid.hpp"

namespace rudiv {

// One evolution given by mutually consistent exact evaluators.  All vectors
// are in flat Weyl order; pauli_to_flat maps the sigma_1, sigma_2, sigma_3
// labels of d = 2 onto flat indices (identity map for d = 3 scenarios).
struct Scenario {
    std::string name;
    int dim = 2;
    double c = 1.0;
    std::vector<int> pauli_to_flat;

    std::function<Eigen::VectorXd(double)> rates_at;       // length d^2-1
    std::function<Eigen::VectorXd(double)> cumulative_at;  // length d^2-1
    std::function<Eigen::VectorXcd(double)> lambdas_at;    // length d^2
    std::function<Eigen::VectorXd(double)> probs_at;       // length d^2

    RateProfile rates(const TimeGrid& grid) const;
    CumulativeRates cumulative(const TimeGrid& grid) const;
    Spectrum spectrum(const TimeGrid& grid) const;
    ProbabilityProfile probabilities(const TimeGrid& grid) const;
};

// Qubit evolution with rates (c/2, c/2, -(c/2) tanh(ct)) in Pauli labels;
// P-divisible but not CP-divisible for t > 0.
Scenario pauli_tanh(double c);

// Qutrit evolution with gamma_k = c/3 except on the commuting pair {4, 8},
// whose common rate is fixed by p_4 = p_8 = 0 and is negative for all t > 0.
Scenario qutrit_e3(double c);

// All rates zero; the identity evolution.
Scenario unitary(int dim);

// Markovian semigroup with constant rate g on the given flat Weyl indices.
Scenario semigroup(const std::string& name, int dim, double g, std::vector<int> indices);

struct SemigroupMixture {
    std::vector<Scenario> components;
    std::vector<double> weights;
};

// Two dephasing semigroups whose equal mixture reproduces pauli_tanh(c) as a
// process-matrix identity; the semigroup rate is c under this normalization.
SemigroupMixture pauli_tanh_mixture(double c);

// Three semigroups over the commuting pairs {1,2}, {3,6}, {5,7}; the equal
// mixture reproduces qutrit_e3(c).
SemigroupMixture qutrit_e3_mixture(double c);

// CLI-facing lookup: "pauli-tanh", "qutrit-e3", "unitary".
Scenario scenario_by_name(const std::string& name, double c, int dim);
std::vector<std::string> scenario_names();

} // namespace rudiv
