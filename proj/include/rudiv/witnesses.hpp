// witnesses.hpp — independent numerical oracles: Choi positivity, Schmidt
// rank-k falsifiers, trace-distance and entropy monotonicity, and the volume
// measure of accessible states.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rudiv/channels.hpp"
#include "rudiv/rates.hpp"
#include "rudiv/weyl.hpp"

namespace rudiv {

// Choi matrix of a Weyl-diagonal map, normalized to trace d for channels.
// Its eigenvalues are exactly {d * a_alpha} with the vectorized Weyl
// operators as eigenvectors.
struct ChoiMatrix {
    int dim = 2;
    Eigen::MatrixXcd entries;  // d^2 x d^2 Hermitian
};

ChoiMatrix choi(const WeylBasis& basis, const DiagonalMap& m);

// CP test through the Choi eigenvalue route; the coefficient sign test is the
// independent cross-check (they must agree on every input).
bool cp_check(const WeylBasis& basis, const DiagonalMap& m);
bool coefficients_nonnegative(const DiagonalMap& m, double tol = kPsdTol);

struct SchmidtViolation {
    int k = 0;
    double value = 0.0;          // <psi|C|psi> < 0
    Eigen::VectorXcd witness;    // unit vector of Schmidt rank <= k
};

// Searches for a Schmidt-rank-<=k unit vector with negative Choi expectation
// via shifted power iteration with rank-k truncation after each step, from
// seeded random starts plus the deterministic vectorized-Weyl witnesses of
// the negative coefficients.  A returned violation proves the map is not
// k-positive; finding none proves nothing.  The search stops at the first
// certified violation.
std::optional<SchmidtViolation> k_positivity_falsifier(const WeylBasis& basis,
                                                       const DiagonalMap& m, int k,
                                                       int trials, std::uint64_t seed);

// Trace distance ||Lambda_t(rho1 - rho2)||_tr at every grid point and its
// finite-difference derivative; nonpositive derivatives are the BLP test.
Eigen::VectorXd blp_distance_series(const WeylBasis& basis, const Spectrum& s,
                                    const DensityMatrix& rho1, const DensityMatrix& rho2);
Eigen::VectorXd blp_derivative_series(const WeylBasis& basis, const Spectrum& s,
                                      const DensityMatrix& rho1, const DensityMatrix& rho2);
double blp_derivative(const WeylBasis& basis, const Spectrum& s, const DensityMatrix& rho1,
                      const DensityMatrix& rho2, std::size_t t_index);

double von_neumann_entropy(const Eigen::MatrixXcd& rho);
Eigen::VectorXd entropy_series(const WeylBasis& basis, const Spectrum& s,
                               const DensityMatrix& rho);
Eigen::VectorXd entropy_derivative_series(const WeylBasis& basis, const Spectrum& s,
                                          const DensityMatrix& rho);
double entropy_derivative(const WeylBasis& basis, const Spectrum& s, const DensityMatrix& rho,
                          std::size_t t_index);

// Volume proxy V(t) = prod_{alpha>=1} |lambda_alpha(t)| for the image of the
// state set; the measure is the accumulated positive variation of the sampled
// series (trapezoid integral of the positive part of the piecewise-linear
// derivative), so a monotone nonincreasing V gives exactly 0.
struct VolumeTrace {
    Eigen::VectorXd v;
    double measure = 0.0;
};

VolumeTrace volume_measure(const Spectrum& s);

// Reproducible Ginibre state: G G^dag / tr, entries from a hand-rolled
// Box-Muller so byte-identical output does not depend on the standard
// library's distribution implementation.
DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng);

struct WitnessViolation {
    std::string kind;     // "blp" | "entropy" | "volume"
    double time = 0.0;
    double magnitude = 0.0;
    int subject = 0;      // pair or state index; interval index for volume
};

// Full monotonicity sweep over seeded random state pairs/states.
struct WitnessTrace {
    TimeGrid grid;
    Eigen::MatrixXd distances;             // rows: times, cols: pairs
    Eigen::MatrixXd distance_derivatives;
    Eigen::MatrixXd entropies;             // rows: times, cols: states
    Eigen::MatrixXd entropy_derivatives;
    Eigen::VectorXd volume;
    double volume_measure = 0.0;
    std::vector<WitnessViolation> violations;  // sorted by time
};

WitnessTrace run_witness_suite(const WeylBasis& basis, const Spectrum& s, int pairs,
                               std::uint64_t seed);

} // namespace rudiv
