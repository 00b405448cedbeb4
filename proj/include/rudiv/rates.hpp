// rates.hpp — the three equivalent time-dependent descriptions of a random
// unitary evolution (probabilities, map eigenvalues, decoherence rates) and
// the Hadamard-transform conversions between them.

#pragma once

#include <string>

#include <Eigen/Dense>

#include "rudiv/errors.hpp"
#include "rudiv/time_grid.hpp"
#include "rudiv/tolerances.hpp"
#include "rudiv/weyl.hpp"

namespace rudiv {

// Decoherence rates gamma_1..gamma_{d^2-1} per time point (row-per-time).
// Negative entries are allowed; gamma_0 = -sum_k gamma_k is always derived,
// never stored.
struct RateProfile {
    int dim = 2;
    TimeGrid grid;
    Eigen::MatrixXd values;
    std::string provenance;  // "scenario:<name>", "tabulated:<path>", or ad hoc

    void validate() const;
};

// Map eigenvalues lambda_0..lambda_{d^2-1}; lambda_0 == 1 at all times.
struct Spectrum {
    int dim = 2;
    TimeGrid grid;
    Eigen::MatrixXcd values;

    void validate() const;
};

// Mixing probabilities p_0..p_{d^2-1}; rows sum to 1, p_0(0) = 1.
struct ProbabilityProfile {
    int dim = 2;
    TimeGrid grid;
    Eigen::MatrixXd values;

    void validate() const;
    // All entries >= -tol at all times; a false value flags an illegitimate
    // generator rather than an error.
    bool legitimate(double tol = kProbNonnegTol) const;
};

// Running integrals Gamma_k(t) of the rates; Gamma_k(0) = 0.
struct CumulativeRates {
    int dim = 2;
    TimeGrid grid;
    Eigen::MatrixXd values;

    void validate() const;
};

// lambda(t) = H p(t), pointwise in time.
Spectrum lambdas_from_probs(const WeylBasis& basis, const ProbabilityProfile& p);

// p(t) = H lambda(t) / d^2.  Throws NonHermitianSpectrum when the imaginary
// residue of any probability exceeds tolerance.
ProbabilityProfile probs_from_lambdas(const WeylBasis& basis, const Spectrum& s);

// mu_alpha = lambda_alpha' / lambda_alpha by finite differences on the grid;
// mu_0 is identically 0.  Throws SpectrumSingularity when |lambda| falls
// below the singularity floor.
Eigen::MatrixXcd mu_from_spectrum(const Spectrum& s);

// gamma_alpha = (1/d^2) sum_beta H_{alpha beta} mu_beta for alpha >= 1.
// Requires mu_0 = 0; throws NonRealRates on imaginary residue.
RateProfile rates_from_mu(const WeylBasis& basis, const TimeGrid& grid,
                          const Eigen::MatrixXcd& mu);

// gamma_0(t) = -sum_{k>=1} gamma_k(t).
Eigen::VectorXd gamma0_series(const RateProfile& r);

// Gamma_k(t) by composite trapezoid.
CumulativeRates cumulative(const RateProfile& r);

// lambda_beta(t) = exp[sum_{k>=1} (H_{beta k} - 1) Gamma_k(t)].  The -1 in the
// exponent is the identity-component counterweight -sum_k Gamma_k; it makes
// constant rates reproduce the semigroup exp(t L) exactly and the round trip
// rates -> Gamma -> lambda -> mu -> rates the identity.
Spectrum spectrum_from_cumulative(const WeylBasis& basis, const CumulativeRates& g);

} // namespace rudiv
