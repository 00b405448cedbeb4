// rates.cpp — Hadamard-transform conversions between rates, eigenvalues
// and probabilities

#include "rudiv/rates.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rudiv {

namespace {

void check_shape(int dim, const TimeGrid& grid, Eigen::Index rows, Eigen::Index cols,
                 Eigen::Index expected_cols, const char* what)
{
    if (dim < 2) {
        throw std::invalid_argument(std::string(what) + ": dimension must be >= 2");
    }
    if (rows != static_cast<Eigen::Index>(grid.size())) {
        throw std::invalid_argument(std::string(what) + ": row count does not match grid");
    }
    if (cols != expected_cols) {
        throw std::invalid_argument(std::string(what) + ": unexpected component count");
    }
}

void check_finite(const Eigen::MatrixXd& m, const char* what)
{
    if (!m.allFinite()) {
        throw std::invalid_argument(std::string(what) + ": non-finite entries");
    }
}

} // namespace

void RateProfile::validate() const
{
    check_shape(dim, grid, values.rows(), values.cols(),
                static_cast<Eigen::Index>(dim) * dim - 1, "RateProfile");
    check_finite(values, "RateProfile");
}

void Spectrum::validate() const
{
    check_shape(dim, grid, values.rows(), values.cols(),
                static_cast<Eigen::Index>(dim) * dim, "Spectrum");
    if (!values.allFinite()) {
        throw std::invalid_argument("Spectrum: non-finite entries");
    }
    for (Eigen::Index a = 0; a < values.cols(); ++a) {
        if (std::abs(values(0, a) - 1.0) > 1e-10) {
            throw std::invalid_argument("Spectrum: lambda(0) must be 1 for every component");
        }
    }
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
        if (std::abs(values(i, 0) - 1.0) > 1e-10) {
            throw std::invalid_argument("Spectrum: lambda_0(t) must be identically 1");
        }
    }
}

void ProbabilityProfile::validate() const
{
    check_shape(dim, grid, values.rows(), values.cols(),
                static_cast<Eigen::Index>(dim) * dim, "ProbabilityProfile");
    check_finite(values, "ProbabilityProfile");
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
        if (std::abs(values.row(i).sum() - 1.0) > kProbSumTol) {
            throw std::invalid_argument("ProbabilityProfile: row does not sum to 1");
        }
    }
    if (std::abs(values(0, 0) - 1.0) > kProbSumTol) {
        throw std::invalid_argument("ProbabilityProfile: p_0(0) must be 1");
    }
}

bool ProbabilityProfile::legitimate(double tol) const
{
    return values.minCoeff() >= -tol;
}

void CumulativeRates::validate() const
{
    check_shape(dim, grid, values.rows(), values.cols(),
                static_cast<Eigen::Index>(dim) * dim - 1, "CumulativeRates");
    check_finite(values, "CumulativeRates");
    if (values.row(0).cwiseAbs().maxCoeff() > 0.0) {
        throw std::invalid_argument("CumulativeRates: Gamma(0) must be 0");
    }
}

Spectrum lambdas_from_probs(const WeylBasis& basis, const ProbabilityProfile& p)
{
    p.validate();
    if (p.dim != basis.dim()) {
        throw std::invalid_argument("lambdas_from_probs: dimension mismatch");
    }
    Spectrum s{p.dim, p.grid, Eigen::MatrixXcd()};
    s.values = (basis.hadamard() * p.values.cast<std::complex<double>>().transpose()).transpose();
    s.values.col(0).setOnes();
    return s;
}

ProbabilityProfile probs_from_lambdas(const WeylBasis& basis, const Spectrum& s)
{
    s.validate();
    if (s.dim != basis.dim()) {
        throw std::invalid_argument("probs_from_lambdas: dimension mismatch");
    }
    const double inv = 1.0 / (basis.size());
    const Eigen::MatrixXcd raw = (basis.hadamard() * s.values.transpose()).transpose() * inv;
    const double residue = raw.imag().cwiseAbs().maxCoeff();
    if (residue > kImagResidueTol) {
        std::ostringstream msg;
        msg << "probs_from_lambdas: imaginary residue " << residue
            << " exceeds " << kImagResidueTol << "; spectrum is not Hermiticity-consistent";
        throw NonHermitianSpectrum(msg.str());
    }
    ProbabilityProfile p{s.dim, s.grid, raw.real()};
    return p;
}

Eigen::MatrixXcd mu_from_spectrum(const Spectrum& s)
{
    s.validate();
    const Eigen::Index n = s.values.rows();
    const Eigen::Index comps = s.values.cols();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index a = 0; a < comps; ++a) {
            if (std::abs(s.values(i, a)) < kSingularityFloor) {
                std::ostringstream msg;
                msg << "mu_from_spectrum: |lambda_" << a << "| below singularity floor at t="
                    << s.grid[static_cast<std::size_t>(i)];
                throw SpectrumSingularity(msg.str());
            }
        }
    }
    Eigen::MatrixXcd mu(n, comps);
    mu.col(0).setZero();
    for (Eigen::Index a = 1; a < comps; ++a) {
        const Eigen::VectorXcd deriv = grid_derivative(s.grid, Eigen::VectorXcd(s.values.col(a)));
        mu.col(a) = deriv.cwiseQuotient(s.values.col(a));
    }
    return mu;
}

RateProfile rates_from_mu(const WeylBasis& basis, const TimeGrid& grid,
                          const Eigen::MatrixXcd& mu)
{
    const Eigen::Index n = static_cast<Eigen::Index>(grid.size());
    const Eigen::Index comps = basis.size();
    if (mu.rows() != n || mu.cols() != comps) {
        throw std::invalid_argument("rates_from_mu: mu shape does not match grid/basis");
    }
    if (mu.col(0).cwiseAbs().maxCoeff() > kImagResidueTol) {
        throw std::invalid_argument("rates_from_mu: mu_0 must be identically 0");
    }
    const double inv = 1.0 / basis.size();
    const Eigen::MatrixXcd raw = (basis.hadamard() * mu.transpose()).transpose() * inv;
    const double residue = raw.imag().cwiseAbs().maxCoeff();
    if (residue > kImagResidueTol) {
        std::ostringstream msg;
        msg << "rates_from_mu: imaginary residue " << residue << " exceeds " << kImagResidueTol;
        throw NonRealRates(msg.str());
    }
    // gamma_0 recovered from row 0 must equal -sum of the rest; row 0 of H is
    // all ones, so with mu_0 = 0 this is an algebraic identity.
    const Eigen::VectorXd gamma0 = raw.col(0).real();
    RateProfile r{basis.dim(), grid, raw.rightCols(comps - 1).real(), {}};
    const double mismatch = (gamma0 + r.values.rowwise().sum()).cwiseAbs().maxCoeff();
    if (mismatch > 1e-9) {
        std::ostringstream msg;
        msg << "rates_from_mu: gamma_0 != -sum gamma_k, mismatch " << mismatch;
        throw NonRealRates(msg.str());
    }
    return r;
}

Eigen::VectorXd gamma0_series(const RateProfile& r)
{
    return -r.values.rowwise().sum();
}

CumulativeRates cumulative(const RateProfile& r)
{
    r.validate();
    CumulativeRates g{r.dim, r.grid, Eigen::MatrixXd(r.values.rows(), r.values.cols())};
    for (Eigen::Index k = 0; k < r.values.cols(); ++k) {
        g.values.col(k) = trapezoid_cumulative(r.grid, Eigen::VectorXd(r.values.col(k)));
    }
    return g;
}

Spectrum spectrum_from_cumulative(const WeylBasis& basis, const CumulativeRates& g)
{
    g.validate();
    if (g.dim != basis.dim()) {
        throw std::invalid_argument("spectrum_from_cumulative: dimension mismatch");
    }
    const Eigen::Index n = g.values.rows();
    const Eigen::Index comps = basis.size();
    Spectrum s{g.dim, g.grid, Eigen::MatrixXcd(n, comps)};
    s.values.col(0).setOnes();
    for (Eigen::Index b = 1; b < comps; ++b) {
        for (Eigen::Index i = 0; i < n; ++i) {
            std::complex<double> exponent = 0.0;
            for (Eigen::Index k = 1; k < comps; ++k) {
                exponent += (basis.hadamard()(b, k) - 1.0) * g.values(i, k - 1);
            }
            s.values(i, b) = std::exp(exponent);
        }
    }
    return s;
}

} // namespace rudiv
