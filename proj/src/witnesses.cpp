// witnesses.cpp

#include "rudiv/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rudiv/errors.hpp"
#include "rudiv/tolerances.hpp"

namespace rudiv {

namespace {

// Weyl coefficients of X: x_alpha = Tr[U_alpha^dag X] / d, so X = sum x_alpha U_alpha.
Eigen::VectorXcd weyl_coefficients(const WeylBasis& basis, const Eigen::MatrixXcd& x)
{
    Eigen::VectorXcd coeffs(basis.size());
    for (int a = 0; a < basis.size(); ++a) {
        coeffs[a] = (basis.op(a).adjoint() * x).trace() / static_cast<double>(basis.dim());
    }
    return coeffs;
}

Eigen::MatrixXcd from_weyl_coefficients(const WeylBasis& basis, const Eigen::VectorXcd& coeffs)
{
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(basis.dim(), basis.dim());
    for (int a = 0; a < basis.size(); ++a) {
        x.noalias() += coeffs[a] * basis.op(a);
    }
    return x;
}

// Evolve X through the map with eigenvalues lambda(t_index).
Eigen::MatrixXcd evolve(const WeylBasis& basis, const Spectrum& s, std::size_t t_index,
                        const Eigen::VectorXcd& coeffs)
{
    Eigen::VectorXcd scaled = coeffs;
    for (int a = 0; a < basis.size(); ++a) {
        scaled[a] *= s.values(static_cast<Eigen::Index>(t_index), a);
    }
    return from_weyl_coefficients(basis, scaled);
}

double trace_norm_hermitian(const Eigen::MatrixXcd& m)
{
    const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
}

double standard_normal(std::mt19937_64& rng)
{
    // Box-Muller on raw 53-bit uniforms; implementation-defined std
    // distributions would break cross-toolchain reproducibility.
    double u1 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    u1 = std::max(u1, 1e-300);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::VectorXcd random_unit_vector(int n, std::mt19937_64& rng)
{
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) {
        const double re = standard_normal(rng);
        const double im = standard_normal(rng);
        v[i] = {re, im};
    }
    const double norm = v.norm();
    return norm > 0.0 ? Eigen::VectorXcd(v / norm) : Eigen::VectorXcd::Unit(n, 0);
}

// Best rank-k approximation of the d x d reshape of psi, renormalized.
Eigen::VectorXcd truncate_schmidt_rank(const Eigen::VectorXcd& psi, int dim, int k)
{
    if (k >= dim) {
        return psi.normalized();
    }
    Eigen::MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        m.row(i) = psi.segment(static_cast<Eigen::Index>(i) * dim, dim).transpose();
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd sv = svd.singularValues();
    for (int r = k; r < sv.size(); ++r) sv[r] = 0.0;
    const Eigen::MatrixXcd truncated =
        svd.matrixU() * sv.asDiagonal() * svd.matrixV().adjoint();
    Eigen::VectorXcd out(dim * dim);
    for (int i = 0; i < dim; ++i) {
        out.segment(static_cast<Eigen::Index>(i) * dim, dim) = truncated.row(i).transpose();
    }
    const double norm = out.norm();
    return norm > 1e-300 ? Eigen::VectorXcd(out / norm) : psi.normalized();
}

// Vectorized Weyl operator: the Choi eigenvector belonging to coefficient a_alpha.
Eigen::VectorXcd vectorized_weyl(const WeylBasis& basis, int alpha)
{
    const int d = basis.dim();
    Eigen::VectorXcd v(d * d);
    for (int i = 0; i < d; ++i) {
        v.segment(static_cast<Eigen::Index>(i) * d, d) = basis.op(alpha).col(i);
    }
    return v / std::sqrt(static_cast<double>(d));
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

ChoiMatrix choi(const WeylBasis& basis, const DiagonalMap& m)
{
    const int d = basis.dim();
    if (m.dim != d) {
        throw std::invalid_argument("choi: dimension mismatch");
    }
    ChoiMatrix c{d, Eigen::MatrixXcd::Zero(d * d, d * d)};
    // (id (x) m) applied to the unnormalized maximally entangled projector,
    // assembled block by block from the images of the matrix units.
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(d, d);
            unit(i, j) = 1.0;
            c.entries.block(i * d, j * d, d, d) = apply_map(basis, m, unit);
        }
    }
    return c;
}

bool cp_check(const WeylBasis& basis, const DiagonalMap& m)
{
    const ChoiMatrix c = choi(basis, m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(c.entries, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -kPsdTol;
}

bool coefficients_nonnegative(const DiagonalMap& m, double tol)
{
    return m.coefficients.minCoeff() >= -tol;
}

std::optional<SchmidtViolation> k_positivity_falsifier(const WeylBasis& basis,
                                                       const DiagonalMap& m, int k,
                                                       int trials, std::uint64_t seed)
{
    const int d = basis.dim();
    if (k < 1 || k > d) {
        throw std::invalid_argument("k_positivity_falsifier: need 1 <= k <= d");
    }
    const ChoiMatrix c = choi(basis, m);
    // shift so that power iteration converges toward the most negative eigenvalue
    const double shift = static_cast<double>(d) * m.coefficients.cwiseAbs().maxCoeff() + 1.0;
    const Eigen::MatrixXcd shifted =
        shift * Eigen::MatrixXcd::Identity(d * d, d * d) - c.entries;

    auto rayleigh = [&](const Eigen::VectorXcd& psi) {
        return (psi.adjoint() * c.entries * psi)(0).real();
    };

    std::optional<SchmidtViolation> best;
    auto consider = [&](Eigen::VectorXcd start) -> bool {
        Eigen::VectorXcd psi = truncate_schmidt_rank(start, d, k);
        double q = rayleigh(psi);
        for (int it = 0; it < kFalsifierMaxIterations; ++it) {
            psi = truncate_schmidt_rank(shifted * psi, d, k);
            const double q_next = rayleigh(psi);
            const bool converged = std::abs(q_next - q) < kFalsifierConvergence;
            q = q_next;
            if (converged) break;
        }
        if (q < -kFalsifierThreshold && (!best || q < best->value)) {
            best = SchmidtViolation{k, q, psi};
            return true;
        }
        return false;
    };

    // deterministic starts: vectorized Weyl eigenvectors of negative coefficients
    for (int alpha = 0; alpha < basis.size(); ++alpha) {
        if (m.coefficients[alpha] < 0.0 && consider(vectorized_weyl(basis, alpha))) {
            return best;
        }
    }
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(splitmix64(seed ^ static_cast<std::uint64_t>(trial)));
        if (consider(random_unit_vector(d * d, rng))) {
            return best;
        }
    }
    return best;
}

Eigen::VectorXd blp_distance_series(const WeylBasis& basis, const Spectrum& s,
                                    const DensityMatrix& rho1, const DensityMatrix& rho2)
{
    if (rho1.dim() != basis.dim() || rho2.dim() != basis.dim() || s.dim != basis.dim()) {
        throw std::invalid_argument("blp_distance_series: dimension mismatch");
    }
    const Eigen::VectorXcd coeffs =
        weyl_coefficients(basis, rho1.matrix() - rho2.matrix());
    Eigen::VectorXd out(static_cast<Eigen::Index>(s.grid.size()));
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        out[static_cast<Eigen::Index>(i)] = trace_norm_hermitian(evolve(basis, s, i, coeffs));
    }
    return out;
}

Eigen::VectorXd blp_derivative_series(const WeylBasis& basis, const Spectrum& s,
                                      const DensityMatrix& rho1, const DensityMatrix& rho2)
{
    return grid_derivative(s.grid, blp_distance_series(basis, s, rho1, rho2));
}

double blp_derivative(const WeylBasis& basis, const Spectrum& s, const DensityMatrix& rho1,
                      const DensityMatrix& rho2, std::size_t t_index)
{
    if (t_index >= s.grid.size()) {
        throw std::invalid_argument("blp_derivative: index out of range");
    }
    return blp_derivative_series(basis, s, rho1, rho2)[static_cast<Eigen::Index>(t_index)];
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double p = es.eigenvalues()[i];
        if (p > 0.0) {
            entropy -= p * std::log(p);
        }
    }
    return entropy;
}

Eigen::VectorXd entropy_series(const WeylBasis& basis, const Spectrum& s,
                               const DensityMatrix& rho)
{
    if (rho.dim() != basis.dim() || s.dim != basis.dim()) {
        throw std::invalid_argument("entropy_series: dimension mismatch");
    }
    const Eigen::VectorXcd coeffs = weyl_coefficients(basis, rho.matrix());
    Eigen::VectorXd out(static_cast<Eigen::Index>(s.grid.size()));
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        out[static_cast<Eigen::Index>(i)] = von_neumann_entropy(evolve(basis, s, i, coeffs));
    }
    return out;
}

Eigen::VectorXd entropy_derivative_series(const WeylBasis& basis, const Spectrum& s,
                                          const DensityMatrix& rho)
{
    return grid_derivative(s.grid, entropy_series(basis, s, rho));
}

double entropy_derivative(const WeylBasis& basis, const Spectrum& s, const DensityMatrix& rho,
                          std::size_t t_index)
{
    if (t_index >= s.grid.size()) {
        throw std::invalid_argument("entropy_derivative: index out of range");
    }
    return entropy_derivative_series(basis, s, rho)[static_cast<Eigen::Index>(t_index)];
}

VolumeTrace volume_measure(const Spectrum& s)
{
    s.validate();
    const Eigen::Index n = s.values.rows();
    VolumeTrace trace;
    trace.v.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double v = 1.0;
        for (Eigen::Index a = 1; a < s.values.cols(); ++a) {
            v *= std::abs(s.values(i, a));
        }
        trace.v[i] = v;
    }
    trace.measure = 0.0;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        trace.measure += std::max(trace.v[i + 1] - trace.v[i], 0.0);
    }
    return trace;
}

DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng)
{
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = {standard_normal(rng), standard_normal(rng)};
        }
    }
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint());
    return DensityMatrix::from_matrix(std::move(rho));
}

WitnessTrace run_witness_suite(const WeylBasis& basis, const Spectrum& s, int pairs,
                               std::uint64_t seed)
{
    if (pairs < 1) {
        throw std::invalid_argument("run_witness_suite: need at least one state pair");
    }
    s.validate();
    const Eigen::Index n = static_cast<Eigen::Index>(s.grid.size());

    WitnessTrace trace;
    trace.grid = s.grid;
    trace.distances.resize(n, pairs);
    trace.distance_derivatives.resize(n, pairs);
    trace.entropies.resize(n, pairs);
    trace.entropy_derivatives.resize(n, pairs);

    std::mt19937_64 rng(seed);
    for (int p = 0; p < pairs; ++p) {
        const DensityMatrix rho1 = random_density_matrix(basis.dim(), rng);
        const DensityMatrix rho2 = random_density_matrix(basis.dim(), rng);
        trace.distances.col(p) = blp_distance_series(basis, s, rho1, rho2);
        trace.distance_derivatives.col(p) =
            grid_derivative(s.grid, Eigen::VectorXd(trace.distances.col(p)));
    }
    for (int p = 0; p < pairs; ++p) {
        const DensityMatrix rho = random_density_matrix(basis.dim(), rng);
        trace.entropies.col(p) = entropy_series(basis, s, rho);
        trace.entropy_derivatives.col(p) =
            grid_derivative(s.grid, Eigen::VectorXd(trace.entropies.col(p)));
    }

    const VolumeTrace vol = volume_measure(s);
    trace.volume = vol.v;
    trace.volume_measure = vol.measure;

    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = s.grid[static_cast<std::size_t>(i)];
        for (int p = 0; p < pairs; ++p) {
            const double dd = trace.distance_derivatives(i, p);
            if (dd > 1e-6) {
                trace.violations.push_back({"blp", t, dd, p});
            }
            const double ds = trace.entropy_derivatives(i, p);
            if (ds < -1e-6) {
                trace.violations.push_back({"entropy", t, ds, p});
            }
        }
        if (i + 1 < n) {
            const double dv = trace.volume[i + 1] - trace.volume[i];
            if (dv > 1e-12) {
                trace.violations.push_back(
                    {"volume", s.grid[static_cast<std::size_t>(i + 1)], dv, static_cast<int>(i)});
            }
        }
    }
    std::stable_sort(trace.violations.begin(), trace.violations.end(),
                     [](const WitnessViolation& a, const WitnessViolation& b) {
                         return a.time < b.time;
                     });
    return trace;
}

} // namespace rudiv
