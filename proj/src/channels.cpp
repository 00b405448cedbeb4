// channels.cpp

#include "rudiv/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rudiv/errors.hpp"
#include "rudiv/tolerances.hpp"

namespace rudiv {

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd m)
{
    if (m.rows() != m.cols() || m.rows() < 2) {
        throw std::invalid_argument("DensityMatrix: need a square matrix of size >= 2");
    }
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTol) {
        std::ostringstream msg;
        msg << "DensityMatrix: Hermiticity violation " << herm;
        throw std::invalid_argument(msg.str());
    }
    if (std::abs(m.trace() - 1.0) > kTraceTol) {
        throw std::invalid_argument("DensityMatrix: trace must be 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue");
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& state)
{
    const double norm = state.norm();
    if (norm == 0.0 || state.size() < 2) {
        throw std::invalid_argument("DensityMatrix::pure: invalid state vector");
    }
    const Eigen::VectorXcd v = state / norm;
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::basis_state(int dim, int i)
{
    if (dim < 2 || i < 0 || i >= dim) {
        throw std::invalid_argument("DensityMatrix::basis_state: index out of range");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v[i] = 1.0;
    return pure(v);
}

DensityMatrix DensityMatrix::maximally_mixed(int dim)
{
    if (dim < 2) {
        throw std::invalid_argument("DensityMatrix::maximally_mixed: dimension must be >= 2");
    }
    return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

Eigen::MatrixXcd apply_map(const WeylBasis& basis, const DiagonalMap& m,
                           const Eigen::MatrixXcd& x)
{
    if (m.dim != basis.dim() || x.rows() != m.dim || x.cols() != m.dim) {
        throw std::invalid_argument("apply_map: dimension mismatch");
    }
    if (m.coefficients.size() != basis.size()) {
        throw std::invalid_argument("apply_map: coefficient count must be d^2");
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.dim, m.dim);
    for (int alpha = 0; alpha < basis.size(); ++alpha) {
        const double a = m.coefficients[alpha];
        if (a == 0.0) continue;
        const Eigen::MatrixXcd& u = basis.op(alpha);
        out.noalias() += a * (u * x * u.adjoint());
    }
    return out;
}

DensityMatrix apply_channel(const WeylBasis& basis, const DiagonalMap& m,
                            const DensityMatrix& rho)
{
    if (m.kind != MapKind::channel) {
        throw std::invalid_argument("apply_channel: map is not a channel");
    }
    return DensityMatrix::from_matrix(apply_map(basis, m, rho.matrix()));
}

Eigen::MatrixXcd apply_generator(const WeylBasis& basis, const Eigen::VectorXd& rates,
                                 const Eigen::MatrixXcd& x)
{
    if (rates.size() != basis.size() - 1) {
        throw std::invalid_argument("apply_generator: rate vector must have length d^2-1");
    }
    if (x.rows() != basis.dim() || x.cols() != basis.dim()) {
        throw std::invalid_argument("apply_generator: dimension mismatch");
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(basis.dim(), basis.dim());
    for (int k = 1; k < basis.size(); ++k) {
        const double g = rates[k - 1];
        if (g == 0.0) continue;
        const Eigen::MatrixXcd& u = basis.op(k);
        out.noalias() += g * (u * x * u.adjoint() - x);
    }
    return out;
}

PropagatorSlice propagator(const WeylBasis& basis, const Spectrum& s,
                           std::size_t s_index, std::size_t t_index)
{
    s.validate();
    if (s.dim != basis.dim()) {
        throw std::invalid_argument("propagator: dimension mismatch");
    }
    if (t_index < s_index || t_index >= s.grid.size()) {
        throw std::invalid_argument("propagator: need s_index <= t_index within the grid");
    }
    const Eigen::Index comps = basis.size();
    const Eigen::Index si = static_cast<Eigen::Index>(s_index);
    const Eigen::Index ti = static_cast<Eigen::Index>(t_index);
    Eigen::VectorXcd ratio(comps);
    for (Eigen::Index a = 0; a < comps; ++a) {
        const std::complex<double> ls = s.values(si, a);
        if (std::abs(ls) < kSingularityFloor) {
            std::ostringstream msg;
            msg << "propagator: |lambda_" << a << "(s)| below singularity floor at s="
                << s.grid[s_index];
            throw SpectrumSingularity(msg.str());
        }
        ratio[a] = s.values(ti, a) / ls;
    }
    const Eigen::VectorXcd raw = basis.hadamard() * ratio / static_cast<double>(basis.size());
    const double residue = raw.imag().cwiseAbs().maxCoeff();
    if (residue > kImagResidueTol) {
        std::ostringstream msg;
        msg << "propagator: imaginary residue " << residue << " in coefficients";
        throw NonHermitianSpectrum(msg.str());
    }

    PropagatorSlice slice;
    slice.dim = s.dim;
    slice.s = s.grid[s_index];
    slice.t = s.grid[t_index];
    slice.q = raw.real();
    // exp(2 int_s^t gamma_0) = prod_beta |lambda_beta(t)/lambda_beta(s)|^{2/d^2}
    double log_v = 0.0;
    for (Eigen::Index a = 0; a < comps; ++a) {
        log_v += std::log(std::abs(ratio[a]));
    }
    slice.scaling = std::exp(2.0 * log_v / basis.size());
    return slice;
}

PhiDecomposition phi_decomposition(const Eigen::VectorXd& rates)
{
    if (!rates.allFinite()) {
        throw std::invalid_argument("phi_decomposition: non-finite rates");
    }
    PhiDecomposition out;
    out.coefficients.resize(rates.size() + 1);
    out.coefficients[0] = rates.sum();  // a_0 = -gamma_0
    out.coefficients.tail(rates.size()) = rates;
    for (int alpha = 0; alpha < out.coefficients.size(); ++alpha) {
        const double a = out.coefficients[alpha];
        if (a >= 0.0) {
            out.b.push_back(a);
            out.b_indices.push_back(alpha);
        } else {
            out.c.push_back(-a);
            out.c_indices.push_back(alpha);
        }
    }
    return out;
}

double scaling_factor(const TimeGrid& grid, const Eigen::VectorXd& gamma0,
                      std::size_t s_index, std::size_t t_index)
{
    if (t_index < s_index) {
        throw std::invalid_argument("scaling_factor: need s_index <= t_index");
    }
    return std::exp(2.0 * trapezoid_between(grid, gamma0, s_index, t_index));
}

Eigen::MatrixXcd process_matrix(const WeylBasis& basis, const DiagonalMap& m)
{
    const int n = basis.size();
    Eigen::MatrixXcd p(n, n);
    for (int b = 0; b < n; ++b) {
        const Eigen::MatrixXcd image = apply_map(basis, m, basis.op(b));
        for (int a = 0; a < n; ++a) {
            p(a, b) = (basis.op(a).adjoint() * image).trace() / static_cast<double>(basis.dim());
        }
    }
    return p;
}

} // namespace rudiv
