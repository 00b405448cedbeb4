// weyl.cpp — construction of Weyl operators and their phase algebra

#include "rudiv/weyl.hpp"

#include <numbers>
#include <stdexcept>

namespace rudiv {

namespace {

int mod(long a, int d)
{
    const long m = a % d;
    return static_cast<int>(m < 0 ? m + d : m);
}

void require_same_dim(const WeylIndex& a, const WeylIndex& b)
{
    if (a.dim != b.dim) {
        throw std::invalid_argument("WeylIndex: dimension mismatch");
    }
}

} // namespace

WeylIndex WeylIndex::from_flat(int alpha, int dim)
{
    if (dim < 2) {
        throw std::invalid_argument("WeylIndex: dimension must be >= 2");
    }
    if (alpha < 0 || alpha >= dim * dim) {
        throw std::invalid_argument("WeylIndex: flat index out of range");
    }
    return {alpha / dim, alpha % dim, dim};
}

bool operator==(const WeylIndex& a, const WeylIndex& b)
{
    return a.dim == b.dim && a.clock == b.clock && a.shift == b.shift;
}

std::complex<double> root_of_unity(long exponent, int dim)
{
    const int e = mod(exponent, dim);
    // exact values on the axes; avoids 1e-16 residue in sin(pi) etc.
    if (4L * e % dim == 0) {
        switch (4 * e / dim) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * e / dim);
}

PhasedIndex compose(const WeylIndex& a, const WeylIndex& b)
{
    require_same_dim(a, b);
    const int d = a.dim;
    // U_a U_b = omega^{b.clock * a.shift} U_{a+b}
    const auto phase = root_of_unity(static_cast<long>(b.clock) * a.shift, d);
    return {phase, {mod(a.clock + b.clock, d), mod(a.shift + b.shift, d), d}};
}

PhasedIndex adjoint(const WeylIndex& a)
{
    const int d = a.dim;
    const auto phase = root_of_unity(static_cast<long>(a.clock) * a.shift, d);
    return {phase, {mod(-a.clock, d), mod(-a.shift, d), d}};
}

std::complex<double> conjugation_phase(const WeylIndex& r, const WeylIndex& a)
{
    require_same_dim(r, a);
    return root_of_unity(static_cast<long>(a.clock) * r.shift - static_cast<long>(r.clock) * a.shift,
                         a.dim);
}

WeylBasis::WeylBasis(int dim) : dim_(dim)
{
    if (dim < 2) {
        throw std::invalid_argument("WeylBasis: dimension must be >= 2");
    }
    const int n = dim * dim;
    ops_.reserve(static_cast<std::size_t>(n));
    for (int alpha = 0; alpha < n; ++alpha) {
        const WeylIndex idx = WeylIndex::from_flat(alpha, dim);
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
        for (int m = 0; m < dim; ++m) {
            u(m, (m + idx.shift) % dim) = root_of_unity(static_cast<long>(idx.clock) * m, dim);
        }
        ops_.push_back(std::move(u));
    }

    hadamard_.resize(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            hadamard_(a, b) = conjugation_phase(index(b), index(a));
        }
    }
}

std::complex<double> WeylBasis::omega_power(long exponent) const
{
    return root_of_unity(exponent, dim_);
}

WeylIndex WeylBasis::index(int alpha) const
{
    return WeylIndex::from_flat(alpha, dim_);
}

} // namespace rudiv
