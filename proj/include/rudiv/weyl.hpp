// weyl.hpp — Weyl (generalized spin) operators and the Hadamard matrix that
// diagonalizes every map built from them.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace rudiv {

// Index pair (clock, shift) of a Weyl operator on a d-level system.
// U_{(k,l)} = sum_m omega^{k m} |m><(m+l) mod d|, flat index alpha = k*d + l.
struct WeylIndex {
    int clock = 0;
    int shift = 0;
    int dim = 2;

    int flat() const { return clock * dim + shift; }
    static WeylIndex from_flat(int alpha, int dim);
};

bool operator==(const WeylIndex& a, const WeylIndex& b);

// Phase times a single Weyl operator; products and adjoints stay in this form.
struct PhasedIndex {
    std::complex<double> phase;
    WeylIndex index;
};

// U_a U_b = phase * U_c with c = a + b componentwise mod d.
PhasedIndex compose(const WeylIndex& a, const WeylIndex& b);

// U_a^dag = phase * U_c with c = -a mod d.
PhasedIndex adjoint(const WeylIndex& a);

// U_r U_a U_r^dag = phase * U_a; the phase is a power of omega.
std::complex<double> conjugation_phase(const WeylIndex& r, const WeylIndex& a);

// omega^e for omega = exp(2 pi i / d); exponent is reduced mod d and the
// quarter-turn values (d even etc.) are exact so that low-dimensional
// Hadamard matrices come out exactly real.
std::complex<double> root_of_unity(long exponent, int dim);

// The d^2 Weyl operators plus the d^2 x d^2 Hadamard matrix H with
// H_{ab} = phase of U_b U_a U_b^dag.  H is Hermitian, H*H = d^2 * I, and
// row/column 0 are all ones.  Immutable after construction.
class WeylBasis {
public:
    explicit WeylBasis(int dim);

    int dim() const { return dim_; }
    int size() const { return dim_ * dim_; }
    std::complex<double> omega() const { return omega_power(1); }
    std::complex<double> omega_power(long exponent) const;
    WeylIndex index(int alpha) const;
    const Eigen::MatrixXcd& op(int alpha) const { return ops_[static_cast<std::size_t>(alpha)]; }
    const Eigen::MatrixXcd& hadamard() const { return hadamard_; }

private:
    int dim_;
    std::vector<Eigen::MatrixXcd> ops_;
    Eigen::MatrixXcd hadamard_;
};

} // namespace rudiv
