// channels.hpp — concrete maps diagonal in the Weyl basis: the dynamical map,
// its time-local generator, propagator slices and the Phi split used by the
// positivity certificates.

#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "rudiv/rates.hpp"
#include "rudiv/weyl.hpp"

namespace rudiv {

// d x d complex matrix, Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
public:
    static DensityMatrix from_matrix(Eigen::MatrixXcd m);
    static DensityMatrix pure(const Eigen::VectorXcd& state);
    static DensityMatrix basis_state(int dim, int i);
    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return entries_; }

private:
    explicit DensityMatrix(Eigen::MatrixXcd m) : entries_(std::move(m)) {}
    Eigen::MatrixXcd entries_;
};

enum class MapKind { channel, propagator, phi };

// X -> sum_alpha a_alpha U_alpha X U_alpha^dag with real coefficients.
// Generators are deliberately NOT represented this way: they keep their
// gamma vector so the -X counter-term stays exact (see apply_generator).
struct DiagonalMap {
    int dim = 2;
    Eigen::VectorXd coefficients;  // length d^2, flat Weyl order
    MapKind kind = MapKind::channel;
};

Eigen::MatrixXcd apply_map(const WeylBasis& basis, const DiagonalMap& m,
                           const Eigen::MatrixXcd& x);

// Channel application with output re-validated as a density matrix.
DensityMatrix apply_channel(const WeylBasis& basis, const DiagonalMap& m,
                            const DensityMatrix& rho);

// L(X) = sum_{k>=1} gamma_k (U_k X U_k^dag - X); rates has length d^2-1.
Eigen::MatrixXcd apply_generator(const WeylBasis& basis, const Eigen::VectorXd& rates,
                                 const Eigen::MatrixXcd& x);

// Propagator V carrying time s to time t, diagonal with coefficients q and
// the overall scaling exp(2 int_s^t gamma_0).
struct PropagatorSlice {
    int dim = 2;
    double s = 0.0;
    double t = 0.0;
    Eigen::VectorXd q;  // length d^2; V is CP iff all q >= 0
    double scaling = 1.0;
};

// q(t,s) = H (lambda(t) / lambda(s)) / d^2 from eigenvalue ratios.  Throws
// SpectrumSingularity when some |lambda(s)| is below the floor (map not
// invertible there).
PropagatorSlice propagator(const WeylBasis& basis, const Spectrum& s,
                           std::size_t s_index, std::size_t t_index);

// Coefficient list of the Phi map (a_0 = sum_k gamma_k, a_k = gamma_k) split
// into its nonnegative part b and the absolute values c of the strict
// negatives.  Zeros count as nonnegative, so N = c.size() counts strict
// negatives only.
struct PhiDecomposition {
    Eigen::VectorXd coefficients;   // full length-d^2 list
    std::vector<double> b;
    std::vector<double> c;
    std::vector<int> b_indices;
    std::vector<int> c_indices;

    int positive_count() const { return static_cast<int>(b.size()); }   // M
    int negative_count() const { return static_cast<int>(c.size()); }   // N
};

PhiDecomposition phi_decomposition(const Eigen::VectorXd& rates);

// v(t;s) = exp(2 int_s^t gamma_0) by trapezoid over the sampled gamma_0.
double scaling_factor(const TimeGrid& grid, const Eigen::VectorXd& gamma0,
                      std::size_t s_index, std::size_t t_index);

// Action on the Weyl basis: P_{ab} = Tr[U_a^dag m(U_b)] / d.  Diagonal for
// every map of this family; exported as the process matrix.
Eigen::MatrixXcd process_matrix(const WeylBasis& basis, const DiagonalMap& m);

} // namespace rudiv
