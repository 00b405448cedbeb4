// scenarios.cpp

#include "rudiv/scenarios.hpp"

#include <cmath>
#include <stdexcept>

#include "rudiv/weyl.hpp"

namespace rudiv {

namespace {

void require_positive_rate(double c)
{
    if (!(c > 0.0)) {
        throw std::invalid_argument("scenario: rate constant c must be positive");
    }
}

template <typename Evaluator>
Eigen::MatrixXd sample_real(const TimeGrid& grid, Eigen::Index cols, const Evaluator& f)
{
    Eigen::MatrixXd out(static_cast<Eigen::Index>(grid.size()), cols);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out.row(static_cast<Eigen::Index>(i)) = f(grid[i]).transpose();
    }
    return out;
}

} // namespace

RateProfile Scenario::rates(const TimeGrid& grid) const
{
    const Eigen::Index comps = static_cast<Eigen::Index>(dim) * dim - 1;
    return RateProfile{dim, grid, sample_real(grid, comps, rates_at), "scenario:" + name};
}

CumulativeRates Scenario::cumulative(const TimeGrid& grid) const
{
    const Eigen::Index comps = static_cast<Eigen::Index>(dim) * dim - 1;
    return CumulativeRates{dim, grid, sample_real(grid, comps, cumulative_at)};
}

Spectrum Scenario::spectrum(const TimeGrid& grid) const
{
    const Eigen::Index comps = static_cast<Eigen::Index>(dim) * dim;
    Eigen::MatrixXcd values(static_cast<Eigen::Index>(grid.size()), comps);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values.row(static_cast<Eigen::Index>(i)) = lambdas_at(grid[i]).transpose();
    }
    return Spectrum{dim, grid, std::move(values)};
}

ProbabilityProfile Scenario::probabilities(const TimeGrid& grid) const
{
    const Eigen::Index comps = static_cast<Eigen::Index>(dim) * dim;
    return ProbabilityProfile{dim, grid, sample_real(grid, comps, probs_at)};
}

Scenario pauli_tanh(double c)
{
    require_positive_rate(c);
    Scenario sc;
    sc.name = "pauli-tanh";
    sc.dim = 2;
    sc.c = c;
    sc.pauli_to_flat = {1, 3, 2};  // sigma_1 -> alpha 1, sigma_2 -> alpha 3, sigma_3 -> alpha 2

    sc.rates_at = [c](double t) {
        Eigen::VectorXd g(3);
        g[0] = 0.5 * c;                       // flat 1 = sigma_1
        g[1] = -0.5 * c * std::tanh(c * t);   // flat 2 = sigma_3
        g[2] = 0.5 * c;                       // flat 3 = sigma_2
        return g;
    };
    sc.cumulative_at = [c](double t) {
        Eigen::VectorXd g(3);
        g[0] = 0.5 * c * t;
        g[1] = -0.5 * std::log(std::cosh(c * t));
        g[2] = 0.5 * c * t;
        return g;
    };
    sc.lambdas_at = [c](double t) {
        const double e = std::exp(-2.0 * c * t);
        Eigen::VectorXcd l(4);
        l[0] = 1.0;
        l[1] = 0.5 * (1.0 + e);
        l[2] = e;
        l[3] = 0.5 * (1.0 + e);
        return l;
    };
    sc.probs_at = [c](double t) {
        const double e = std::exp(-2.0 * c * t);
        Eigen::VectorXd p(4);
        p[0] = 0.5 * (1.0 + e);
        p[1] = 0.25 * (1.0 - e);
        p[2] = 0.0;
        p[3] = 0.25 * (1.0 - e);
        return p;
    };
    return sc;
}

Scenario qutrit_e3(double c)
{
    require_positive_rate(c);
    Scenario sc;
    sc.name = "qutrit-e3";
    sc.dim = 3;
    sc.c = c;
    sc.pauli_to_flat = {};

    auto decaying = [](int k) { return k == 4 || k == 8; };

    sc.rates_at = [c, decaying](double t) {
        const double e = std::exp(-3.0 * c * t);
        const double gamma = -(2.0 * c / 3.0) * (1.0 - e) / (1.0 + 2.0 * e);
        Eigen::VectorXd g(8);
        for (int k = 1; k <= 8; ++k) {
            g[k - 1] = decaying(k) ? gamma : c / 3.0;
        }
        return g;
    };
    sc.cumulative_at = [c, decaying](double t) {
        const double e = std::exp(-3.0 * c * t);
        // int_0^t gamma = (2/9) ln e - (1/3) ln((1+2e)/3)
        const double big_gamma =
            (2.0 / 9.0) * (-3.0 * c * t) - (1.0 / 3.0) * std::log((1.0 + 2.0 * e) / 3.0);
        Eigen::VectorXd g(8);
        for (int k = 1; k <= 8; ++k) {
            g[k - 1] = decaying(k) ? big_gamma : c * t / 3.0;
        }
        return g;
    };
    sc.lambdas_at = [c, decaying](double t) {
        const double e = std::exp(-3.0 * c * t);
        Eigen::VectorXcd l(9);
        l[0] = 1.0;
        for (int a = 1; a <= 8; ++a) {
            l[a] = decaying(a) ? e : (1.0 + 2.0 * e) / 3.0;
        }
        return l;
    };
    sc.probs_at = [c, decaying](double t) {
        const double e = std::exp(-3.0 * c * t);
        Eigen::VectorXd p(9);
        p[0] = (1.0 + 2.0 * e) / 3.0;
        for (int a = 1; a <= 8; ++a) {
            p[a] = decaying(a) ? 0.0 : (1.0 - e) / 9.0;
        }
        return p;
    };
    return sc;
}

Scenario unitary(int dim)
{
    if (dim < 2) {
        throw std::invalid_argument("unitary scenario: dimension must be >= 2");
    }
    Scenario sc;
    sc.name = "unitary";
    sc.dim = dim;
    sc.c = 0.0;
    const Eigen::Index comps = static_cast<Eigen::Index>(dim) * dim;
    sc.rates_at = [comps](double) { return Eigen::VectorXd::Zero(comps - 1).eval(); };
    sc.cumulative_at = [comps](double) { return Eigen::VectorXd::Zero(comps - 1).eval(); };
    sc.lambdas_at = [comps](double) { return Eigen::VectorXcd::Ones(comps).eval(); };
    sc.probs_at = [comps](double) {
        Eigen::VectorXd p = Eigen::VectorXd::Zero(comps);
        p[0] = 1.0;
        return p;
    };
    return sc;
}

Scenario semigroup(const std::string& name, int dim, double g, std::vector<int> indices)
{
    require_positive_rate(g);
    const WeylBasis basis(dim);
    const Eigen::Index comps = basis.size();
    for (int idx : indices) {
        if (idx < 1 || idx >= comps) {
            throw std::invalid_argument("semigroup: dissipator index out of range");
        }
    }

    // mu_alpha = g * sum_{r in S} (phase(U_r U_alpha U_r^dag) - 1); real for
    // adjoint-closed index sets, which is all this family uses.
    Eigen::VectorXd mu(comps);
    for (int a = 0; a < comps; ++a) {
        std::complex<double> acc = 0.0;
        for (int r : indices) {
            acc += conjugation_phase(basis.index(r), basis.index(a)) - 1.0;
        }
        if (std::abs(acc.imag()) > 1e-12) {
            throw std::invalid_argument("semigroup: index set is not adjoint-closed");
        }
        mu[a] = g * acc.real();
    }

    Eigen::VectorXd rate_vec = Eigen::VectorXd::Zero(comps - 1);
    for (int r : indices) {
        rate_vec[r - 1] = g;
    }

    // p(t) = H lambda(t) / d^2 with lambda = exp(mu t); precompute the real
    // Hadamard action on the fixed/decaying split instead of redoing it per call.
    Eigen::MatrixXcd hadamard = basis.hadamard();

    Scenario sc;
    sc.name = name;
    sc.dim = dim;
    sc.c = g;
    sc.rates_at = [rate_vec](double) { return rate_vec; };
    sc.cumulative_at = [rate_vec](double t) { return (rate_vec * t).eval(); };
    sc.lambdas_at = [mu, comps](double t) {
        Eigen::VectorXcd l(comps);
        for (Eigen::Index a = 0; a < comps; ++a) {
            l[a] = std::exp(mu[a] * t);
        }
        return l;
    };
    sc.probs_at = [mu, comps, hadamard](double t) {
        Eigen::VectorXcd l(comps);
        for (Eigen::Index a = 0; a < comps; ++a) {
            l[a] = std::exp(mu[a] * t);
        }
        return ((hadamard * l) / static_cast<double>(comps)).real().eval();
    };
    return sc;
}

SemigroupMixture pauli_tanh_mixture(double c)
{
    require_positive_rate(c);
    SemigroupMixture mix;
    mix.components.push_back(semigroup("pauli-tanh-semigroup-1", 2, c, {1}));  // sigma_1
    mix.components.push_back(semigroup("pauli-tanh-semigroup-2", 2, c, {3}));  // sigma_2
    mix.weights = {0.5, 0.5};
    return mix;
}

SemigroupMixture qutrit_e3_mixture(double c)
{
    require_positive_rate(c);
    SemigroupMixture mix;
    mix.components.push_back(semigroup("qutrit-e3-semigroup-1", 3, c, {1, 2}));
    mix.components.push_back(semigroup("qutrit-e3-semigroup-2", 3, c, {3, 6}));
    mix.components.push_back(semigroup("qutrit-e3-semigroup-3", 3, c, {5, 7}));
    mix.weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    return mix;
}

Scenario scenario_by_name(const std::string& name, double c, int dim)
{
    if (name == "pauli-tanh") {
        if (dim != 0 && dim != 2) {
            throw std::invalid_argument("scenario pauli-tanh has dimension 2");
        }
        return pauli_tanh(c);
    }
    if (name == "qutrit-e3") {
        if (dim != 0 && dim != 3) {
            throw std::invalid_argument("scenario qutrit-e3 has dimension 3");
        }
        return qutrit_e3(c);
    }
    if (name == "unitary") {
        return unitary(dim == 0 ? 2 : dim);
    }
    throw std::invalid_argument("unknown scenario '" + name + "'");
}

std::vector<std::string> scenario_names()
{
    return {"pauli-tanh", "qutrit-e3", "unitary"};
}

} // namespace rudiv
