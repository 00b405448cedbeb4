#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rudiv/channels.hpp"
#include "rudiv/divisibility.hpp"
#include "rudiv/rates.hpp"
#include "rudiv/scenarios.hpp"

using namespace rudiv;
using cplx = std::complex<double>;

namespace {

Eigen::MatrixXcd mixture_process_matrix(const WeylBasis& basis, const SemigroupMixture& mix,
                                        double t)
{
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
    for (std::size_t i = 0; i < mix.components.size(); ++i) {
        const DiagonalMap m{basis.dim(), mix.components[i].probs_at(t), MapKind::channel};
        acc += mix.weights[i] * process_matrix(basis, m);
    }
    return acc;
}

} // namespace

TEST_CASE("scenario constructors reject nonpositive rate constants")
{
    CHECK_THROWS_AS(pauli_tanh(0.0), std::invalid_argument);
    CHECK_THROWS_AS(qutrit_e3(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(pauli_tanh_mixture(0.0), std::invalid_argument);
    CHECK_THROWS_AS(qutrit_e3_mixture(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(semigroup("x", 2, 0.0, {1}), std::invalid_argument);
}

TEST_CASE("pauli_tanh: t = 0 state, label map, closed forms")
{
    const double c = 1.3;
    const Scenario sc = pauli_tanh(c);
    CHECK(sc.dim == 2);
    REQUIRE(sc.pauli_to_flat.size() == 3);

    // t = 0: identity channel
    const Eigen::VectorXd p0 = sc.probs_at(0.0);
    CHECK(p0[0] == 1.0);
    CHECK(p0.tail(3).cwiseAbs().maxCoeff() == 0.0);
    CHECK((sc.lambdas_at(0.0).array() - 1.0).abs().maxCoeff() == 0.0);

    for (double t : {0.0, 0.4, 1.7, 6.0}) {
        const Eigen::VectorXd gamma = sc.rates_at(t);
        const Eigen::VectorXd p = sc.probs_at(t);
        const double e = std::exp(-2.0 * c * t);
        // Pauli labels through the map: sigma_1, sigma_2 carry c/2, sigma_3 the tanh
        CHECK(gamma[sc.pauli_to_flat[0] - 1] == doctest::Approx(0.5 * c));
        CHECK(gamma[sc.pauli_to_flat[1] - 1] == doctest::Approx(0.5 * c));
        CHECK(gamma[sc.pauli_to_flat[2] - 1]
              == doctest::Approx(-0.5 * c * std::tanh(c * t)));
        // the sigma_2 probability vanishes; in Pauli labels that is p_3, at
        // flat index 2 of the Weyl ordering
        CHECK(p[2] == 0.0);
        CHECK(p[1] == doctest::Approx(0.25 * (1.0 - e)).epsilon(1e-14));
        CHECK(p[3] == doctest::Approx(0.25 * (1.0 - e)).epsilon(1e-14));
        CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("pauli_tanh: evaluators are mutually consistent through the pipeline")
{
    const double c = 0.9;
    WeylBasis basis(2);
    const Scenario sc = pauli_tanh(c);
    TimeGrid grid = TimeGrid::uniform(4.0, 401);

    // probabilities from the exact spectrum match the exact probabilities
    const ProbabilityProfile p = probs_from_lambdas(basis, sc.spectrum(grid));
    CHECK((p.values - sc.probabilities(grid).values).cwiseAbs().maxCoeff() < 1e-14);

    // spectrum from the exact cumulative rates matches the exact spectrum
    const Spectrum s = spectrum_from_cumulative(basis, sc.cumulative(grid));
    CHECK((s.values - sc.spectrum(grid).values).cwiseAbs().maxCoeff() < 1e-13);

    // rates recovered by finite differences match the exact rates (interior)
    const RateProfile r = rates_from_mu(basis, grid, mu_from_spectrum(sc.spectrum(grid)));
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        CHECK((r.values.row(static_cast<Eigen::Index>(i)).transpose() - sc.rates_at(grid[i]))
                  .cwiseAbs()
                  .maxCoeff()
              < 5e-4);
    }
}

TEST_CASE("qutrit_e3: closed forms and the negativity of gamma_4")
{
    const double c = 1.0;
    const Scenario sc = qutrit_e3(c);
    CHECK(sc.dim == 3);

    for (double t : {0.1, 0.5, 2.0}) {
        const Eigen::VectorXd gamma = sc.rates_at(t);
        // six constant rates
        for (int k : {1, 2, 3, 5, 6, 7}) {
            CHECK(gamma[k - 1] == doctest::Approx(c / 3.0));
        }
        // the exponential-quotient display form and the rewritten closed form agree
        const double display = -(2.0 * c / 3.0)
                               * (std::exp(2 * c * t) - std::exp(-c * t))
                               / (std::exp(2 * c * t) + 2.0 * std::exp(-c * t));
        CHECK(gamma[3] == doctest::Approx(display).epsilon(1e-12));
        CHECK(gamma[7] == doctest::Approx(display).epsilon(1e-12));
        CHECK(gamma[3] < 0.0);

        const Eigen::VectorXd p = sc.probs_at(t);
        CHECK(p[4] == 0.0);
        CHECK(p[8] == 0.0);
        const double expected = (1.0 - std::exp(-3.0 * c * t)) / 9.0;
        for (int k : {1, 2, 3, 5, 6, 7}) {
            CHECK(p[k] == doctest::Approx(expected).epsilon(1e-14));
        }
    }

    // cumulative rates on the decaying pair are negative while probabilities
    // stay legitimate
    WeylBasis basis(3);
    TimeGrid grid = TimeGrid::uniform(2.0, 101);
    const CumulativeRates g = sc.cumulative(grid);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        CHECK(g.values(static_cast<Eigen::Index>(i), 3) < 0.0);
        CHECK(g.values(static_cast<Eigen::Index>(i), 7) < 0.0);
    }
    CHECK(sc.probabilities(grid).legitimate());

    // exact cumulative evaluator matches the trapezoid integral of the rates
    const CumulativeRates numeric = cumulative(sc.rates(grid));
    CHECK((numeric.values - g.values).cwiseAbs().maxCoeff() < 1e-4);
}

TEST_CASE("pauli_tanh_mixture reproduces the scenario as a process-matrix identity")
{
    const double c = 1.0;
    WeylBasis basis(2);
    const Scenario sc = pauli_tanh(c);
    const SemigroupMixture mix = pauli_tanh_mixture(c);
    REQUIRE(mix.components.size() == 2);
    CHECK(mix.weights[0] == doctest::Approx(0.5));

    TimeGrid grid = TimeGrid::uniform(5.0, 50);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const Eigen::MatrixXcd target =
            process_matrix(basis, DiagonalMap{2, sc.probs_at(t), MapKind::channel});
        const Eigen::MatrixXcd mixed = mixture_process_matrix(basis, mix, t);
        CHECK((target - mixed).cwiseAbs().maxCoeff() < 1e-10);
    }

    // each semigroup alone is CP-divisible: constant nonnegative rates
    for (const Scenario& semi : mix.components) {
        const RateProfile r = semi.rates(TimeGrid::uniform(1.0, 5));
        CHECK(r.values.minCoeff() >= 0.0);
        const DivisibilityReport rep = classify(basis, r);
        CHECK(rep.cp_divisible_everywhere);
    }

    // mixture eigenvalue on the sigma_3 axis: e^{-2ct} vs semigroup e^{-2ct} * pattern
    for (double t : {0.3, 1.0}) {
        const double e = std::exp(-2.0 * c * t);
        const cplx mixed = 0.5 * (mix.components[0].lambdas_at(t)[2]
                                  + mix.components[1].lambdas_at(t)[2]);
        CHECK(std::abs(mixed - cplx(e, 0)) < 1e-14);
        CHECK(std::abs(mix.components[0].lambdas_at(t)[2] - cplx(e, 0)) < 1e-14);
    }
}

TEST_CASE("qutrit_e3_mixture: fixed sectors and the process-matrix identity")
{
    const double c = 0.8;
    WeylBasis basis(3);
    const Scenario sc = qutrit_e3(c);
    const SemigroupMixture mix = qutrit_e3_mixture(c);
    REQUIRE(mix.components.size() == 3);

    // fixed sectors: lambda = 1 exactly on {0,1,2}, {0,3,6}, {0,5,7}
    const std::vector<std::vector<int>> sectors = {{0, 1, 2}, {0, 3, 6}, {0, 5, 7}};
    for (std::size_t j = 0; j < 3; ++j) {
        const Eigen::VectorXcd lambda = mix.components[j].lambdas_at(1.1);
        for (int a = 0; a < 9; ++a) {
            const bool fixed = std::find(sectors[j].begin(), sectors[j].end(), a)
                               != sectors[j].end();
            if (fixed) {
                CHECK(std::abs(lambda[a] - cplx(1, 0)) < 1e-14);
            } else {
                CHECK(std::abs(lambda[a] - std::exp(-3.0 * c * 1.1)) < 1e-14);
            }
        }
        // indices 4 and 8 are fixed by none
        CHECK(std::find(sectors[j].begin(), sectors[j].end(), 4) == sectors[j].end());
        CHECK(std::find(sectors[j].begin(), sectors[j].end(), 8) == sectors[j].end());
    }

    TimeGrid grid = TimeGrid::uniform(2.0, 50);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const Eigen::MatrixXcd target =
            process_matrix(basis, DiagonalMap{3, sc.probs_at(t), MapKind::channel});
        CHECK((target - mixture_process_matrix(basis, mix, t)).cwiseAbs().maxCoeff() < 1e-10);
    }

    for (const Scenario& semi : mix.components) {
        const RateProfile r = semi.rates(TimeGrid::uniform(1.0, 5));
        CHECK(r.values.minCoeff() >= 0.0);
    }
}

TEST_CASE("scenario lookup by name")
{
    CHECK(scenario_by_name("pauli-tanh", 1.0, 0).name == "pauli-tanh");
    CHECK(scenario_by_name("qutrit-e3", 1.0, 0).dim == 3);
    CHECK(scenario_by_name("unitary", 1.0, 4).dim == 4);
    CHECK_THROWS_AS(scenario_by_name("nope", 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(scenario_by_name("pauli-tanh", 1.0, 3), std::invalid_argument);
    CHECK(scenario_names().size() == 3);
}

TEST_CASE("unitary scenario: everything is trivial")
{
    const Scenario un = unitary(3);
    TimeGrid grid = TimeGrid::uniform(1.0, 11);
    CHECK(un.rates(grid).values.cwiseAbs().maxCoeff() == 0.0);
    CHECK((un.spectrum(grid).values.array() - 1.0).abs().maxCoeff() == 0.0);
    WeylBasis basis(3);
    const DivisibilityReport rep = classify(basis, un.rates(grid));
    CHECK(rep.bracket.nmd_upper == 0);
}
