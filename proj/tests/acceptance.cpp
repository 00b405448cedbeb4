// acceptance.cpp — end-to-end acceptance suite; prints one PASS/FAIL line per
// criterion and exits nonzero if any failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rudiv/cli.hpp"
#include "rudiv/divisibility.hpp"
#include "rudiv/io.hpp"
#include "rudiv/rates.hpp"
#include "rudiv/scenarios.hpp"
#include "rudiv/weyl.hpp"
#include "rudiv/witnesses.hpp"

using namespace rudiv;
using cplx = std::complex<double>;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "")
{
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

double max_abs(const Eigen::MatrixXcd& m)
{
    return m.cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------- criterion 1

void criterion_1()
{
    const auto start = std::chrono::steady_clock::now();
    double worst_h2 = 0.0;
    double worst_herm = 0.0;
    double worst_trace = 0.0;
    for (int d : {2, 3, 4, 5}) {
        WeylBasis basis(d);
        const int n = basis.size();
        const Eigen::MatrixXcd& h = basis.hadamard();
        worst_herm = std::max(worst_herm, max_abs(h - h.adjoint()));
        worst_h2 = std::max(worst_h2,
                            max_abs(h * h - double(n) * Eigen::MatrixXcd::Identity(n, n)));
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const cplx tr = (basis.op(a) * basis.op(b).adjoint()).trace();
                const cplx expect = a == b ? cplx(d, 0) : cplx(0, 0);
                worst_trace = std::max(worst_trace, std::abs(tr - expect));
            }
        }
    }

    // the standard d = 3 Weyl matrix table
    WeylBasis b3(3);
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const cplx w2 = std::conj(w);
    auto m3 = [](std::initializer_list<cplx> vals) {
        Eigen::MatrixXcd m(3, 3);
        int i = 0;
        for (cplx v : vals) {
            m(i / 3, i % 3) = v;
            ++i;
        }
        return m;
    };
    const Eigen::MatrixXcd reference[9] = {
        Eigen::MatrixXcd::Identity(3, 3),
        m3({0, 1, 0, 0, 0, 1, 1, 0, 0}),
        m3({0, 0, 1, 1, 0, 0, 0, 1, 0}),
        m3({1, 0, 0, 0, w, 0, 0, 0, w2}),
        m3({0, 1, 0, 0, 0, w, w2, 0, 0}),
        m3({0, 0, 1, w, 0, 0, 0, w2, 0}),
        m3({1, 0, 0, 0, w2, 0, 0, 0, w}),
        m3({0, 1, 0, 0, 0, w2, w, 0, 0}),
        m3({0, 0, 1, w2, 0, 0, 0, w, 0}),
    };
    double worst_reference = 0.0;
    for (int a = 0; a < 9; ++a) {
        worst_reference = std::max(worst_reference, max_abs(b3.op(a) - reference[a]));
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::ostringstream detail;
    detail << "H herm " << worst_herm << ", H^2 err " << worst_h2 << ", trace err "
           << worst_trace << ", reference-table err " << worst_reference << ", " << seconds << " s";
    report(1, "Weyl/Hadamard algebra for d in {2,3,4,5}",
           worst_herm < 1e-12 && worst_h2 <= 1e-10 && worst_trace < 1e-12
               && worst_reference <= 1e-14 && seconds < 5.0,
           detail.str());
}

// ---------------------------------------------------------------- criterion 2

void criterion_2()
{
    std::mt19937_64 rng(20240001);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int d : {2, 3, 4}) {
        WeylBasis basis(d);
        for (int rep = 0; rep < 100; ++rep) {
            const int n_times = 8;
            ProbabilityProfile p;
            p.dim = d;
            p.grid = TimeGrid::uniform(1.0, n_times);
            p.values.resize(n_times, d * d);
            p.values.setZero();
            p.values(0, 0) = 1.0;
            for (int i = 1; i < n_times; ++i) {
                double sum = 0.0;
                for (int a = 0; a < d * d; ++a) {
                    const double v = uni(rng) + 1e-9;
                    p.values(i, a) = v;
                    sum += v;
                }
                p.values.row(i) /= sum;
            }
            const ProbabilityProfile back =
                probs_from_lambdas(basis, lambdas_from_probs(basis, p));
            worst = std::max(worst, (back.values - p.values).cwiseAbs().maxCoeff());
        }
    }
    report(2, "p -> lambda -> p round trip on 100 random profiles per d in {2,3,4}",
           worst <= 1e-12, "max deviation " + format_double(worst));
}

// ---------------------------------------------------------------- criterion 3

void criterion_3()
{
    const double c = 1.0;
    WeylBasis basis(2);
    const TimeGrid grid = TimeGrid::uniform(5.0, 500);

    // rates (c/2, c/2, -(c/2) tanh(ct)) in Pauli labels; their exact running
    // integrals feed the Hadamard pipeline Gamma -> lambda -> p
    CumulativeRates g{2, grid, Eigen::MatrixXd(500, 3)};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        g.values(static_cast<Eigen::Index>(i), 0) = 0.5 * c * t;                       // sigma_1
        g.values(static_cast<Eigen::Index>(i), 1) = -0.5 * std::log(std::cosh(c * t)); // sigma_3
        g.values(static_cast<Eigen::Index>(i), 2) = 0.5 * c * t;                       // sigma_2
    }
    const Spectrum s = spectrum_from_cumulative(basis, g);
    const ProbabilityProfile p = probs_from_lambdas(basis, s);

    // Pauli p_3 lives at flat Weyl index 2 = (1,0)
    double worst_p3 = 0.0;
    double worst_p12 = 0.0;
    double worst_cp_equality = 0.0;
    bool cp_ok = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Eigen::Index row = static_cast<Eigen::Index>(i);
        const double e = std::exp(-2.0 * c * grid[i]);
        worst_p3 = std::max(worst_p3, std::abs(p.values(row, 2)));
        worst_p12 = std::max(worst_p12, std::abs(p.values(row, 1) - 0.25 * (1 - e)));
        worst_p12 = std::max(worst_p12, std::abs(p.values(row, 3) - 0.25 * (1 - e)));

        // CP condition in Pauli labels (lambda_1, lambda_2, lambda_3) =
        // (flat 1, flat 3, flat 2); the first inequality holds with equality
        const Eigen::Vector3d lambda(s.values(row, 1).real(), s.values(row, 3).real(),
                                     s.values(row, 2).real());
        cp_ok = cp_ok && qubit_cp_map_condition(lambda);
        worst_cp_equality = std::max(worst_cp_equality,
                                     std::abs(lambda[0] + lambda[1] - 1.0 - lambda[2]));
    }
    std::ostringstream detail;
    detail << "max |p_3| " << worst_p3 << ", max p_1/p_2 err " << worst_p12
           << ", CP equality residue " << worst_cp_equality;
    report(3, "dephasing example: p_3 = 0, p_1 = p_2 = (1-e^{-2ct})/4, CP boundary",
           worst_p3 <= 1e-8 && worst_p12 <= 1e-6 && cp_ok && worst_cp_equality <= 1e-8,
           detail.str());
}

// ---------------------------------------------------------------- criterion 4

void criterion_4()
{
    const double c = 1.0;
    const double h = 1e-3;
    WeylBasis basis(3);
    const Scenario sc = qutrit_e3(c);

    // finite-difference route at step 1e-3: gamma_4 within 1e-6 on the
    // central-difference interior; the one-sided endpoints carry the
    // documented 5 h^2 bound
    const int n = 2001;  // [0, 2] at step 1e-3
    const TimeGrid grid = TimeGrid::uniform(2.0, n);
    const RateProfile r = rates_from_mu(basis, grid, mu_from_spectrum(sc.spectrum(grid)));
    double worst_interior = 0.0;
    double worst_endpoint = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const double expected = -(2.0 * c / 3.0)
                                * (std::exp(2 * c * t) - std::exp(-c * t))
                                / (std::exp(2 * c * t) + 2.0 * std::exp(-c * t));
        const double err =
            std::max(std::abs(r.values(static_cast<Eigen::Index>(i), 3) - expected),
                     std::abs(r.values(static_cast<Eigen::Index>(i), 7) - expected));
        if (i == 0 || i + 1 == grid.size()) {
            worst_endpoint = std::max(worst_endpoint, err);
        } else {
            worst_interior = std::max(worst_interior, err);
        }
    }

    // probability closed forms
    const TimeGrid pgrid = TimeGrid::uniform(2.0, 400);
    const ProbabilityProfile p = probs_from_lambdas(basis, sc.spectrum(pgrid));
    double worst_zero = 0.0;
    double worst_six = 0.0;
    for (std::size_t i = 0; i < pgrid.size(); ++i) {
        const Eigen::Index row = static_cast<Eigen::Index>(i);
        const double expected = (1.0 - std::exp(-3.0 * c * pgrid[i])) / 9.0;
        worst_zero = std::max({worst_zero, std::abs(p.values(row, 4)),
                               std::abs(p.values(row, 8))});
        for (int k : {1, 2, 3, 5, 6, 7}) {
            worst_six = std::max(worst_six, std::abs(p.values(row, k) - expected));
        }
    }

    std::ostringstream detail;
    detail << "gamma_4 FD err: interior " << worst_interior << " (tol 1e-6), endpoints "
           << worst_endpoint << " (one-sided stencil tol 5h^2 = " << 5 * h * h
           << "); |p_4|,|p_8| " << worst_zero << ", six-prob err " << worst_six;
    report(4, "qutrit example: gamma_4 closed form at step 1e-3, p_4 = p_8 = 0",
           worst_interior <= 1e-6 && worst_endpoint <= 5 * h * h && worst_zero <= 1e-8
               && worst_six <= 1e-6,
           detail.str());
}

// ---------------------------------------------------------------- criterion 5

void criterion_5()
{
    double worst = 0.0;
    {
        WeylBasis basis(2);
        const Scenario sc = pauli_tanh(1.0);
        const SemigroupMixture mix = pauli_tanh_mixture(1.0);
        const TimeGrid grid = TimeGrid::uniform(5.0, 50);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double t = grid[i];
            Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(4, 4);
            for (std::size_t j = 0; j < mix.components.size(); ++j) {
                mixed += mix.weights[j]
                       * process_matrix(basis, DiagonalMap{2, mix.components[j].probs_at(t),
                                                           MapKind::channel});
            }
            const Eigen::MatrixXcd target =
                process_matrix(basis, DiagonalMap{2, sc.probs_at(t), MapKind::channel});
            worst = std::max(worst, max_abs(mixed - target));
        }
    }
    {
        WeylBasis basis(3);
        const Scenario sc = qutrit_e3(1.0);
        const SemigroupMixture mix = qutrit_e3_mixture(1.0);
        const TimeGrid grid = TimeGrid::uniform(2.0, 50);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double t = grid[i];
            Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(9, 9);
            for (std::size_t j = 0; j < mix.components.size(); ++j) {
                mixed += mix.weights[j]
                       * process_matrix(basis, DiagonalMap{3, mix.components[j].probs_at(t),
                                                           MapKind::channel});
            }
            const Eigen::MatrixXcd target =
                process_matrix(basis, DiagonalMap{3, sc.probs_at(t), MapKind::channel});
            worst = std::max(worst, max_abs(mixed - target));
        }
    }
    report(5, "semigroup mixtures reproduce both scenarios as process matrices",
           worst <= 1e-10, "max entry error " + format_double(worst));
}

// ---------------------------------------------------------------- criterion 6

void criterion_6()
{
    WeylBasis basis(2);
    const Scenario sc = pauli_tanh(1.0);
    const DivisibilityReport rep = classify(basis, sc.rates(TimeGrid::uniform(5.0, 500)));

    bool per_time_ok = true;
    for (const auto& cert : rep.certificates) {
        per_time_ok = per_time_ok && cert.p_condition;
        if (cert.time > 0.0) {
            per_time_ok = per_time_ok && !cert.cp_divisible;
        }
    }
    const bool bracket_ok = rep.p_condition_everywhere && !rep.cp_divisible_everywhere
                         && rep.bracket.nmd_lower >= 1 && rep.bracket.divisibility_lower >= 1
                         && rep.bracket.nmd_upper <= 1;
    std::ostringstream detail;
    detail << "NMD bracket [" << rep.bracket.nmd_lower << ", " << rep.bracket.nmd_upper
           << "], summary: " << rep.summary;
    report(6, "dephasing example classifies as P-divisible, not CP-divisible",
           per_time_ok && bracket_ok, detail.str());
}

// ---------------------------------------------------------------- criterion 7

void criterion_7()
{
    const double c = 1.0;
    WeylBasis basis(3);
    const Scenario sc = qutrit_e3(c);
    const TimeGrid grid = TimeGrid::uniform(2.0, 400);
    const double step = grid[1] - grid[0];
    const DivisibilityReport rep = classify(basis, sc.rates(grid));

    const double threshold = std::log(2.0) / (3.0 * c);
    bool transition_clean = true;
    for (const auto& cert : rep.certificates) {
        if (!cert.triple_condition) {
            transition_clean = false;
            continue;
        }
        // satisfied up to the threshold, violated after
        if (cert.time <= threshold - step) transition_clean &= *cert.triple_condition;
        if (cert.time >= threshold + step) transition_clean &= !*cert.triple_condition;
    }
    const bool has_first = rep.bracket.first_triple_violation.has_value();
    const double found = has_first ? *rep.bracket.first_triple_violation : -1.0;
    std::ostringstream detail;
    detail << "threshold ln2/3 = " << threshold << ", first violation at " << found
           << ", grid step " << step;
    report(7, "qutrit triple condition flips at ln2/(3c) within one grid step",
           has_first && std::abs(found - threshold) <= step + 1e-12 && transition_clean,
           detail.str());
}

// ---------------------------------------------------------------- criterion 8

void criterion_8()
{
    int disagreements = 0;
    for (int d : {2, 3}) {
        WeylBasis basis(d);
        std::mt19937_64 rng(555 + d);
        std::uniform_real_distribution<double> uni(-0.2, 0.8);
        for (int rep = 0; rep < 200; ++rep) {
            Eigen::VectorXd a(d * d);
            for (int i = 0; i < d * d; ++i) a[i] = uni(rng);
            const DiagonalMap m{d, a, MapKind::phi};
            if (cp_check(basis, m) != coefficients_nonnegative(m)) ++disagreements;
        }
    }
    report(8, "Choi-eigenvalue CP test agrees with the coefficient sign test (2 x 200 draws)",
           disagreements == 0, std::to_string(disagreements) + " disagreements");
}

// ---------------------------------------------------------------- criterion 9

void criterion_9()
{
    int false_alarms = 0;
    int missed_negatives = 0;
    int certified_runs = 0;
    int negative_runs = 0;
    for (int d : {2, 3}) {
        WeylBasis basis(d);
        std::mt19937_64 rng(777 + d);
        std::uniform_real_distribution<double> uni(-0.3, 1.0);
        for (int rep = 0; rep < 200; ++rep) {
            Eigen::VectorXd rates(d * d - 1);
            for (Eigen::Index i = 0; i < rates.size(); ++i) rates[i] = uni(rng);
            const PhiDecomposition phi = phi_decomposition(rates);
            std::vector<double> b = phi.b;
            for (double& v : b) v = std::max(v, 0.0);
            const DiagonalMap m{d, phi.coefficients, MapKind::phi};

            for (int k = 1; k <= d; ++k) {
                if (k_positivity_certificate(b, phi.c, d, k)) {
                    ++certified_runs;
                    if (k_positivity_falsifier(basis, m, k, 1000,
                                               0x9000 + 13 * rep + k)
                            .has_value()) {
                        ++false_alarms;
                    }
                }
            }
            if (phi.coefficients.minCoeff() < -1e-6) {
                ++negative_runs;
                if (!k_positivity_falsifier(basis, m, d, 1000, 0xA000 + rep).has_value()) {
                    ++missed_negatives;
                }
            }
        }
    }
    std::ostringstream detail;
    detail << certified_runs << " certified searches, " << false_alarms << " false alarms; "
           << negative_runs << " negative-coefficient maps, " << missed_negatives
           << " missed at k = d";
    report(9, "certificates are never falsified; negative coefficients always are",
           false_alarms == 0 && missed_negatives == 0, detail.str());
}

// --------------------------------------------------------------- criterion 10

void criterion_10()
{
    WeylBasis basis(2);
    const Scenario sc = pauli_tanh(1.0);
    const Spectrum s = sc.spectrum(TimeGrid::uniform(5.0, 500));
    const WitnessTrace trace = run_witness_suite(basis, s, 100, 42);
    const double max_blp = trace.distance_derivatives.maxCoeff();
    const double min_entropy = trace.entropy_derivatives.minCoeff();
    std::ostringstream detail;
    detail << "max trace-distance derivative " << max_blp << ", min entropy derivative "
           << min_entropy;
    report(10, "100 seeded state pairs: BLP <= 1e-6 and entropy >= -1e-6 everywhere",
           max_blp <= 1e-6 && min_entropy >= -1e-6, detail.str());
}

// --------------------------------------------------------------- criterion 11

void criterion_11()
{
    double worst_scenario = 0.0;
    {
        const Scenario sc = pauli_tanh(1.0);
        worst_scenario = std::max(
            worst_scenario, volume_measure(sc.spectrum(TimeGrid::uniform(5.0, 500))).measure);
        const Scenario e3 = qutrit_e3(1.0);
        worst_scenario = std::max(
            worst_scenario, volume_measure(e3.spectrum(TimeGrid::uniform(2.0, 500))).measure);
    }
    double worst_random = 0.0;
    {
        std::mt19937_64 rng(31337);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (int d : {2, 3}) {
            WeylBasis basis(d);
            const TimeGrid grid = TimeGrid::uniform(2.0, 101);
            for (int rep = 0; rep < 25; ++rep) {
                Eigen::MatrixXd values(101, d * d - 1);
                for (int k = 0; k < d * d - 1; ++k) {
                    const double a = uni(rng);
                    const double wfreq = 0.5 + 2.0 * uni(rng);
                    for (std::size_t i = 0; i < grid.size(); ++i) {
                        values(static_cast<Eigen::Index>(i), k) =
                            a * (1.0 + std::sin(wfreq * grid[i])) * 0.5;  // >= 0
                    }
                }
                const Spectrum s =
                    spectrum_from_cumulative(basis, cumulative(RateProfile{d, grid, values, {}}));
                worst_random = std::max(worst_random, volume_measure(s).measure);
            }
        }
    }
    double constructed = 0.0;
    {
        WeylBasis basis(2);
        const TimeGrid grid = TimeGrid::uniform(3.0, 301);
        Eigen::MatrixXd values(301, 3);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double t = grid[i];
            values.row(static_cast<Eigen::Index>(i))
                .setConstant(t > 1.0 && t < 2.0 ? -0.5 : 0.5);
        }
        const Spectrum s =
            spectrum_from_cumulative(basis, cumulative(RateProfile{2, grid, values, {}}));
        constructed = volume_measure(s).measure;
    }
    std::ostringstream detail;
    detail << "scenario measures <= " << worst_scenario << ", nonnegative-rate measures <= "
           << worst_random << ", constructed violation measure " << constructed;
    report(11, "geometric measure: 0 for monotone cases, > 1e-4 for the violation",
           worst_scenario <= 1e-8 && worst_random <= 1e-8 && constructed > 1e-4,
           detail.str());
}

// --------------------------------------------------------------- criterion 12

void criterion_12()
{
    const fs::path root =
        fs::temp_directory_path() / ("rudiv_acceptance_" + std::to_string(std::random_device{}()));
    fs::create_directories(root);

    // the commands narrate to stdout; keep the acceptance log clean
    std::ostringstream sink;
    std::streambuf* saved = std::cout.rdbuf(sink.rdbuf());

    RunConfig config;
    config.scenario = "qutrit-e3";
    config.c = 1.0;
    config.t_max = 2.0;
    config.steps = 100;
    config.pairs = 10;
    config.trials = 100;
    config.seed = 42;

    bool ok = true;
    config.out_dir = (root / "c1").string();
    ok &= cmd_classify(config) == kExitOk;
    config.out_dir = (root / "c2").string();
    ok &= cmd_classify(config) == kExitOk;
    ok &= slurp(root / "c1" / "report.json") == slurp(root / "c2" / "report.json");

    config.out_dir = (root / "w1").string();
    ok &= cmd_witness(config) == kExitOk;
    config.out_dir = (root / "w2").string();
    ok &= cmd_witness(config) == kExitOk;
    ok &= slurp(root / "w1" / "witness.json") == slurp(root / "w2" / "witness.json");

    std::cout.rdbuf(saved);
    fs::remove_all(root);
    report(12, "repeated classify/witness runs are byte-identical", ok);
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of 12 criteria passed in %.1f s\n", 12 - failures, seconds);
    return failures == 0 ? 0 : 1;
}
