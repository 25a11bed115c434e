// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "schatten/experiments.hpp"
#include "schatten/matrix_io.hpp"
#include "schatten/prng.hpp"
#include "schatten/schatten_norm.hpp"
#include "support/oracles.hpp"

using namespace schatten;

namespace {

SuiteConfig tiny_config() {
    SuiteConfig cfg;
    cfg.p_grid = {1.5, 2.0, 4.0};
    cfg.n_grid = {2, 4};
    cfg.trials = 6;
    cfg.seed = 7;
    cfg.estimator.starts = 6;
    cfg.estimator.max_iters = 150;
    cfg.growth_n = 4;
    cfg.growth_s_grid = {-5.0, 0.0, 5.0};
    return cfg;
}

std::string dump_suite(const SuiteResult& r) {
    std::string all;
    for (const auto& rep : r.reports) {
        all += rep.file_stem();
        all += '\n';
        all += rep.csv();
        all += rep.to_json().dump();
        all += '\n';
    }
    return all;
}

} // namespace

TEST_CASE("identity function gives unit Lipschitz ratios") {
    auto rep = lipschitz_ratio_experiment(ScalarFunction::identity(), 3.0, 5, 12, 42);
    REQUIRE(!rep.rows.empty());
    for (const auto& row : rep.rows) CHECK(std::fabs(std::stod(row[3]) - 1.0) <= 1e-9);
    CHECK(rep.summary.at("max_ratio").get<double>() > 1.0 - 1e-9);
}

TEST_CASE("p = 2 ratios never exceed one") {
    for (const auto& f : ScalarFunction::stock_set()) {
        auto out = run_lipschitz(f, 2.0, 6, 30, 11);
        CHECK(out.max_ratio <= 1.0 + 1e-9);
    }
}

TEST_CASE("identity-direction trial certifies ratio one for slope-one functions") {
    for (const auto& f : {ScalarFunction::identity(), ScalarFunction::absolute_value(),
                          ScalarFunction::piecewise_linear({-2.0, 0.0, 2.0}, {0.5, -1.0, 1.0, 0.25})}) {
        auto out = run_lipschitz(f, 1.5, 4, 3, 5);
        CHECK(out.report.summary.at("slope_one_region").get<bool>());
        CHECK(out.report.summary.at("identity_direction_ratio").get<double>() >= 1.0 - 1e-9);
    }
    // the sine has no slope-one region; the trial still runs
    auto out = run_lipschitz(ScalarFunction::scaled_sine(1.0), 1.5, 4, 3, 5);
    CHECK(!out.report.summary.at("slope_one_region").get<bool>());
}

TEST_CASE("lipschitz experiment input validation") {
    CHECK_THROWS_AS(lipschitz_ratio_experiment(ScalarFunction::identity(), 2.0, 4, 0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(lipschitz_ratio_experiment(ScalarFunction::identity(), 1.0, 4, 5, 1),
                    std::invalid_argument);
    LipschitzOptions contrast;
    contrast.contrast_mode = true;
    CHECK_NOTHROW(lipschitz_ratio_experiment(ScalarFunction::identity(), 1.0, 4, 5, 1, contrast));
    CHECK_NOTHROW(lipschitz_ratio_experiment(ScalarFunction::identity(), p_infinity, 4, 5, 1, contrast));
}

TEST_CASE("theorem2 on the identity matches the mask oracle at n = 2") {
    EstimatorConfig cfg;
    cfg.seed = 3;
    NormEstimate est = theorem2_experiment(ScalarFunction::identity(), {0.0, 1.0}, 4.0, cfg);
    SchurSymbol mask = divided_difference_symbol(ScalarFunction::identity(), {0.0, 1.0});
    const double brute = oracles::brute_force_multiplier_norm(mask, 4.0, 50000, 9);
    CHECK(std::fabs(est.value - brute) <= 0.01 * brute);
}

TEST_CASE("theorem2 at p = 2 stays within the unit bound") {
    EstimatorConfig cfg;
    for (const auto& f :
         {ScalarFunction::identity(), ScalarFunction::piecewise_linear({0.0}, {0.0, 1.0})}) {
        NormEstimate est = theorem2_experiment(f, {-2.0, -1.0, 1.0, 3.0}, 2.0, cfg);
        CHECK(est.value <= 1.0 + 1e-9);
    }
}

TEST_CASE("theorem2 rejects non-monotone functions") {
    EstimatorConfig cfg;
    CHECK_THROWS_AS(theorem2_experiment(ScalarFunction::absolute_value(), {0.0, 1.0}, 2.0, cfg),
                    std::invalid_argument);
}

TEST_CASE("lemma growth fit") {
    EstimatorConfig cfg;
    cfg.seed = 17;
    ExperimentReport rep;
    FitResult fit = lemma_growth_experiment(4.0, 5, {-5.0, -1.0, 0.0, 1.0, 5.0}, cfg, &rep);
    CHECK(fit.slope_constant == fit.max_ratio);
    REQUIRE(rep.rows.size() == 5);
    // the fit is the row-wise max of estimate / (1 + |s|)
    double expect = 0.0;
    for (const auto& row : rep.rows) expect = std::max(expect, std::stod(row[4]));
    CHECK(fit.max_ratio == doctest::Approx(expect).epsilon(1e-15));
    for (double r : fit.residuals) CHECK(r >= -1e-12);
    // s = 0 row is the off-diagonal mask: norm between 1 and 2
    const double s0 = std::stod(rep.rows[2][3]);
    CHECK(s0 >= 1.0 - 1e-9);
    CHECK(s0 <= 2.0 * 1.02);
}

TEST_CASE("lemma growth at p = 2 is exactly one") {
    EstimatorConfig cfg;
    FitResult fit = lemma_growth_experiment(2.0, 6, {-10.0, -1.0, 0.0, 1.0, 10.0}, cfg);
    (void)fit;
    ExperimentReport rep;
    lemma_growth_experiment(2.0, 6, {-10.0, 0.0, 10.0}, cfg, &rep);
    for (const auto& row : rep.rows) CHECK(std::fabs(std::stod(row[3]) - 1.0) <= 1e-6);
}

TEST_CASE("reconstruction: n = 1 gives zero on both routes") {
    KernelBuildParams p;
    p.s_extent = 60.0;
    KernelG k = build_kernel(p);
    ComplexMatrix x(1, 1);
    x(0, 0) = cdouble(2.0, -1.0);
    ComplexMatrix recon = reconstruct_multiplier(ScalarFunction::identity(), {0.5}, k, x);
    CHECK(recon.frobenius_norm() == 0.0);
    ComplexMatrix direct =
        apply_multiplier(divided_difference_symbol(ScalarFunction::identity(), {0.5}), x);
    CHECK(direct.frobenius_norm() == 0.0);
}

TEST_CASE("reconstruction of the identity symbol is the mask") {
    KernelG k = build_kernel();  // default grid for full accuracy
    const std::vector<double> lambdas = {-1.0, 0.2, 2.5, 4.0};
    // applying to the all-ones matrix reads the reconstructed symbol
    ComplexMatrix recon =
        reconstruct_multiplier(ScalarFunction::identity(), lambdas, k, ComplexMatrix::ones(4));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            const cdouble expected = (a == b) ? cdouble(0.0, 0.0) : cdouble(1.0, 0.0);
            CHECK(std::abs(recon(a, b) - expected) <= 1e-6);
        }

    // strictified ramp against the direct multiplier
    ScalarFunction f = strictify(ScalarFunction::piecewise_linear({0.0}, {0.0, 1.0}), 0.1);
    const std::vector<double> l2 = {-2.0, -1.0, 1.0};
    ComplexMatrix x = oracles::random_complex(3, 8);
    ComplexMatrix rec = reconstruct_multiplier(f, l2, k, x);
    ComplexMatrix direct = apply_multiplier(divided_difference_symbol(f, l2), x);
    CHECK((rec - direct).frobenius_norm() <= 1e-3 * direct.frobenius_norm());
}

TEST_CASE("reconstruction rejects bad inputs") {
    KernelBuildParams p;
    p.s_extent = 40.0;
    KernelG k = build_kernel(p);
    ComplexMatrix x = oracles::random_complex(2, 1);
    CHECK_THROWS_AS(reconstruct_multiplier(ScalarFunction::absolute_value(), {0.0, 1.0}, k, x),
                    std::invalid_argument);
    // slope floor 1e-30 pushes the gap ratio far beyond the kernel range
    ScalarFunction nearly_flat = strictify(ScalarFunction::piecewise_linear({}, {0.0}), 1e-30);
    CHECK_THROWS_AS(reconstruct_multiplier(nearly_flat, {0.0, 1.0}, k, x), std::invalid_argument);
}

TEST_CASE("integer reduction identity and estimate invariance") {
    EstimatorConfig cfg;
    cfg.seed = 5;
    // mu = (1/2, 3/2): N = 2
    IntegerReductionResult r1 = integer_reduction_check({{1, 2}, {3, 2}}, 2.3, 3.0, cfg);
    CHECK(r1.scale_n == 2);
    CHECK(r1.identity_ok);
    CHECK(r1.max_entry_deviation <= 1e-12);
    CHECK(r1.estimate_ok);

    // mu = (1/3, 1/2, 1), s = 5, p = 3: N = 6
    IntegerReductionResult r2 = integer_reduction_check({{1, 3}, {1, 2}, {1, 1}}, 5.0, 3.0, cfg);
    CHECK(r2.scale_n == 6);
    CHECK(r2.identity_ok);
    CHECK(r2.estimate_ok);
    CHECK(std::fabs(r2.estimate_original - r2.estimate_scaled) <= 1e-9 * std::max(1.0, r2.estimate_original));

    // s = 0: both symbols are the plain mask
    IntegerReductionResult r3 = integer_reduction_check({{1, 2}, {3, 2}, {7, 2}}, 0.0, 2.0, cfg);
    CHECK(r3.max_entry_deviation == 0.0);

    CHECK_THROWS_AS(integer_reduction_check({{1, 0}, {1, 2}}, 1.0, 2.0, cfg), std::invalid_argument);
    CHECK_THROWS_AS(integer_reduction_check({{3, 2}, {1, 2}}, 1.0, 2.0, cfg), std::invalid_argument);
}

TEST_CASE("cp_bound_from_kernel formula") {
    KernelBuildParams p;
    p.s_extent = 30.0;
    KernelG k = build_kernel(p);
    FitResult degenerate;  // slope 0
    CHECK(cp_bound_from_kernel(k, degenerate) == 0.0);
    FitResult unit;
    unit.slope_constant = 1.0;
    unit.max_ratio = 1.0;
    CHECK(cp_bound_from_kernel(k, unit) == doctest::Approx(kernel_weighted_moment(k)).epsilon(1e-15));
}

TEST_CASE("suite reports are byte-identical across runs and thread counts") {
    SuiteConfig cfg = tiny_config();
    SuiteResult a = run_suite("lipschitz", cfg);
    SuiteResult b = run_suite("lipschitz", cfg);
    CHECK(dump_suite(a) == dump_suite(b));
#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    SuiteResult c = run_suite("lipschitz", cfg);
    omp_set_num_threads(saved);
    CHECK(dump_suite(a) == dump_suite(c));
#endif
}

TEST_CASE("full suite passes on a small configuration") {
    SuiteConfig cfg = tiny_config();
    SuiteResult res = run_suite("full", cfg);
    CHECK(res.passed);
    REQUIRE(res.reports.size() == 7);
    // the chain report orders every cell
    bool found_chain = false;
    for (const auto& rep : res.reports) {
        if (rep.experiment_id != "chain") continue;
        found_chain = true;
        CHECK(!rep.rows.empty());
        for (const auto& row : rep.rows) {
            const double lip = std::stod(row[3]);
            const double th2 = std::stod(row[4]);
            const double bound = std::stod(row[5]);
            CHECK(lip <= th2 * 1.05);
            CHECK(th2 <= bound * 1.05);
        }
    }
    CHECK(found_chain);
    CHECK_THROWS_AS(run_suite("nosuch", cfg), std::invalid_argument);
}
