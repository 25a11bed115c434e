// SPDX-License-Identifier: Apache-2.0
#ifndef SCHATTEN_EXPERIMENTS_HPP
#define SCHATTEN_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schatten/fourier_kernel.hpp"
#include "schatten/funcalc.hpp"
#include "schatten/norm_estimator.hpp"
#include "schatten/scalar_function.hpp"

namespace schatten {

// One experiment run: parameters in, deterministic rows out. Rows are
// preformatted strings so that identical parameters reproduce identical
// bytes regardless of thread count; files are named
// <experiment_id>-<hash(parameters)>.csv/.json.
struct ExperimentReport {
    std::string experiment_id;
    nlohmann::json parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    nlohmann::json summary;
    bool passed = true;

    std::string csv() const;
    std::string file_stem() const;
    nlohmann::json to_json() const;
    // writes <stem>.csv and <stem>.json under dir; returns the stem
    std::string write(const std::string& dir) const;
};

// Empirical stand-in for the growth constant K_p of the oscillatory
// multiplier bound: the max over the s grid of estimate / (1 + |s|).
// slope_constant and max_ratio are the same number by the max-ratio fit;
// both are kept and asserted equal. residuals[i] is the per-point slack
// slope_constant * (1 + |s_i|) - estimate_i (non-negative).
struct FitResult {
    double slope_constant = 0.0;
    double max_ratio = 0.0;
    std::vector<double> residuals;
};

struct LipschitzOptions {
    // permits p = 1 and p = infinity as contrast cases; such runs are
    // flagged in the report
    bool contrast_mode = false;
};

// Outcome of a Lipschitz-ratio run including the argmax trial's
// endpoint matrices (consumed by the consistency-chain driver).
struct LipschitzOutcome {
    ExperimentReport report;
    double max_ratio = 0.0;
    bool has_best = false;
    ComplexMatrix a_best;  // Hermitian
    ComplexMatrix b_best;  // Hermitian
};

// Draws seeded Hermitian A and perturbations D (cycling full-rank,
// rank-1 and commuting ensembles), sets B = A + D, and records
// ||f(A) - f(B)||_p / ||A - B||_p per trial. A deterministic
// identity-direction trial (tight spectrum inside a slope-+-1 region of
// f, D = eps*I) is appended to every run.
LipschitzOutcome run_lipschitz(const ScalarFunction& f, double p, std::size_t n, int trials,
                               std::uint64_t seed, const LipschitzOptions& opts = {});

ExperimentReport lipschitz_ratio_experiment(const ScalarFunction& f, double p, std::size_t n, int trials,
                                            std::uint64_t seed, const LipschitzOptions& opts = {});

// Builds the divided-difference symbol of f on lambdas and estimates its
// S^p -> S^p norm. Non-decreasing f is strictified with eps = 1e-6
// first; non-monotone f is rejected (split it first). If report is
// given, a row with the p = 2 cross-reference is appended.
NormEstimate theorem2_experiment(const ScalarFunction& f, const std::vector<double>& lambdas, double p,
                                 const EstimatorConfig& cfg, ExperimentReport* report = nullptr);

// Estimates the norm of the symbol |k - l|^{is} on n x n matrices for
// each s in the grid and fits K_p by the max of estimate / (1 + |s|).
FitResult lemma_growth_experiment(double p, std::size_t n, const std::vector<double>& s_grid,
                                  const EstimatorConfig& cfg, ExperimentReport* report = nullptr);

// sum_i w_i g(s_i) M(s_i, (f(lambda_k))) M(-s_i, (lambda_k)) applied to
// X: the quadrature reconstruction of the divided-difference multiplier.
// Requires f strictly increasing and all entrywise gap ratios within the
// kernel's x_extent.
ComplexMatrix reconstruct_multiplier(const ScalarFunction& f, const std::vector<double>& lambdas,
                                     const KernelG& k, const ComplexMatrix& x);

struct Rational {
    long long num = 0;
    long long den = 1;
};

struct IntegerReductionResult {
    long long scale_n = 1;            // lcm of the denominators
    double max_entry_deviation = 0.0; // entrywise identity residual
    double estimate_original = 0.0;
    double estimate_scaled = 0.0;
    bool identity_ok = false;  // deviation <= 1e-12
    bool estimate_ok = false;  // estimates agree within 1e-9 relative
};

// Verifies |mu_k - mu_l|^{is} = N^{-is} |N mu_k - N mu_l|^{is} entrywise
// and that same-seed norm estimates of the two symbols coincide — the
// unimodular-factor invariance the rational-reduction step relies on.
IntegerReductionResult integer_reduction_check(const std::vector<Rational>& mus, double s, double p,
                                               const EstimatorConfig& cfg);

// slope_constant^2 * sum w_i |g(s_i)| (1 + |s_i|)^2: the empirical
// stand-in for C_p assembled from the growth fit and the kernel moment.
double cp_bound_from_kernel(const KernelG& k, const FitResult& growth);

// ---------------------------------------------------------------------
// Suites: named bundles the CLI exposes. Each returns its reports plus a
// pass flag; "full" additionally evaluates the consistency chain
//   max Lipschitz ratio <= max theorem-2 estimate + 5%
//                       <= kernel-derived bound + 5%
// per (f, p, n) cell.
// ---------------------------------------------------------------------

struct SuiteConfig {
    std::vector<double> p_grid{1.1, 1.25, 1.5, 2.0, 3.0, 4.0, 8.0};
    std::vector<std::size_t> n_grid{2, 4, 8, 16};
    int trials = 100;
    std::uint64_t seed = 2024;
    EstimatorConfig estimator;
    KernelBuildParams kernel;
    std::size_t growth_n = 16;
    std::vector<double> growth_s_grid{-20, -10, -5, -1, 0, 1, 5, 10, 20};

    nlohmann::json to_json() const;
    static SuiteConfig from_json(const nlohmann::json& j);
};

struct SuiteResult {
    std::vector<ExperimentReport> reports;
    bool passed = true;
};

extern const std::vector<std::string> suite_names;  // valid cmd_experiment suites

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

} // namespace schatten

#endif
