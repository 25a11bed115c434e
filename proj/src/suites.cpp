// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "schatten/experiments.hpp"
#include "schatten/matrix_io.hpp"
#include "schatten/prng.hpp"
#include "schatten/schatten_norm.hpp"

namespace schatten {

const std::vector<std::string> suite_names = {"lipschitz",      "theorem2",          "lemma-growth",
                                              "reconstruction", "integer-reduction", "full"};

nlohmann::json SuiteConfig::to_json() const {
    return {{"p_grid", p_grid},
            {"n_grid", n_grid},
            {"trials", trials},
            {"seed", seed},
            {"estimator", estimator.to_json()},
            {"kernel", kernel.to_json()},
            {"growth_n", growth_n},
            {"growth_s_grid", growth_s_grid}};
}

SuiteConfig SuiteConfig::from_json(const nlohmann::json& j) {
    SuiteConfig c;
    if (j.contains("p_grid")) c.p_grid = j.at("p_grid").get<std::vector<double>>();
    if (j.contains("n_grid")) c.n_grid = j.at("n_grid").get<std::vector<std::size_t>>();
    if (j.contains("trials")) c.trials = j.at("trials").get<int>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("estimator")) c.estimator = EstimatorConfig::from_json(j.at("estimator"));
    if (j.contains("kernel")) c.kernel = KernelBuildParams::from_json(j.at("kernel"));
    if (j.contains("growth_n")) c.growth_n = j.at("growth_n").get<std::size_t>();
    if (j.contains("growth_s_grid")) c.growth_s_grid = j.at("growth_s_grid").get<std::vector<double>>();
    return c;
}

namespace {

// ascending sequence with gaps repaired to clear the divided-difference
// degeneracy tolerance
std::vector<double> repair_gaps(std::vector<double> v) {
    if (v.empty()) return v;
    const double scale = std::max({1.0, std::fabs(v.front()), std::fabs(v.back())});
    const double floor_gap = 2.1e-10 * scale;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[i - 1] + floor_gap) v[i] = v[i - 1] + floor_gap;
    return v;
}

struct MergedSpectra {
    std::vector<double> lambdas;     // sorted union, gaps repaired
    std::vector<std::size_t> pos_a;  // position of each A-eigenvalue
    std::vector<std::size_t> pos_b;  // position of each B-eigenvalue
};

MergedSpectra merge_spectra(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<std::pair<double, std::size_t>> tagged;
    tagged.reserve(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) tagged.emplace_back(a[i], i);
    for (std::size_t i = 0; i < b.size(); ++i) tagged.emplace_back(b[i], a.size() + i);
    std::stable_sort(tagged.begin(), tagged.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    MergedSpectra m;
    m.lambdas.resize(tagged.size());
    m.pos_a.resize(a.size());
    m.pos_b.resize(b.size());
    for (std::size_t k = 0; k < tagged.size(); ++k) {
        m.lambdas[k] = tagged[k].first;
        if (tagged[k].second < a.size()) m.pos_a[tagged[k].second] = k;
        else m.pos_b[tagged[k].second - a.size()] = k;
    }
    m.lambdas = repair_gaps(std::move(m.lambdas));
    return m;
}

// Theorem-2 estimate for the chain: the divided-difference symbol on the
// merged spectra of the cell's argmax trial, with the trial's own
// direction embedded as an extra estimator start. That start alone
// reproduces the trial's Lipschitz ratio, which is what pins the chain
// inequality up to strictification error.
double chain_theorem2_estimate(const ScalarFunction& f, const LipschitzOutcome& lip, double p,
                               const EstimatorConfig& base, ExperimentReport* report) {
    auto dec_a = hermitian_eig(HermitianMatrix(lip.a_best));
    auto dec_b = hermitian_eig(HermitianMatrix(lip.b_best));
    MergedSpectra m = merge_spectra(dec_a.eigenvalues, dec_b.eigenvalues);

    ComplexMatrix diff = lip.a_best - lip.b_best;
    ComplexMatrix e_small = matmul(dec_a.eigenvectors.adjoint(), matmul(diff, dec_b.eigenvectors));
    ComplexMatrix witness(m.lambdas.size(), m.lambdas.size());
    for (std::size_t k = 0; k < m.pos_a.size(); ++k)
        for (std::size_t l = 0; l < m.pos_b.size(); ++l) witness(m.pos_a[k], m.pos_b[l]) = e_small(k, l);

    EstimatorConfig cfg = base;
    cfg.extra_starts.push_back(std::move(witness));

    if (f.monotonicity() != Monotonicity::general)
        return theorem2_experiment(f, m.lambdas, p, cfg, report).value;
    auto parts = split_monotone(f);
    const double e1 = theorem2_experiment(parts.first, m.lambdas, p, cfg, report).value;
    const double e2 = theorem2_experiment(parts.second, m.lambdas, p, cfg, report).value;
    return e1 + e2;
}

// strictly ascending lambdas from a seeded spectrum; the standard cell
// input for the standalone theorem-2 suite
std::vector<double> seeded_lambdas(std::size_t n, std::uint64_t seed) {
    auto dec = hermitian_eig(random_hermitian(n, seed));
    return repair_gaps(dec.eigenvalues);
}

std::vector<ScalarFunction> theorem2_functions() {
    auto abs_parts = split_monotone(ScalarFunction::absolute_value());
    auto sine_parts = split_monotone(ScalarFunction::scaled_sine(1.0));
    return {ScalarFunction::identity(), ScalarFunction::piecewise_linear({0.0}, {0.0, 1.0}),
            abs_parts.second, sine_parts.first};
}

ExperimentReport lipschitz_suite(const SuiteConfig& cfg, bool& passed,
                                 std::map<std::string, LipschitzOutcome>* outcomes) {
    ExperimentReport rep;
    rep.experiment_id = "lipschitz";
    rep.parameters = cfg.to_json();
    rep.columns = {"f", "p", "n", "trial", "ensemble", "delta_norm_p", "ratio"};
    double global_max = 0.0;
    bool ok = true;
    std::uint64_t cell = 0;
    for (const auto& f : ScalarFunction::stock_set()) {
        for (double p : cfg.p_grid) {
            for (std::size_t n : cfg.n_grid) {
                LipschitzOutcome out =
                    run_lipschitz(f, p, n, cfg.trials, derive_seed(cfg.seed, cell));
                for (const auto& row : out.report.rows) {
                    rep.rows.push_back({f.name(), fmt_g17(p), std::to_string(n), row[0], row[1], row[2], row[3]});
                }
                global_max = std::max(global_max, out.max_ratio);
                if (p == 2.0 && out.max_ratio > 1.0 + 1e-9) ok = false;
                if (out.report.summary.value("slope_one_region", false) &&
                    out.report.summary.value("identity_direction_ratio", 0.0) < 1.0 - 1e-9)
                    ok = false;
                if (outcomes)
                    (*outcomes)[f.name() + "|" + fmt_g17(p) + "|" + std::to_string(n)] = std::move(out);
                ++cell;
            }
        }
    }
    rep.summary = {{"max_ratio", global_max}, {"p2_contraction_and_ordering_ok", ok}};
    rep.passed = ok;
    passed = passed && ok;
    return rep;
}

ExperimentReport theorem2_suite(const SuiteConfig& cfg, bool& passed) {
    ExperimentReport rep;
    rep.experiment_id = "theorem2";
    rep.parameters = cfg.to_json();
    rep.columns = {"f", "n", "p", "estimate", "exact_p2", "iterations", "converged"};
    bool ok = true;
    double max_estimate = 0.0;
    std::uint64_t cell = 0;
    for (const auto& f : theorem2_functions()) {
        for (double p : cfg.p_grid) {
            for (std::size_t n : cfg.n_grid) {
                if (!(p > 1.0) || std::isinf(p)) continue;  // estimator domain
                EstimatorConfig ecfg = cfg.estimator;
                ecfg.seed = derive_seed(cfg.seed, 1000 + cell);
                auto lambdas = seeded_lambdas(n, derive_seed(cfg.seed, 2000 + cell));
                NormEstimate est = theorem2_experiment(f, lambdas, p, ecfg, &rep);
                max_estimate = std::max(max_estimate, est.value);
                if (p == 2.0) {
                    // S^2 value is max phi <= 1 for these symbols
                    if (est.value > 1.0 + 1e-6) ok = false;
                }
                ++cell;
            }
        }
    }
    rep.summary = {{"max_estimate", max_estimate}, {"p2_bounds_ok", ok}};
    rep.passed = ok;
    passed = passed && ok;
    return rep;
}

ExperimentReport lemma_growth_suite(const SuiteConfig& cfg, bool& passed,
                                    std::map<double, FitResult>* fits) {
    ExperimentReport rep;
    rep.experiment_id = "lemma-growth";
    rep.parameters = cfg.to_json();
    bool ok = true;
    std::uint64_t cell = 0;
    for (double p : cfg.p_grid) {
        if (!(p > 1.0) || std::isinf(p)) continue;
        EstimatorConfig ecfg = cfg.estimator;
        ecfg.seed = derive_seed(cfg.seed, 3000 + cell);
        FitResult fit = lemma_growth_experiment(p, cfg.growth_n, cfg.growth_s_grid, ecfg, &rep);
        if (!(fit.max_ratio > 0.0) || !std::isfinite(fit.max_ratio)) ok = false;
        if (fit.slope_constant != fit.max_ratio) ok = false;
        if (p == 2.0) {
            // unimodular entries: every estimate is exactly 1 at p = 2
            for (std::size_t i = rep.rows.size() - cfg.growth_s_grid.size(); i < rep.rows.size(); ++i)
                if (std::fabs(std::stod(rep.rows[i][3]) - 1.0) > 1e-6) ok = false;
        }
        rep.summary["khat_p" + fmt_g17(p)] = fit.slope_constant;
        if (fits) (*fits)[p] = std::move(fit);
        ++cell;
    }
    rep.summary["growth_ok"] = ok;
    rep.passed = ok;
    passed = passed && ok;
    return rep;
}

ExperimentReport reconstruction_suite(const SuiteConfig& cfg, const KernelG& kernel, bool& passed) {
    ExperimentReport rep;
    rep.experiment_id = "reconstruction";
    rep.parameters = cfg.to_json();
    rep.columns = {"case", "f", "n", "relative_error"};

    auto abs_parts = split_monotone(ScalarFunction::absolute_value());
    auto sine_parts = split_monotone(ScalarFunction::scaled_sine(1.0));
    const std::vector<ScalarFunction> funcs = {
        ScalarFunction::identity(),
        strictify(ScalarFunction::piecewise_linear({0.0}, {0.0, 1.0}), 0.1),
        strictify(abs_parts.second, 0.05),
        strictify(sine_parts.first, 0.1)};
    const std::vector<std::size_t> dims = {2, 3, 4, 6, 8};

    bool ok = true;
    double worst = 0.0;
    const int cases = 20;
    std::vector<double> errs(cases);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int c = 0; c < cases; ++c) {
        const auto& f = funcs[static_cast<std::size_t>(c) % funcs.size()];
        const std::size_t n = dims[static_cast<std::size_t>(c) % dims.size()];
        SplitMix64 gen(derive_seed(cfg.seed, 4000 + static_cast<std::uint64_t>(c)));
        std::vector<double> lambdas(n);
        double acc = -2.0 + 0.5 * gen.next_double();
        for (std::size_t i = 0; i < n; ++i) {
            acc += 0.1 + 1.9 * gen.next_double();
            lambdas[i] = acc;
        }
        ComplexMatrix x(n, n);
        for (auto& z : x.data()) z = gen.next_complex_gaussian();
        ComplexMatrix recon = reconstruct_multiplier(f, lambdas, kernel, x);
        ComplexMatrix direct = apply_multiplier(divided_difference_symbol(f, lambdas), x);
        const double den = std::max(direct.frobenius_norm(), 1e-30);
        errs[c] = (recon - direct).frobenius_norm() / den;
    }
    for (int c = 0; c < cases; ++c) {
        const auto& f = funcs[static_cast<std::size_t>(c) % funcs.size()];
        const std::size_t n = dims[static_cast<std::size_t>(c) % dims.size()];
        rep.rows.push_back({std::to_string(c), f.name(), std::to_string(n), fmt_g17(errs[c])});
        worst = std::max(worst, errs[c]);
        if (!(errs[c] <= 1e-3)) ok = false;
    }
    rep.summary = {{"max_relative_error", worst}, {"tolerance", 1e-3}, {"reconstruction_ok", ok}};
    rep.passed = ok;
    passed = passed && ok;
    return rep;
}

ExperimentReport integer_reduction_suite(const SuiteConfig& cfg, bool& passed) {
    ExperimentReport rep;
    rep.experiment_id = "integer-reduction";
    rep.parameters = cfg.to_json();
    rep.columns = {"case", "N", "s", "p", "max_entry_deviation", "estimate_original", "estimate_scaled"};

    const std::vector<std::vector<Rational>> sequences = {
        {{1, 2}, {3, 2}},
        {{1, 3}, {1, 2}, {1, 1}},
        {{1, 4}, {3, 4}, {5, 4}, {7, 4}},
        {{-3, 2}, {1, 2}, {5, 2}},
        {{1, 6}, {1, 3}, {2, 3}, {3, 2}},
        {{2, 5}, {3, 5}, {7, 5}, {12, 5}},
        {{-5, 3}, {-1, 3}, {4, 3}, {8, 3}},
        {{1, 7}, {3, 7}, {10, 7}},
        {{0, 1}, {1, 2}, {2, 1}, {7, 2}},
        {{-1, 4}, {1, 4}, {3, 4}, {9, 4}, {13, 4}}};

    bool ok = true;
    for (std::size_t c = 0; c < sequences.size(); ++c) {
        const double s = (c == 2) ? 0.0 : 0.5 + 0.9 * static_cast<double>(c);  // include the s = 0 row
        const double p = cfg.p_grid[c % cfg.p_grid.size()];
        const double pp = (p > 1.0 && !std::isinf(p)) ? p : 3.0;
        EstimatorConfig ecfg = cfg.estimator;
        ecfg.seed = derive_seed(cfg.seed, 5000 + c);
        IntegerReductionResult r = integer_reduction_check(sequences[c], s, pp, ecfg);
        rep.rows.push_back({std::to_string(c), std::to_string(r.scale_n), fmt_g17(s), fmt_g17(pp),
                            fmt_g17(r.max_entry_deviation), fmt_g17(r.estimate_original),
                            fmt_g17(r.estimate_scaled)});
        if (!r.identity_ok || !r.estimate_ok) ok = false;
    }
    rep.summary = {{"reduction_ok", ok}};
    rep.passed = ok;
    passed = passed && ok;
    return rep;
}

ExperimentReport chain_report(const SuiteConfig& cfg, const KernelG& kernel,
                              std::map<std::string, LipschitzOutcome>& outcomes,
                              const std::map<double, FitResult>& fits, bool& passed,
                              ExperimentReport& th2_rows) {
    ExperimentReport rep;
    rep.experiment_id = "chain";
    rep.parameters = cfg.to_json();
    rep.columns = {"f", "p", "n", "max_lipschitz_ratio", "theorem2_estimate", "cp_bound", "ok"};
    bool ok = true;
    std::uint64_t cell = 0;
    for (const auto& f : ScalarFunction::stock_set()) {
        for (double p : cfg.p_grid) {
            if (!(p > 1.0) || std::isinf(p)) continue;
            const double bound = cp_bound_from_kernel(kernel, fits.at(p));
            for (std::size_t n : cfg.n_grid) {
                auto it = outcomes.find(f.name() + "|" + fmt_g17(p) + "|" + std::to_string(n));
                if (it == outcomes.end() || !it->second.has_best) continue;
                EstimatorConfig ecfg = cfg.estimator;
                ecfg.seed = derive_seed(cfg.seed, 6000 + cell);
                const double th2 = chain_theorem2_estimate(f, it->second, p, ecfg, &th2_rows);
                const double lip = it->second.max_ratio;
                const bool cell_ok = lip <= th2 * 1.05 && th2 <= bound * 1.05;
                rep.rows.push_back({f.name(), fmt_g17(p), std::to_string(n), fmt_g17(lip), fmt_g17(th2),
                                    fmt_g17(bound), cell_ok ? "1" : "0"});
                if (!cell_ok) ok = false;
                ++cell;
            }
        }
    }
    rep.summary = {{"chain_ok", ok}};
    rep.passed = ok;
    passed = passed && ok;
    return rep;
}

} // namespace

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (std::find(suite_names.begin(), suite_names.end(), name) == suite_names.end())
        throw std::invalid_argument("unknown suite: " + name);

    SuiteResult result;
    if (name == "lipschitz") {
        result.reports.push_back(lipschitz_suite(cfg, result.passed, nullptr));
    } else if (name == "theorem2") {
        result.reports.push_back(theorem2_suite(cfg, result.passed));
    } else if (name == "lemma-growth") {
        result.reports.push_back(lemma_growth_suite(cfg, result.passed, nullptr));
    } else if (name == "reconstruction") {
        KernelG kernel = build_kernel(cfg.kernel);
        result.reports.push_back(reconstruction_suite(cfg, kernel, result.passed));
    } else if (name == "integer-reduction") {
        result.reports.push_back(integer_reduction_suite(cfg, result.passed));
    } else {
        // full: every component plus the consistency chain
        KernelG kernel = build_kernel(cfg.kernel);
        std::map<std::string, LipschitzOutcome> outcomes;
        std::map<double, FitResult> fits;
        result.reports.push_back(lipschitz_suite(cfg, result.passed, &outcomes));
        result.reports.push_back(theorem2_suite(cfg, result.passed));
        result.reports.push_back(lemma_growth_suite(cfg, result.passed, &fits));
        result.reports.push_back(reconstruction_suite(cfg, kernel, result.passed));
        result.reports.push_back(integer_reduction_suite(cfg, result.passed));
        ExperimentReport th2_rows;
        th2_rows.experiment_id = "chain-theorem2";
        th2_rows.parameters = cfg.to_json();
        result.reports.push_back(chain_report(cfg, kernel, outcomes, fits, result.passed, th2_rows));
        result.reports.push_back(std::move(th2_rows));
    }
    return result;
}

} // namespace schatten
