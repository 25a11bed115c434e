// SPDX-License-Identifier: Apache-2.0
//
// schatten-lab: kernel construction, Schur multiplier norm estimation and
// the experiment suites behind one binary with reproducible configs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <algorithm>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "schatten/experiments.hpp"
#include "schatten/matrix_io.hpp"
#include "schatten/prng.hpp"

namespace {

using namespace schatten;

std::string resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SCHATTEN_LAB_OUT"); env && *env) return env;
    return "out";
}

nlohmann::json load_config(const std::string& path) {
    if (path.empty()) return nlohmann::json::object();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

int cmd_kernel(const nlohmann::json& file_cfg, bool use_defaults, const std::optional<double>& x_extent,
               const std::optional<double>& x_step, const std::optional<double>& s_extent,
               const std::optional<double>& s_step, const std::string& out_dir) {
    KernelBuildParams params = (!use_defaults && file_cfg.contains("kernel"))
                                   ? KernelBuildParams::from_json(file_cfg.at("kernel"))
                                   : KernelBuildParams{};
    if (x_extent) params.x_extent = *x_extent;
    if (x_step) params.x_step = *x_step;
    if (s_extent) params.s_extent = *s_extent;
    if (s_step) params.s_step = *s_step;

    KernelG kernel = build_kernel(params);
    ResidualReport res = representation_residuals(kernel, standard_ratio_grid());

    std::filesystem::create_directories(out_dir);
    {
        std::ofstream f(std::filesystem::path(out_dir) / "kernel.csv", std::ios::binary);
        write_kernel_csv(kernel, f);
    }
    {
        std::ofstream f(std::filesystem::path(out_dir) / "kernel-residuals.csv", std::ios::binary);
        f << "ratio,residual\n";
        for (std::size_t i = 0; i < res.ratios.size(); ++i)
            f << fmt_g17(res.ratios[i]) << ',' << fmt_g17(res.residuals[i]) << "\n";
    }
    {
        nlohmann::json summary = {{"build_params", kernel.build_params.to_json()},
                                  {"max_residual", res.max_residual},
                                  {"max_imag", res.max_imag},
                                  {"moment_m0", kernel_moment(kernel, 0)},
                                  {"moment_m2", kernel_moment(kernel, 2)},
                                  {"weighted_moment", kernel_weighted_moment(kernel)},
                                  {"passed", res.max_residual <= 1e-6}};
        std::ofstream f(std::filesystem::path(out_dir) / "kernel-summary.json", std::ios::binary);
        f << summary.dump(2) << "\n";
    }

    std::cout << "kernel: " << kernel.s_points.size() << " s-points, max representation residual "
              << fmt_g17(res.max_residual) << " over " << res.ratios.size() << " ratios\n";
    if (res.max_residual > 1e-6) {
        std::cerr << "kernel: representation residual exceeds 1e-6; grid too coarse or truncated\n";
        return 1;
    }
    return 0;
}

int cmd_norm(const nlohmann::json& file_cfg, const std::string& symbol_path, std::string f_descriptor,
             std::vector<double> lambdas, std::vector<double> mus, std::optional<double> osc_s, double p,
             const EstimatorConfig& est_cfg, const std::string& out_dir) {
    // flags override config-file values
    if (f_descriptor.empty() && file_cfg.contains("f")) f_descriptor = file_cfg.at("f").dump();
    if (lambdas.empty() && file_cfg.contains("lambdas"))
        lambdas = file_cfg.at("lambdas").get<std::vector<double>>();
    if (mus.empty() && file_cfg.contains("mus")) mus = file_cfg.at("mus").get<std::vector<double>>();
    if (!osc_s && file_cfg.contains("s")) osc_s = file_cfg.at("s").get<double>();

    std::optional<SchurSymbol> phi;
    if (!symbol_path.empty()) {
        std::ifstream in(symbol_path);
        if (!in) {
            std::cerr << "norm: cannot open symbol file " << symbol_path << "\n";
            return 1;
        }
        nlohmann::json j;
        try {
            in >> j;
            phi = SchurSymbol(matrix_from_json(j));
        } catch (const std::exception& e) {
            std::cerr << "norm: malformed symbol file: " << e.what() << "\n";
            return 1;
        }
    } else if (!f_descriptor.empty()) {
        ScalarFunction f = ScalarFunction::from_descriptor(nlohmann::json::parse(f_descriptor));
        if (f.monotonicity() == Monotonicity::nondecreasing) f = strictify(f, 1e-6);
        phi = divided_difference_symbol(f, lambdas);
    } else if (!mus.empty() && osc_s) {
        phi = oscillatory_symbol({mus, *osc_s});
    } else {
        std::cerr << "norm: provide --symbol, or --f + --lambdas, or --mus + --s\n";
        return 1;
    }

    NormEstimate est = estimate_norm(*phi, p, est_cfg);
    std::cout << "lower bound on ||M_phi||_{S^" << fmt_g17(p) << " -> S^" << fmt_g17(p)
              << "}: " << fmt_g17(est.value) << "\n"
              << "iterations: " << est.iterations << "  starts: " << est.starts
              << "  converged: " << (est.converged ? "yes" : "no") << "\n";
    if (p == 2.0) std::cout << "exact S^2 value (max |phi|): " << fmt_g17(exact_norm_p2(*phi)) << "\n";

    std::filesystem::create_directories(out_dir);
    {
        std::ofstream f(std::filesystem::path(out_dir) / "witness.json", std::ios::binary);
        f << matrix_json_text(est.witness) << "\n";
    }
    {
        nlohmann::json summary = {{"value", est.value},
                                  {"p", p},
                                  {"iterations", est.iterations},
                                  {"starts", est.starts},
                                  {"converged", est.converged},
                                  {"estimator", est_cfg.to_json()},
                                  {"note", "value is a certified lower bound, not the norm"}};
        std::ofstream f(std::filesystem::path(out_dir) / "norm-summary.json", std::ios::binary);
        f << summary.dump(2) << "\n";
    }
    return 0;
}

int cmd_experiment(const std::string& suite, const SuiteConfig& cfg, const std::string& out_dir) {
    SuiteResult result = run_suite(suite, cfg);
    std::filesystem::create_directories(out_dir);
    // the thread knob is deliberately not echoed: outputs are identical
    // at any --threads value
    nlohmann::json summary = {{"suite", suite},
                              {"config", cfg.to_json()},
                              {"passed", result.passed},
                              {"reports", nlohmann::json::array()}};
    for (const auto& rep : result.reports) {
        const std::string stem = rep.write(out_dir);
        summary["reports"].push_back({{"file", stem}, {"passed", rep.passed}, {"summary", rep.summary}});
        std::cout << rep.experiment_id << ": " << (rep.passed ? "pass" : "FAIL") << "  ("
                  << rep.rows.size() << " rows -> " << stem << ".csv)\n";
    }
    {
        std::ofstream f(std::filesystem::path(out_dir) / ("suite-" + suite + ".json"), std::ios::binary);
        f << summary.dump(2) << "\n";
    }
    if (!result.passed) {
        std::cerr << "experiment " << suite << ": invariant failures (see reports in " << out_dir << ")\n";
        return 1;
    }
    std::cout << "experiment " << suite << ": all invariants pass\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"schatten-lab: Schur multiplier norms, the Fourier kernel g and the operator-Lipschitz experiment suites"};
    app.require_subcommand(1);

    std::string config_path, out_flag;
    std::uint64_t seed = 2024;
    int threads = 0;
    app.add_option("--config", config_path, "JSON config file; flags override config values");
    app.add_option("--seed", seed, "root seed; all randomness derives from it");
    app.add_option("--out", out_flag, "output directory (default: $SCHATTEN_LAB_OUT or ./out)");
    app.add_option("--threads", threads, "worker thread count (0 = library default)");

    // kernel
    auto* kernel_cmd = app.add_subcommand("kernel", "build the Fourier kernel g and verify the representation");
    kernel_cmd->fallthrough();
    std::optional<double> kx_extent, kx_step, ks_extent, ks_step;
    bool kernel_defaults = false;
    kernel_cmd->add_flag("--defaults", kernel_defaults, "use the default grid");
    kernel_cmd->add_option("--x-extent", kx_extent, "right end of the x integration interval");
    kernel_cmd->add_option("--x-step", kx_step, "Simpson step in x");
    kernel_cmd->add_option("--s-extent", ks_extent, "half-width of the s grid");
    kernel_cmd->add_option("--s-step", ks_step, "trapezoid step in s");

    // norm
    auto* norm_cmd = app.add_subcommand("norm", "estimate a Schur multiplier norm (certified lower bound)");
    norm_cmd->fallthrough();
    std::string symbol_path, f_descriptor;
    std::vector<double> lambdas, mus;
    std::optional<double> osc_s;
    double p = 2.0;
    std::optional<int> est_starts, est_iters;
    std::optional<double> est_tol;
    norm_cmd->add_option("--symbol", symbol_path, "JSON file with the symbol matrix");
    norm_cmd->add_option("--f", f_descriptor, "scalar function descriptor JSON (divided-difference symbol)");
    norm_cmd->add_option("--lambdas", lambdas, "ascending eigenvalue sequence for --f");
    norm_cmd->add_option("--mus", mus, "ascending sequence for an oscillatory symbol");
    norm_cmd->add_option("--s", osc_s, "frequency for the oscillatory symbol");
    norm_cmd->add_option("--p", p, "Schatten exponent in (1, inf)")->required();
    norm_cmd->add_option("--starts", est_starts, "estimator starts");
    norm_cmd->add_option("--max-iters", est_iters, "estimator iteration cap per start");
    norm_cmd->add_option("--tol", est_tol, "estimator ratio tolerance");

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "run an experiment suite");
    exp_cmd->fallthrough();
    std::string suite;
    bool exp_defaults = false;
    std::optional<double> exp_p;
    std::optional<std::size_t> exp_n;
    std::optional<int> exp_trials;
    exp_cmd->add_option("suite", suite, "one of: lipschitz, theorem2, lemma-growth, reconstruction, integer-reduction, full")
        ->required();
    exp_cmd->add_flag("--defaults", exp_defaults, "use the default grids");
    exp_cmd->add_option("--p", exp_p, "restrict the p grid to one value");
    exp_cmd->add_option("--n", exp_n, "restrict the n grid to one value");
    exp_cmd->add_option("--trials", exp_trials, "trials per cell");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_threads(threads);
        const std::string out_dir = resolve_out_dir(out_flag);
        const nlohmann::json file_cfg = load_config(config_path);

        if (kernel_cmd->parsed()) {
            return cmd_kernel(file_cfg, kernel_defaults, kx_extent, kx_step, ks_extent, ks_step, out_dir);
        }
        if (norm_cmd->parsed()) {
            EstimatorConfig est;
            if (file_cfg.contains("estimator")) est = EstimatorConfig::from_json(file_cfg.at("estimator"));
            est.seed = seed;
            if (est_starts) est.starts = *est_starts;
            if (est_iters) est.max_iters = *est_iters;
            if (est_tol) est.tol = *est_tol;
            return cmd_norm(file_cfg, symbol_path, f_descriptor, lambdas, mus, osc_s, p, est, out_dir);
        }
        if (exp_cmd->parsed()) {
            if (std::find(suite_names.begin(), suite_names.end(), suite) == suite_names.end()) {
                std::cerr << "unknown suite '" << suite << "'; valid suites:";
                for (const auto& s : suite_names) std::cerr << ' ' << s;
                std::cerr << "\n";
                return 1;
            }
            const bool use_file = !exp_defaults && file_cfg.is_object() && !file_cfg.empty();
            SuiteConfig cfg = use_file ? SuiteConfig::from_json(file_cfg) : SuiteConfig{};
            if (!app.get_option("--seed")->empty()) cfg.seed = seed;
            // estimator seed follows the root seed unless the config
            // pinned one explicitly
            const bool estimator_seed_given =
                use_file && file_cfg.contains("estimator") && file_cfg.at("estimator").contains("seed");
            if (!estimator_seed_given) cfg.estimator.seed = derive_seed(cfg.seed, 0xE57);
            if (exp_p) cfg.p_grid = {*exp_p};
            if (exp_n) cfg.n_grid = {*exp_n};
            if (exp_trials) cfg.trials = *exp_trials;
            return cmd_experiment(suite, cfg, out_dir);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
