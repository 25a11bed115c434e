// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "schatten/fourier_kernel.hpp"

using namespace schatten;

namespace {

// one default build shared across the test cases in this file
const KernelG& default_kernel() {
    static KernelG k = build_kernel();
    return k;
}

} // namespace

TEST_CASE("smooth_step plateaus and midpoint") {
    CHECK(smooth_step(0.5) == 1.0);
    CHECK(smooth_step(0.0) == 1.0);
    CHECK(smooth_step(-2.0) == 0.0);
    CHECK(smooth_step(-1.0) == 0.0);
    CHECK(smooth_step(-0.5) == doctest::Approx(0.5).epsilon(1e-14));
    double prev = -1.0;
    for (double x = -1.5; x <= 0.5; x += 1e-3) {
        const double v = smooth_step(x);
        CHECK(v >= prev - 1e-15);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        prev = v;
    }
}

TEST_CASE("profile_h values") {
    CHECK(profile_h(0.0) == 1.0);
    CHECK(profile_h(-1.0) == 0.0);
    CHECK(profile_h(-5.0) == 0.0);
    CHECK(profile_h(2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    // continuous across the cutoff
    CHECK(profile_h(-1.0 + 1e-9) <= 1e-12);
    CHECK(std::fabs(profile_h(1e-12) - 1.0) <= 1e-11);
}

TEST_CASE("kernel values are conjugate symmetric") {
    const KernelG& k = default_kernel();
    const std::size_t ns = k.s_points.size();
    const double gmax = [&] {
        double m = 0.0;
        for (const auto& v : k.values) m = std::max(m, std::abs(v));
        return m;
    }();
    for (std::size_t i = 0; i < ns; ++i) {
        const auto& mirrored = k.values[ns - 1 - i];
        CHECK(std::abs(k.values[i] - std::conj(mirrored)) <= 1e-10);
    }
    // tail smallness at the grid ends
    CHECK(std::abs(k.values.front()) <= 1e-10 * gmax);
    CHECK(std::abs(k.values.back()) <= 1e-10 * gmax);
}

TEST_CASE("representation identity at reference points") {
    const KernelG& k = default_kernel();
    CHECK(std::abs(evaluate_representation(k, 0.999, 1.0) - cdouble(0.999, 0.0)) <= 1e-6);
    CHECK(std::abs(evaluate_representation(k, 1.0, std::exp(1.0)) - cdouble(std::exp(-1.0), 0.0)) <= 1e-6);
    CHECK(std::abs(evaluate_representation(k, 1.0, 2.0) - cdouble(0.5, 0.0)) <= 1e-6);
    CHECK(std::abs(evaluate_representation(k, 0.001, 0.002) - cdouble(0.5, 0.0)) <= 1e-6);
    CHECK(std::abs(evaluate_representation(k, 1.0, std::exp(4.0)) - cdouble(std::exp(-4.0), 0.0)) <= 1e-6);
}

TEST_CASE("representation residuals over the standard ratio grid") {
    ResidualReport rep = representation_residuals(default_kernel(), standard_ratio_grid());
    CHECK(rep.max_residual <= 1e-6);
    CHECK(rep.max_imag <= 1e-8);
}

TEST_CASE("scale invariance of the representation") {
    const KernelG& k = default_kernel();
    const cdouble base = evaluate_representation(k, 0.25, 1.0);
    for (double c : {1e-3, 1.0, 1e3}) {
        const cdouble v = evaluate_representation(k, 0.25 * c, 1.0 * c);
        CHECK(std::abs(v - base) <= 1e-10);
    }
}

TEST_CASE("evaluate_representation rejects out-of-domain inputs") {
    const KernelG& k = default_kernel();
    CHECK_THROWS_AS(evaluate_representation(k, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_representation(k, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_representation(k, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_representation(k, 1.0, std::exp(41.0)), std::invalid_argument);
    CHECK_NOTHROW(evaluate_representation(k, 1.0, 1.0));  // ratio-1 limit is admitted
}

TEST_CASE("moments are finite and the m range is enforced") {
    const KernelG& k = default_kernel();
    double prev = -1.0;
    for (int m = 0; m <= 8; ++m) {
        const double v = kernel_moment(k, m);
        CHECK(std::isfinite(v));
        CHECK(v > 0.0);
        if (m > 0) CHECK(v != prev);
        prev = v;
    }
    CHECK_THROWS_AS(kernel_moment(k, 9), std::invalid_argument);
    CHECK_THROWS_AS(kernel_moment(k, -1), std::invalid_argument);
    CHECK(std::isfinite(kernel_weighted_moment(k)));
    // integral of g itself is h(0) = 1
    cdouble total(0.0, 0.0);
    for (std::size_t i = 0; i < k.s_points.size(); ++i) total += k.weights[i] * k.values[i];
    CHECK(std::abs(total - cdouble(1.0, 0.0)) <= 1e-6);
}

TEST_CASE("moments are stable under refinement on a shortened grid") {
    // shortened grids keep this check quick; the acceptance suite runs it
    // on the default grid
    KernelBuildParams base;
    base.s_extent = 140.0;
    KernelBuildParams finer = base;
    finer.s_step = base.s_step / 2.0;
    finer.s_extent = base.s_extent * 2.0;
    KernelG kb = build_kernel(base), kf = build_kernel(finer);
    for (int m = 0; m <= 4; ++m) {
        const double a = kernel_moment(kb, m), b = kernel_moment(kf, m);
        CHECK(std::fabs(a - b) / std::fabs(b) < 0.01);
    }
    const double wa = kernel_weighted_moment(kb), wb = kernel_weighted_moment(kf);
    CHECK(std::fabs(wa - wb) / wb < 0.01);
}

TEST_CASE("build_kernel validates parameters") {
    CHECK_THROWS_AS(build_kernel(20.0, 1e-3, 60.0, 0.05), std::invalid_argument);  // exp(-20) too large
    CHECK_THROWS_AS(build_kernel(40.0, -1e-3, 60.0, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(build_kernel(40.0, 1e-3, 60.0, 0.0), std::invalid_argument);
}

TEST_CASE("parallel and serial kernel builds are bit-identical") {
    KernelBuildParams p;
    p.s_extent = 30.0;
    p.x_step = 5e-3;
    KernelG a = build_kernel(p);
    KernelG b = reference::build_kernel_serial(p);
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
    CHECK(a.s_points == b.s_points);
    CHECK(a.weights == b.weights);
}

TEST_CASE("kernel CSV export carries the build parameters") {
    KernelBuildParams p;
    p.s_extent = 2.0;
    p.s_step = 1.0;
    KernelG k = build_kernel(p);
    std::ostringstream os;
    write_kernel_csv(k, os);
    const std::string text = os.str();
    CHECK(text.rfind("# {", 0) == 0);
    CHECK(text.find("s,re_g,im_g,weight") != std::string::npos);
    CHECK(text.find("x_extent") != std::string::npos);
    // header comment line parses back to the same parameters
    const auto json_part = text.substr(2, text.find('\n') - 2);
    KernelBuildParams back = KernelBuildParams::from_json(nlohmann::json::parse(json_part));
    CHECK(back.s_extent == k.build_params.s_extent);
    CHECK(back.x_step == k.build_params.x_step);
}
