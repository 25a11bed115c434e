// SPDX-License-Identifier: Apache-2.0
#include "schatten/fourier_kernel.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "schatten/matrix_io.hpp"

namespace schatten {

double smooth_step(double x) {
    if (x >= 0.0) return 1.0;
    if (x <= -1.0) return 0.0;
    const double b1 = std::exp(-1.0 / (x + 1.0));
    const double b2 = std::exp(-1.0 / (-x));
    return b1 / (b1 + b2);
}

double profile_h(double x) {
    if (x <= -1.0) return 0.0;
    return std::exp(-x) * smooth_step(x);
}

nlohmann::json KernelBuildParams::to_json() const {
    return {{"x_extent", x_extent}, {"x_step", x_step},     {"s_extent", s_extent},
            {"s_step", s_step},     {"cutoff_width", cutoff_width}};
}

KernelBuildParams KernelBuildParams::from_json(const nlohmann::json& j) {
    KernelBuildParams p;
    if (j.contains("x_extent")) p.x_extent = j.at("x_extent").get<double>();
    if (j.contains("x_step")) p.x_step = j.at("x_step").get<double>();
    if (j.contains("s_extent")) p.s_extent = j.at("s_extent").get<double>();
    if (j.contains("s_step")) p.s_step = j.at("s_step").get<double>();
    return p;
}

namespace {

struct XGrid {
    double x0 = -1.0;
    double step = 0.0;
    std::vector<double> weighted_h;  // Simpson weight times h at each node
};

XGrid make_x_grid(const KernelBuildParams& p) {
    if (!(p.x_step > 0.0) || !(p.s_step > 0.0) || !(p.x_extent > 0.0) || !(p.s_extent > 0.0))
        throw std::invalid_argument("build_kernel: grid parameters must be positive");
    if (std::exp(-p.x_extent) >= 1e-14)
        throw std::invalid_argument("build_kernel: x_extent too small (need exp(-x_extent) < 1e-14)");
    const double len = p.x_extent + 1.0;
    std::size_t intervals = static_cast<std::size_t>(std::llround(len / p.x_step));
    if (intervals < 2) intervals = 2;
    if (intervals % 2 == 1) ++intervals;  // Simpson needs an even count
    XGrid g;
    g.step = len / static_cast<double>(intervals);
    g.weighted_h.resize(intervals + 1);
    for (std::size_t k = 0; k <= intervals; ++k) {
        double w = (k == 0 || k == intervals) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        g.weighted_h[k] = w * (g.step / 3.0) * profile_h(g.x0 + static_cast<double>(k) * g.step);
    }
    return g;
}

// (1/2pi) * sum_k wh_k * exp(i s x_k), with the phase advanced by a
// recurrence that is re-anchored with an exact polar() every 1024 steps
// to keep the accumulated rounding below ~1e-13.
cdouble kernel_value_at(const XGrid& g, double s) {
    constexpr std::size_t chunk = 1024;
    const cdouble dphase = std::polar(1.0, s * g.step);
    cdouble acc(0.0, 0.0);
    const std::size_t count = g.weighted_h.size();
    for (std::size_t k0 = 0; k0 < count; k0 += chunk) {
        cdouble ph = std::polar(1.0, s * (g.x0 + static_cast<double>(k0) * g.step));
        const std::size_t end = std::min(count, k0 + chunk);
        for (std::size_t k = k0; k < end; ++k) {
            acc += g.weighted_h[k] * ph;
            ph *= dphase;
        }
    }
    return acc / (2.0 * M_PI);
}

KernelG build_on_grid(const KernelBuildParams& p, bool parallel) {
    const XGrid grid = make_x_grid(p);

    std::size_t half = static_cast<std::size_t>(std::llround(p.s_extent / p.s_step));
    if (half < 1) half = 1;
    const std::size_t ns = 2 * half + 1;  // symmetric, includes s = 0
    const double sstep = p.s_extent / static_cast<double>(half);

    KernelG k;
    k.build_params = p;
    k.build_params.s_step = sstep;
    k.build_params.x_step = grid.step;
    k.s_points.resize(ns);
    k.values.resize(ns);
    k.weights.assign(ns, sstep);
    k.weights.front() = sstep / 2.0;
    k.weights.back() = sstep / 2.0;
    for (std::size_t i = 0; i < ns; ++i)
        k.s_points[i] = (static_cast<double>(i) - static_cast<double>(half)) * sstep;

    const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(ns);
    (void)parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::ptrdiff_t i = 0; i < total; ++i)
        k.values[static_cast<std::size_t>(i)] = kernel_value_at(grid, k.s_points[static_cast<std::size_t>(i)]);
    return k;
}

} // namespace

KernelG build_kernel(const KernelBuildParams& params) { return build_on_grid(params, true); }

KernelG build_kernel(double x_extent, double x_step, double s_extent, double s_step) {
    KernelBuildParams p;
    p.x_extent = x_extent;
    p.x_step = x_step;
    p.s_extent = s_extent;
    p.s_step = s_step;
    return build_kernel(p);
}

namespace reference {
KernelG build_kernel_serial(const KernelBuildParams& params) { return build_on_grid(params, false); }
}

double kernel_moment(const KernelG& k, int m) {
    if (m < 0 || m > 8) throw std::invalid_argument("kernel_moment: m must lie in [0, 8]");
    double acc = 0.0;
    for (std::size_t i = 0; i < k.s_points.size(); ++i)
        acc += k.weights[i] * std::pow(std::fabs(k.s_points[i]), m) * std::abs(k.values[i]);
    return acc;
}

double kernel_weighted_moment(const KernelG& k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < k.s_points.size(); ++i) {
        const double w = 1.0 + std::fabs(k.s_points[i]);
        acc += k.weights[i] * w * w * std::abs(k.values[i]);
    }
    return acc;
}

cdouble evaluate_representation(const KernelG& k, double lambda, double mu) {
    if (!(lambda > 0.0) || !(mu > 0.0))
        throw std::invalid_argument("evaluate_representation: lambda, mu must be positive");
    if (lambda > mu)
        throw std::invalid_argument("evaluate_representation: requires lambda <= mu");
    const double x = std::log(mu / lambda);
    if (x > k.build_params.x_extent)
        throw std::invalid_argument("evaluate_representation: ratio outside the kernel's valid range");
    // lambda^{is} mu^{-is} = exp(-i s x)
    cdouble acc(0.0, 0.0);
    for (std::size_t i = 0; i < k.s_points.size(); ++i)
        acc += k.weights[i] * k.values[i] * std::polar(1.0, -k.s_points[i] * x);
    return acc;
}

std::vector<double> standard_ratio_grid() {
    const double lo = std::log(1e-2), hi = std::log(1.0 - 1e-3);
    std::vector<double> r(50);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / 49.0);
    return r;
}

ResidualReport representation_residuals(const KernelG& k, const std::vector<double>& ratios) {
    ResidualReport rep;
    rep.ratios = ratios;
    rep.residuals.resize(ratios.size());
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        const cdouble v = evaluate_representation(k, ratios[i], 1.0);
        rep.residuals[i] = std::abs(v - cdouble(ratios[i], 0.0));
        rep.max_residual = std::max(rep.max_residual, rep.residuals[i]);
        rep.max_imag = std::max(rep.max_imag, std::fabs(v.imag()));
    }
    return rep;
}

void write_kernel_csv(const KernelG& k, std::ostream& os) {
    os << "# " << k.build_params.to_json().dump() << "\n";
    os << "s,re_g,im_g,weight\n";
    for (std::size_t i = 0; i < k.s_points.size(); ++i)
        os << fmt_g17(k.s_points[i]) << ',' << fmt_g17(k.values[i].real()) << ','
           << fmt_g17(k.values[i].imag()) << ',' << fmt_g17(k.weights[i]) << "\n";
}

} // namespace schatten
