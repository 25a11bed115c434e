// SPDX-License-Identifier: Apache-2.0
#ifndef SCHATTEN_FOURIER_KERNEL_HPP
#define SCHATTEN_FOURIER_KERNEL_HPP

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "schatten/complex_matrix.hpp"

namespace schatten {

// C-infinity transition: 1 for x >= 0, 0 for x <= -1, and the bump
// quotient b(x+1) / (b(x+1) + b(-x)) in between, with b(t) = exp(-1/t)
// for t > 0 and 0 otherwise. Monotone non-decreasing.
double smooth_step(double x);

// h(x) = exp(-x) * smooth_step(x): equals exp(-x) exactly on x >= 0,
// vanishes below -1, smooth everywhere. Its Fourier transform is the
// kernel g, which is what makes exp(-x) = integral g(s) exp(-isx) ds
// hold for x > 0.
double profile_h(double x);

struct KernelBuildParams {
    double x_extent = 40.0;   // h support truncated to [-1, x_extent]
    double x_step = 1e-3;     // composite Simpson step on the x grid
    double s_extent = 280.0;  // kernel sampled on [-s_extent, s_extent]
    double s_step = 0.05;     // trapezoid step on the s grid
    double cutoff_width = 1.0;  // fixed by the smooth_step construction

    nlohmann::json to_json() const;
    static KernelBuildParams from_json(const nlohmann::json& j);
};

// Discretized Fourier kernel: g sampled on a symmetric s grid with
// trapezoid quadrature weights. Conjugate-symmetric because h is real;
// |g| at the grid ends is below 1e-10 of its peak on the default grid.
struct KernelG {
    std::vector<double> s_points;
    std::vector<cdouble> values;
    std::vector<double> weights;
    KernelBuildParams build_params;
};

// g(s_i) = (1/2pi) * integral over [-1, x_extent] of h(x) e^{i s_i x} dx,
// composite Simpson in x. The s points are independent integrals, so the
// loop parallelizes; results are bit-identical to the serial reference at
// any thread count.
KernelG build_kernel(const KernelBuildParams& params = {});
KernelG build_kernel(double x_extent, double x_step, double s_extent, double s_step);

namespace reference {
KernelG build_kernel_serial(const KernelBuildParams& params = {});
}

// sum w_i |s_i|^m |g(s_i)|, the discretized moment; m <= 8 (beyond that
// the truncated tails dominate the sum).
double kernel_moment(const KernelG& k, int m);

// sum w_i |g(s_i)| (1 + |s_i|)^2 — the kernel factor of the constant
// bound assembled by the experiments module.
double kernel_weighted_moment(const KernelG& k);

// sum w_i g(s_i) lambda^{i s_i} mu^{-i s_i}; approximates lambda/mu.
// Requires 0 < lambda <= mu and log(mu/lambda) <= x_extent.
cdouble evaluate_representation(const KernelG& k, double lambda, double mu);

// 50 log-spaced ratios in [1e-2, 1 - 1e-3]: the standard verification
// grid for the representation identity.
std::vector<double> standard_ratio_grid();

struct ResidualReport {
    std::vector<double> ratios;
    std::vector<double> residuals;  // |evaluate_representation - ratio|
    double max_residual = 0.0;
    double max_imag = 0.0;
};

ResidualReport representation_residuals(const KernelG& k, const std::vector<double>& ratios);

// CSV with columns s, re_g, im_g, weight; build params embedded as a JSON
// header comment line.
void write_kernel_csv(const KernelG& k, std::ostream& os);

} // namespace schatten

#endif
