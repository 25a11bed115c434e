// SPDX-License-Identifier: Apache-2.0
#include "schatten/norm_estimator.hpp"

#include <cmath>
#include <stdexcept>

#include "schatten/prng.hpp"
#include "schatten/schatten_norm.hpp"
#include "schatten/svd.hpp"

namespace schatten {

EstimatorConfig EstimatorConfig::from_json(const nlohmann::json& j) {
    EstimatorConfig c;
    if (j.contains("starts")) c.starts = j.at("starts").get<int>();
    if (j.contains("max_iters")) c.max_iters = j.at("max_iters").get<int>();
    if (j.contains("tol")) c.tol = j.at("tol").get<double>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

nlohmann::json EstimatorConfig::to_json() const {
    return {{"starts", starts}, {"max_iters", max_iters}, {"tol", tol}, {"seed", seed}};
}

namespace {

// Norming element under Tr(AB) from a precomputed SVD: for Y = U S V*,
// returns V S^{a-1} U* scaled to unit S^b norm (1/a + 1/b = 1), so that
// Tr(Y * result) = ||Y||_a. Singular values are floored at 1e-300 before
// powering.
ComplexMatrix norming_from_svd(const SingularValueDecomposition& d, double a, double b) {
    const std::size_t n = d.sigma.size();
    const double smax = std::max(d.sigma[0], 1e-300);
    std::vector<double> powered(n);
    for (std::size_t i = 0; i < n; ++i)
        powered[i] = std::pow(std::max(d.sigma[i], 1e-300) / smax, a - 1.0);
    const double nrm = schatten_norm_from_singular_values(powered, b);
    // V diag(powered/nrm) U*
    ComplexMatrix scaled = d.v;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= powered[j] / nrm;
    return matmul(scaled, d.u.adjoint());
}

struct StartResult {
    double value = 0.0;
    ComplexMatrix witness;
    int iterations = 0;
    bool converged = false;
};

StartResult run_start(const SchurSymbol& phi, const SchurSymbol& phi_t, double p, double q,
                      ComplexMatrix x, int max_iters, double tol) {
    StartResult res;
    const double nx = schatten_norm(x, p);
    if (!(nx > 1e-250)) return res;
    x *= cdouble(1.0 / nx, 0.0);

    // at p = 2 the norming element is the adjoint over the Frobenius
    // norm, so the whole iteration runs without any SVD; elsewhere the
    // previous iteration's V basis warm-starts the Jacobi sweeps
    const bool euclidean = p == 2.0;
    ComplexMatrix hint_y, hint_z;
    auto norming = [&](const ComplexMatrix& y, double a, double b, ComplexMatrix& hint,
                       double& norm_out) {
        if (euclidean) {
            norm_out = y.frobenius_norm();
            if (!(norm_out > 1e-250)) return ComplexMatrix();
            ComplexMatrix d = y.adjoint();
            d *= cdouble(1.0 / norm_out, 0.0);
            return d;
        }
        auto dy = hint.rows() == y.rows() ? svd_with_hint(y, hint) : svd(y);
        hint = dy.v;
        norm_out = schatten_norm_from_singular_values(dy.sigma, a);
        if (!(norm_out > 1e-250)) return ComplexMatrix();
        return norming_from_svd(dy, a, b);
    };

    double prev = -1.0;
    for (int it = 0; it < max_iters; ++it) {
        ComplexMatrix y = apply_multiplier(phi, x);
        double r = 0.0;
        ComplexMatrix dual = norming(y, p, q, hint_y, r);
        if (dual.rows() == 0) {
            res.converged = true;  // multiplier annihilates this direction
            break;
        }
        if (r > res.value) {
            res.value = r;
            res.witness = x;
        }
        res.iterations = it + 1;
        if (prev >= 0.0 && r - prev < tol * std::max(1.0, r)) {
            res.converged = true;
            break;
        }
        prev = r;
        ComplexMatrix z = apply_multiplier(phi_t, dual);
        double nz = 0.0;
        ComplexMatrix next = norming(z, q, p, hint_z, nz);
        if (next.rows() == 0) {
            res.converged = true;
            break;
        }
        x = std::move(next);
    }
    return res;
}

} // namespace

NormEstimate estimate_norm(const SchurSymbol& phi, double p, const EstimatorConfig& cfg) {
    if (!(p > 1.0) || std::isinf(p))
        throw std::invalid_argument("estimate_norm: p must lie in (1, infinity)");
    if (cfg.starts < 1 || cfg.max_iters < 1) throw std::invalid_argument("estimate_norm: bad config");
    const double q = p / (p - 1.0);
    const std::size_t n = phi.dim();
    const SchurSymbol phi_t = phi.transpose();

    // deterministic starts first: all-ones, the argmax-entry elementary
    // matrix, then any caller-provided extras; Gaussian starts fill the
    // remainder
    std::vector<ComplexMatrix> starts;
    starts.push_back(ComplexMatrix::ones(n));
    {
        std::size_t bk = 0, bl = 0;
        double best = -1.0;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
                if (std::abs(phi(k, l)) > best) {
                    best = std::abs(phi(k, l));
                    bk = k;
                    bl = l;
                }
        ComplexMatrix e(n, n);
        e(bk, bl) = 1.0;
        starts.push_back(std::move(e));
    }
    for (const auto& m : cfg.extra_starts) {
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("estimate_norm: extra start has wrong dimension");
        starts.push_back(m);
    }
    for (std::uint64_t i = 0; starts.size() < static_cast<std::size_t>(cfg.starts); ++i) {
        SplitMix64 gen(derive_seed(cfg.seed, i));
        ComplexMatrix g(n, n);
        for (auto& z : g.data()) z = gen.next_complex_gaussian();
        starts.push_back(std::move(g));
    }

    std::vector<StartResult> results(starts.size());
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(starts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i)
        results[i] = run_start(phi, phi_t, p, q, starts[i], cfg.max_iters, cfg.tol);

    NormEstimate out;
    out.p = p;
    out.starts = static_cast<int>(starts.size());
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i)
        if (results[i].value > results[best].value) best = i;
    out.value = results[best].value;
    out.witness = results[best].witness;
    out.iterations = results[best].iterations;
    out.converged = results[best].converged;
    if (out.witness.rows() == 0) {
        // symbol annihilated every start: the zero estimate with a valid
        // unit-norm witness
        ComplexMatrix e(n, n);
        e(0, 0) = 1.0;
        out.witness = e;
        out.value = 0.0;
        out.converged = true;
    }
    return out;
}

} // namespace schatten
