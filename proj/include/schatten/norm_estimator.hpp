// SPDX-License-Identifier: Apache-2.0
#ifndef SCHATTEN_NORM_ESTIMATOR_HPP
#define SCHATTEN_NORM_ESTIMATOR_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "schatten/schur_symbol.hpp"

namespace schatten {

struct EstimatorConfig {
    int starts = 16;
    int max_iters = 500;
    double tol = 1e-8;
    std::uint64_t seed = 2024;
    // Deterministic additional starting matrices (e.g. a witness carried
    // over from another experiment). Always used on top of the default
    // all-ones and argmax-entry starts.
    std::vector<ComplexMatrix> extra_starts;

    static EstimatorConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// A certified lower bound on ||M_phi||_{S^p -> S^p}: `witness` has unit
// Schatten-p norm and ||M_phi(witness)||_p reproduces `value`. The
// iteration is nonconvex, so `value` is reported as a lower bound, never
// as the norm itself.
struct NormEstimate {
    double value = 0.0;
    ComplexMatrix witness;
    double p = 0.0;
    int iterations = 0;
    int starts = 0;
    bool converged = false;
};

// Multi-start alternating duality iteration for the S^p -> S^p multiplier
// norm, 1 < p < infinity. One step, with 1/p + 1/q = 1 and the bilinear
// pairing <A,B> = Tr(AB):
//
//   Y = M_phi(X)                     ratio = ||Y||_p
//   B = norming element of Y in S^q  (SVD U S V* -> V S^{p-1} U*, unit q-norm)
//   Z = M_{phi^T}(B)                 transpose symbol = adjoint under Tr(AB)
//   X = norming element of Z in S^p  (V S^{q-1} U*, unit p-norm)
//
// Each half-step is an exact coordinate maximization of |Tr(M_phi(X) B)|,
// so the ratio sequence is non-decreasing. Starts run in parallel; the
// merge takes the best ratio with ties broken by lowest start index, so
// results are independent of thread count.
NormEstimate estimate_norm(const SchurSymbol& phi, double p, const EstimatorConfig& cfg = {});

} // namespace schatten

#endif
