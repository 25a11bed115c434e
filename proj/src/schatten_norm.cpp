// SPDX-License-Identifier: Apache-2.0
#include "schatten/schatten_norm.hpp"

#include <cmath>
#include <stdexcept>

#include "schatten/svd.hpp"

namespace schatten {

double schatten_norm_from_singular_values(const std::vector<double>& sigma, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("schatten_norm: p >= 1 required");
    if (sigma.empty()) return 0.0;
    double smax = 0.0;
    for (double s : sigma) smax = std::max(smax, s);
    if (std::isinf(p)) return smax;
    if (smax == 0.0) return 0.0;
    // scale by sigma_max so the powers stay in range for large p
    double acc = 0.0;
    for (double s : sigma) acc += std::pow(s / smax, p);
    return smax * std::pow(acc, 1.0 / p);
}

double schatten_norm(const ComplexMatrix& x, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("schatten_norm: p >= 1 required");
    if (p == 2.0) {
        if (!x.all_finite()) throw std::invalid_argument("schatten_norm: entries must be finite");
        return x.frobenius_norm();
    }
    return schatten_norm_from_singular_values(singular_values(x), p);
}

} // namespace schatten
