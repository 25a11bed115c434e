// SPDX-License-Identifier: Apache-2.0
#ifndef SCHATTEN_SCHATTEN_NORM_HPP
#define SCHATTEN_SCHATTEN_NORM_HPP

#include <limits>

#include "schatten/complex_matrix.hpp"

namespace schatten {

constexpr double p_infinity = std::numeric_limits<double>::infinity();

// ||X||_p = (sum sigma_i^p)^(1/p); the operator norm at p = infinity.
// p < 1 is rejected (not a norm).
double schatten_norm(const ComplexMatrix& x, double p);

// Same norm evaluated from a precomputed singular value list.
double schatten_norm_from_singular_values(const std::vector<double>& sigma, double p);

} // namespace schatten

#endif
