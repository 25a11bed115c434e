// SPDX-License-Identifier: Apache-2.0
#ifndef SCHATTEN_FUNCALC_HPP
#define SCHATTEN_FUNCALC_HPP

#include <stdexcept>
#include <vector>

#include "schatten/hermitian.hpp"
#include "schatten/scalar_function.hpp"
#include "schatten/schur_symbol.hpp"

namespace schatten {

// Raised by divided_difference_symbol when the input sequence has a gap
// below the degeneracy tolerance; callers perturb or deduplicate.
class degenerate_spectrum_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// f(A) = U diag(f(lambda_1), ..., f(lambda_n)) U*.
HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& a);

// phi_{k,l} = (f(lambda_k) - f(lambda_l)) / (lambda_k - lambda_l) for
// k != l, zero diagonal. Requires lambdas strictly ascending with minimum
// gap above 1e-10 * max(1, |lambda_1|, |lambda_n|).
SchurSymbol divided_difference_symbol(const ScalarFunction& f, const std::vector<double>& lambdas);

} // namespace schatten

#endif
