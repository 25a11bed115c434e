// SPDX-License-Identifier: Apache-2.0
#include "schatten/funcalc.hpp"

#include <cmath>

namespace schatten {

HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& a) {
    auto dec = hermitian_eig(a);
    std::vector<double> mapped(dec.eigenvalues.size());
    for (std::size_t i = 0; i < mapped.size(); ++i) mapped[i] = f(dec.eigenvalues[i]);
    return HermitianMatrix(assemble_from_spectrum(mapped, dec.eigenvectors));
}

SchurSymbol divided_difference_symbol(const ScalarFunction& f, const std::vector<double>& lambdas) {
    const std::size_t n = lambdas.size();
    if (n == 0) throw std::invalid_argument("divided_difference_symbol: empty sequence");
    const double tol = 1e-10 * std::max({1.0, std::fabs(lambdas.front()), std::fabs(lambdas.back())});
    for (std::size_t k = 1; k < n; ++k)
        if (!(lambdas[k] - lambdas[k - 1] > tol))
            throw degenerate_spectrum_error("divided_difference_symbol: eigenvalue gap below tolerance");

    std::vector<double> fv(n);
    for (std::size_t k = 0; k < n; ++k) fv[k] = f(lambdas[k]);

    // fill k < l and mirror so real symbols come out exactly symmetric
    ComplexMatrix c(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
            const double q = (fv[k] - fv[l]) / (lambdas[k] - lambdas[l]);
            c(k, l) = q;
            c(l, k) = q;
        }
    return SchurSymbol(std::move(c));
}

} // namespace schatten
