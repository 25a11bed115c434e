// SPDX-License-Identifier: Apache-2.0
#include "schatten/schur_symbol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schatten {

SchurSymbol::SchurSymbol(ComplexMatrix coefficients) : c_(std::move(coefficients)) {
    if (c_.rows() != c_.cols() || c_.rows() == 0)
        throw std::invalid_argument("SchurSymbol: square nonempty matrix required");
    if (!c_.all_finite()) throw std::invalid_argument("SchurSymbol: coefficients must be finite");
}

OscillatorySpec::OscillatorySpec(std::vector<double> mus_, double s_) : mus(std::move(mus_)), s(s_) {
    if (mus.empty()) throw std::invalid_argument("OscillatorySpec: empty sequence");
    for (std::size_t k = 1; k < mus.size(); ++k)
        if (!(mus[k - 1] < mus[k]))
            throw std::invalid_argument("OscillatorySpec: mus must be strictly ascending");
}

ComplexMatrix apply_multiplier(const SchurSymbol& phi, const ComplexMatrix& x) {
    if (phi.dim() != x.rows() || phi.dim() != x.cols())
        throw std::invalid_argument("apply_multiplier: dimension mismatch");
    ComplexMatrix y = x;
    for (std::size_t k = 0; k < x.rows(); ++k)
        for (std::size_t l = 0; l < x.cols(); ++l) y(k, l) *= phi(k, l);
    return y;
}

SchurSymbol oscillatory_symbol(const OscillatorySpec& spec) {
    const std::size_t n = spec.mus.size();
    ComplexMatrix c(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            if (k == l) continue;
            const double gap = std::fabs(spec.mus[k] - spec.mus[l]);
            c(k, l) = std::polar(1.0, spec.s * std::log(gap));
        }
    return SchurSymbol(std::move(c));
}

SchurSymbol restrict_symbol(const SchurSymbol& phi, const std::vector<std::size_t>& indices) {
    if (indices.empty()) throw std::invalid_argument("restrict_symbol: empty index set");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= phi.dim()) throw std::out_of_range("restrict_symbol: index out of range");
        if (i > 0 && !(indices[i - 1] < indices[i]))
            throw std::invalid_argument("restrict_symbol: indices must be strictly ascending");
    }
    ComplexMatrix c(indices.size(), indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = 0; b < indices.size(); ++b) c(a, b) = phi(indices[a], indices[b]);
    return SchurSymbol(std::move(c));
}

double exact_norm_p2(const SchurSymbol& phi) {
    return phi.coefficients().max_abs();
}

std::pair<SchurSymbol, SchurSymbol> triangular_parts(const SchurSymbol& phi) {
    const std::size_t n = phi.dim();
    ComplexMatrix lower(n, n), upper(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            if (k > l) lower(k, l) = phi(k, l);
            if (k < l) upper(k, l) = phi(k, l);
        }
    return {SchurSymbol(std::move(lower)), SchurSymbol(std::move(upper))};
}

} // namespace schatten
