// SPDX-License-Identifier: Apache-2.0
#ifndef SCHATTEN_SCHUR_SYMBOL_HPP
#define SCHATTEN_SCHUR_SYMBOL_HPP

#include <vector>

#include "schatten/complex_matrix.hpp"

namespace schatten {

// Symbol matrix phi of a Schur multiplier M_phi : X -> phi .* X.
class SchurSymbol {
public:
    explicit SchurSymbol(ComplexMatrix coefficients);

    std::size_t dim() const { return c_.rows(); }
    const ComplexMatrix& coefficients() const { return c_; }
    const cdouble& operator()(std::size_t k, std::size_t l) const { return c_(k, l); }

    SchurSymbol transpose() const { return SchurSymbol(c_.transpose()); }

private:
    ComplexMatrix c_;
};

// Ascending sequence mu_1 < ... < mu_n together with a frequency s; the
// data of the oscillatory symbol |mu_k - mu_l|^{is}.
struct OscillatorySpec {
    OscillatorySpec(std::vector<double> mus_, double s_);
    std::vector<double> mus;
    double s;
};

// Entrywise product (phi_{k,l} * x_{k,l}).
ComplexMatrix apply_multiplier(const SchurSymbol& phi, const ComplexMatrix& x);

// phi_{k,l} = |mu_k - mu_l|^{is} = exp(i s log|mu_k - mu_l|) off the
// diagonal; phi_{k,k} = 0 (the 0^{is} = 0 convention).
SchurSymbol oscillatory_symbol(const OscillatorySpec& spec);

// Principal submatrix of the coefficients at the given ascending indices.
SchurSymbol restrict_symbol(const SchurSymbol& phi, const std::vector<std::size_t>& indices);

// ||M_phi||_{S^2 -> S^2} = max |phi_{k,l}|; S^2 is entrywise-Euclidean.
double exact_norm_p2(const SchurSymbol& phi);

// phi .* 1_{k>l} and phi .* 1_{k<l}: strict lower / upper triangles.
std::pair<SchurSymbol, SchurSymbol> triangular_parts(const SchurSymbol& phi);

} // namespace schatten

#endif
