// SPDX-License-Identifier: Apache-2.0
#ifndef SCHATTEN_SVD_HPP
#define SCHATTEN_SVD_HPP

#include <vector>

#include "schatten/complex_matrix.hpp"

namespace schatten {

// X = U diag(sigma) V* with sigma descending and U, V unitary.
struct SingularValueDecomposition {
    ComplexMatrix u;
    std::vector<double> sigma;
    ComplexMatrix v;
};

// Singular values of any finite matrix, descending. Computed as the
// clamped square roots of the eigenvalues of X*X (or XX*, whichever is
// smaller).
std::vector<double> singular_values(const ComplexMatrix& x);

// Full SVD of a square matrix. V and sigma come from the eigensolver on
// X*X; U columns are X v_i / sigma_i, re-orthonormalized and completed
// deterministically where sigma is negligible.
SingularValueDecomposition svd(const ComplexMatrix& x);

// SVD accelerated by a unitary hint for V (typically the V factor of a
// nearby matrix): the Gram matrix is rotated into the hint basis first,
// where the Jacobi sweeps start nearly diagonal. Same contract as svd().
SingularValueDecomposition svd_with_hint(const ComplexMatrix& x, const ComplexMatrix& v_hint);

} // namespace schatten

#endif
