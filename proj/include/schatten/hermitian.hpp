// SPDX-License-Identifier: Apache-2.0
#ifndef SCHATTEN_HERMITIAN_HPP
#define SCHATTEN_HERMITIAN_HPP

#include <cstdint>
#include <vector>

#include "schatten/complex_matrix.hpp"

namespace schatten {

// n x n Hermitian matrix. Construction checks A[k][l] == conj(A[l][k])
// within 1e-12 absolute and then symmetrizes, so the stored form is
// exactly Hermitian with a real diagonal.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const ComplexMatrix& entries);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
    ComplexMatrix m_;
};

// Eigenvalues ascending; columns of `eigenvectors` are the matching
// orthonormal eigenvectors.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Cyclic Jacobi with complex rotations. Unconditionally stable on
// Hermitian input; throws if the off-diagonal mass has not dropped below
// 1e-13 * ||A||_F after 100 sweeps.
SpectralDecomposition hermitian_eig(const HermitianMatrix& a);

// (G + G*) / 2 for G with independent complex Gaussian entries of
// standard deviation `scale` (E|G_kl|^2 = scale^2), drawn from the pinned
// SplitMix64 generator. Identical (n, seed, scale) give bitwise-identical
// output.
HermitianMatrix random_hermitian(std::size_t n, std::uint64_t seed, double scale = 1.0);

// U diag(v) U* for real v; helper shared by the functional calculus and
// the reconstruction checks.
ComplexMatrix assemble_from_spectrum(const std::vector<double>& values, const ComplexMatrix& u);

} // namespace schatten

#endif
