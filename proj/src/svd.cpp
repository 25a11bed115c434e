// SPDX-License-Identifier: Apache-2.0
#include "schatten/svd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "schatten/hermitian.hpp"

namespace schatten {

namespace {

// eigendecomposition of a Gram matrix, normalized by its largest entry
// first so the Hermitian symmetry check sees rounding noise at a
// scale-free level
SpectralDecomposition eig_gram(ComplexMatrix gram) {
    const double scale = gram.max_abs();
    if (scale > 0.0) gram *= cdouble(1.0 / scale, 0.0);
    SpectralDecomposition dec = hermitian_eig(HermitianMatrix(gram));
    for (double& ev : dec.eigenvalues) ev *= scale;
    return dec;
}

} // namespace

std::vector<double> singular_values(const ComplexMatrix& x) {
    if (!x.all_finite()) throw std::invalid_argument("singular_values: entries must be finite");
    const bool tall = x.rows() >= x.cols();
    auto dec = eig_gram(tall ? matmul(x.adjoint(), x) : matmul(x, x.adjoint()));
    std::vector<double> s(dec.eigenvalues.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        // eigenvalues ascend; clamp round-off negatives before the root
        double ev = dec.eigenvalues[s.size() - 1 - i];
        s[i] = std::sqrt(std::max(ev, 0.0));
    }
    return s;
}

namespace {

// builds the SVD from the Gram eigendecomposition: sigma and V from the
// (ascending) eigenpairs, U = X V Sigma^-1 re-orthonormalized with
// modified Gram-Schmidt, rank-deficient columns completed from the
// standard basis (deterministically: first basis vector that keeps a
// residual above 1/2)
SingularValueDecomposition from_gram(const ComplexMatrix& x, const SpectralDecomposition& dec) {
    const std::size_t n = x.rows();
    SingularValueDecomposition out;
    out.sigma.resize(n);
    out.v = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.sigma[j] = std::sqrt(std::max(dec.eigenvalues[n - 1 - j], 0.0));
        for (std::size_t i = 0; i < n; ++i) out.v(i, j) = dec.eigenvectors(i, n - 1 - j);
    }

    ComplexMatrix w = matmul(x, out.v);
    out.u = ComplexMatrix(n, n);
    const double sigma_max = out.sigma.empty() ? 0.0 : out.sigma[0];
    const double cutoff = sigma_max * 1e-13;

    auto project_out = [&](std::vector<cdouble>& col, std::size_t upto) {
        for (std::size_t j = 0; j < upto; ++j) {
            cdouble dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(out.u(i, j)) * col[i];
            for (std::size_t i = 0; i < n; ++i) col[i] -= dot * out.u(i, j);
        }
    };

    for (std::size_t j = 0; j < n; ++j) {
        std::vector<cdouble> col(n);
        double nrm = 0.0;
        if (out.sigma[j] > cutoff) {
            for (std::size_t i = 0; i < n; ++i) col[i] = w(i, j) / out.sigma[j];
            project_out(col, j);
            for (const auto& z : col) nrm += std::norm(z);
            nrm = std::sqrt(nrm);
        }
        if (nrm <= 0.5) {
            // negligible singular value or collapsed direction: complete
            for (std::size_t e = 0; e < n; ++e) {
                std::fill(col.begin(), col.end(), cdouble(0.0, 0.0));
                col[e] = 1.0;
                project_out(col, j);
                nrm = 0.0;
                for (const auto& z : col) nrm += std::norm(z);
                nrm = std::sqrt(nrm);
                if (nrm > 0.5) break;
            }
        }
        for (std::size_t i = 0; i < n; ++i) out.u(i, j) = col[i] / nrm;
    }
    return out;
}

void validate_square(const ComplexMatrix& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("svd: square matrix required");
    if (!x.all_finite()) throw std::invalid_argument("svd: entries must be finite");
}

} // namespace

SingularValueDecomposition svd(const ComplexMatrix& x) {
    validate_square(x);
    return from_gram(x, eig_gram(matmul(x.adjoint(), x)));
}

SingularValueDecomposition svd_with_hint(const ComplexMatrix& x, const ComplexMatrix& v_hint) {
    validate_square(x);
    if (v_hint.rows() != x.rows() || v_hint.cols() != x.cols())
        throw std::invalid_argument("svd_with_hint: hint dimension mismatch");
    const ComplexMatrix gram = matmul(x.adjoint(), x);
    // rotate into the hint basis, where the Jacobi sweeps start near
    // diagonal, then rotate the eigenvectors back
    SpectralDecomposition dec = eig_gram(matmul(v_hint.adjoint(), matmul(gram, v_hint)));
    dec.eigenvectors = matmul(v_hint, dec.eigenvectors);
    return from_gram(x, dec);
}

} // namespace schatten
