// SPDX-License-Identifier: Apache-2.0
#include "schatten/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "schatten/prng.hpp"

namespace schatten {

HermitianMatrix::HermitianMatrix(const ComplexMatrix& entries) {
    if (entries.rows() != entries.cols() || entries.rows() == 0)
        throw std::invalid_argument("HermitianMatrix: square nonempty matrix required");
    if (!entries.all_finite())
        throw std::invalid_argument("HermitianMatrix: entries must be finite");
    const std::size_t n = entries.rows();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l)
            if (std::abs(entries(k, l) - std::conj(entries(l, k))) > 1e-12)
                throw std::invalid_argument("HermitianMatrix: input not Hermitian within 1e-12");
    m_ = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m_(k, k) = entries(k, k).real();
        for (std::size_t l = k + 1; l < n; ++l) {
            cdouble v = 0.5 * (entries(k, l) + std::conj(entries(l, k)));
            m_(k, l) = v;
            m_(l, k) = std::conj(v);
        }
    }
}

namespace {

double offdiag_frobenius(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

} // namespace

SpectralDecomposition hermitian_eig(const HermitianMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix m = a.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = m.frobenius_norm();
    const double stop = 1e-13 * scale;
    const int max_sweeps = 100;

    // pivots below stop/n can be skipped: even if every entry sat at that
    // level the off-diagonal Frobenius mass would already be below stop
    const double skip = stop / static_cast<double>(n);
    bool converged = (n == 1) || offdiag_frobenius(m) <= stop;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble mpq = m(p, q);
                const double apq = std::abs(mpq);
                if (apq <= skip) continue;
                // phase that makes the pivot real, then a real Jacobi angle
                const cdouble phase = mpq / apq;
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cdouble s = t * c * phase;

                // M <- G* M G with G acting on columns p, q:
                //   col_p <- c * col_p + conj(s) * col_q ... expressed row-wise below
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp - std::conj(s) * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = std::conj(s) * mpk + c * mqk;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                m(p, p) = m(p, p).real();
                m(q, q) = m(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(s) * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
        converged = offdiag_frobenius(m) <= stop;
    }
    if (!converged)
        throw std::runtime_error("hermitian_eig: Jacobi did not converge in 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return m(i, i).real() < m(j, j).real(); });

    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = m(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
    }
    return out;
}

HermitianMatrix random_hermitian(std::size_t n, std::uint64_t seed, double scale) {
    if (n == 0) throw std::invalid_argument("random_hermitian: n >= 1 required");
    if (!(scale > 0.0)) throw std::invalid_argument("random_hermitian: scale > 0 required");
    SplitMix64 gen(seed);
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = scale * gen.next_complex_gaussian();
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = g(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            cdouble v = 0.5 * (g(i, j) + std::conj(g(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return HermitianMatrix(h);
}

ComplexMatrix assemble_from_spectrum(const std::vector<double>& values, const ComplexMatrix& u) {
    const std::size_t n = u.rows();
    if (values.size() != n || u.cols() != n)
        throw std::invalid_argument("assemble_from_spectrum: shape mismatch");
    ComplexMatrix scaled = u;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= values[j];
    return matmul(scaled, u.adjoint());
}

} // namespace schatten
