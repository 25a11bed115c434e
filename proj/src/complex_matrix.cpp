// SPDX-License-Identifier: Apache-2.0
#include "schatten/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace schatten {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::ones(std::size_t n) {
    ComplexMatrix m(n, n);
    for (auto& z : m.data()) z = 1.0;
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.data()[k] = std::conj(a_[k]);
    return m;
}

ComplexMatrix ComplexMatrix::diagonal_part() const {
    ComplexMatrix m(rows_, cols_);
    std::size_t n = rows_ < cols_ ? rows_ : cols_;
    for (std::size_t i = 0; i < n; ++i) m(i, i) = (*this)(i, i);
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble c) {
    for (auto& z : a_) z *= c;
    return *this;
}

namespace {

inline void matmul_row(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c, std::size_t i) {
    const std::size_t n = a.cols(), m = b.cols();
    for (std::size_t k = 0; k < n; ++k) {
        const cdouble aik = a(i, k);
        if (aik == cdouble(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < m; ++j) c(i, j) += aik * b(k, j);
    }
}

} // namespace

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in matmul");
    ComplexMatrix c(a.rows(), b.cols());
    const std::ptrdiff_t nrows = static_cast<std::ptrdiff_t>(a.rows());
#ifdef _OPENMP
    // Row i is owned by exactly one thread, so the result does not depend
    // on the schedule or thread count.
#pragma omp parallel for schedule(static) if (a.rows() * a.cols() * b.cols() > 32768 && !omp_in_parallel())
#endif
    for (std::ptrdiff_t i = 0; i < nrows; ++i) matmul_row(a, b, c, static_cast<std::size_t>(i));
    return c;
}

namespace reference {

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in matmul");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a, b, c, i);
    return c;
}

} // namespace reference

} // namespace schatten
