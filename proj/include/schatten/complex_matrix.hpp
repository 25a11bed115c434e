// SPDX-License-Identifier: Apache-2.0
#ifndef SCHATTEN_COMPLEX_MATRIX_HPP
#define SCHATTEN_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace schatten {

using cdouble = std::complex<double>;

// Dense complex matrix, row-major. The workhorse value type: immutable by
// convention once built, cheap to copy at the sizes this project works at.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cdouble(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix ones(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cdouble& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cdouble>& data() const { return a_; }
    std::vector<cdouble>& data() { return a_; }

    bool all_finite() const;

    ComplexMatrix transpose() const;
    ComplexMatrix adjoint() const;   // conjugate transpose
    ComplexMatrix conj() const;

    // keeps only the main diagonal, zeroing the rest
    ComplexMatrix diagonal_part() const;

    double frobenius_norm() const;
    double max_abs() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cdouble c);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cdouble c, ComplexMatrix a) { return a *= c; }

private:
    std::size_t rows_, cols_;
    std::vector<cdouble> a_;
};

// Matrix product. Parallelized over output rows for large operands;
// bit-identical to matmul_serial at every size and thread count because
// each output entry is accumulated by a single thread in a fixed order.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

namespace reference {
// Serial reference kept for testing and benchmarking against the
// OpenMP path.
ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b);
}

} // namespace schatten

#endif
