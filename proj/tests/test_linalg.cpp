// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "schatten/hermitian.hpp"
#include "schatten/prng.hpp"
#include "schatten/schatten_norm.hpp"
#include "schatten/svd.hpp"
#include "support/oracles.hpp"

using namespace schatten;

namespace {

ComplexMatrix diag2(double a, double b) {
    ComplexMatrix m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

double reconstruction_error(const HermitianMatrix& a, const SpectralDecomposition& dec) {
    return (assemble_from_spectrum(dec.eigenvalues, dec.eigenvectors) - a.matrix()).frobenius_norm();
}

double orthonormality_error(const ComplexMatrix& u) {
    return (matmul(u.adjoint(), u) - ComplexMatrix::identity(u.cols())).frobenius_norm();
}

} // namespace

TEST_CASE("hermitian_eig on diagonal input") {
    HermitianMatrix a{diag2(3.0, 1.0)};
    auto dec = hermitian_eig(a);
    CHECK(dec.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(dec.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-13));
    // eigenvectors are a permutation of the identity columns
    for (std::size_t j = 0; j < 2; ++j) {
        double col_max = 0.0;
        for (std::size_t i = 0; i < 2; ++i) col_max = std::max(col_max, std::abs(dec.eigenvectors(i, j)));
        CHECK(col_max == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("hermitian_eig on the 2x2 flip") {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    auto dec = hermitian_eig(HermitianMatrix{m});
    CHECK(dec.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(dec.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("hermitian_eig reconstructs a random 8x8 matrix") {
    HermitianMatrix a = random_hermitian(8, 42);
    auto dec = hermitian_eig(a);
    CHECK(reconstruction_error(a, dec) <= 1e-10 * a.matrix().frobenius_norm());
    CHECK(orthonormality_error(dec.eigenvectors) <= 1e-10);
    for (std::size_t i = 1; i < dec.eigenvalues.size(); ++i)
        CHECK(dec.eigenvalues[i - 1] <= dec.eigenvalues[i]);
}

TEST_CASE("hermitian_eig is deterministic") {
    HermitianMatrix a = random_hermitian(6, 5);
    auto d1 = hermitian_eig(a);
    auto d2 = hermitian_eig(a);
    CHECK(d1.eigenvalues == d2.eigenvalues);
    CHECK(d1.eigenvectors.data() == d2.eigenvectors.data());
}

TEST_CASE("HermitianMatrix validates input") {
    ComplexMatrix m(2, 2);
    m(0, 1) = cdouble(0.0, 1.0);
    m(1, 0) = cdouble(0.0, 1.0);  // conj would be -i
    CHECK_THROWS_AS(HermitianMatrix{m}, std::invalid_argument);
    ComplexMatrix bad(1, 1);
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS(HermitianMatrix{bad}, std::invalid_argument);
}

TEST_CASE("singular values of diag(3, -4)") {
    auto s = singular_values(diag2(3.0, -4.0));
    CHECK(s[0] == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(s[1] == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("singular values of a rank-1 outer product") {
    SplitMix64 gen(11);
    std::vector<cdouble> u(5), v(5);
    double nu = 0.0, nv = 0.0;
    for (auto& z : u) z = gen.next_complex_gaussian();
    for (auto& z : v) z = gen.next_complex_gaussian();
    for (const auto& z : u) nu += std::norm(z);
    for (const auto& z : v) nv += std::norm(z);
    ComplexMatrix m(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) m(i, j) = u[i] * std::conj(v[j]) / std::sqrt(nu * nv);
    auto s = singular_values(m);
    CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-10));
    // the Gram route resolves vanishing singular values only to sqrt(eps)
    for (std::size_t i = 1; i < 5; ++i) CHECK(s[i] <= 1e-7);
}

TEST_CASE("singular values match the Gram route") {
    ComplexMatrix x = oracles::random_complex(5, 7);
    auto s = singular_values(x);
    auto gram = hermitian_eig(HermitianMatrix(matmul(x.adjoint(), x)));
    for (std::size_t i = 0; i < 5; ++i) {
        const double expected = std::sqrt(std::max(gram.eigenvalues[4 - i], 0.0));
        CHECK(std::fabs(s[i] - expected) <= 1e-10);
    }
    // rectangular input: length is min(rows, cols)
    ComplexMatrix r(3, 5);
    r(0, 0) = 2.0;
    r(1, 3) = -1.0;
    CHECK(singular_values(r).size() == 3);
}

TEST_CASE("schatten_norm basics") {
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
        const double expected = std::pow(3.0, 1.0 / p);
        CHECK(schatten_norm(ComplexMatrix::identity(3), p) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(schatten_norm(ComplexMatrix::identity(3), p_infinity) == doctest::Approx(1.0));
    CHECK(schatten_norm(diag2(3.0, 4.0), 2.0) == doctest::Approx(5.0).epsilon(1e-13));
    CHECK(schatten_norm(diag2(3.0, 4.0), p_infinity) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK_THROWS_AS(schatten_norm(diag2(1.0, 1.0), 0.5), std::invalid_argument);
}

TEST_CASE("schatten_norm satisfies Hoelder against 100 random pairings") {
    // |Tr(X Y*)| <= ||X||_1.5 ||Y||_3
    ComplexMatrix x = oracles::random_complex(6, 3);
    const double nx = schatten_norm(x, 1.5);
    for (int t = 0; t < 100; ++t) {
        ComplexMatrix y = oracles::random_complex(6, derive_seed(900, static_cast<std::uint64_t>(t)));
        cdouble tr = 0.0;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) tr += x(i, j) * std::conj(y(i, j));
        CHECK(std::abs(tr) <= nx * schatten_norm(y, 3.0) * (1.0 + 1e-12));
    }
}

TEST_CASE("random_hermitian contract") {
    auto one = random_hermitian(1, 77);
    CHECK(one.matrix()(0, 0).imag() == 0.0);

    auto a = random_hermitian(4, 1);
    auto b = random_hermitian(4, 1);
    CHECK(a.matrix().data() == b.matrix().data());  // bitwise determinism

    auto c = random_hermitian(4, 2);
    CHECK(a.matrix().data() != c.matrix().data());

    // spectral radius consistent with semicircle support at scale 1
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto h = random_hermitian(64, 1000 + seed);
        auto dec = hermitian_eig(h);
        const double radius = std::max(std::fabs(dec.eigenvalues.front()), std::fabs(dec.eigenvalues.back()));
        CHECK(radius <= 2.5 * std::sqrt(64.0));
    }
}

TEST_CASE("unitary invariance of Schatten norms") {
    auto u = hermitian_eig(random_hermitian(6, 21)).eigenvectors;
    auto v = hermitian_eig(random_hermitian(6, 22)).eigenvectors;
    ComplexMatrix x = oracles::random_complex(6, 23);
    for (double p : {1.0, 1.5, 2.0, 3.0, 8.0, p_infinity}) {
        const double lhs = schatten_norm(matmul(matmul(u, x), v), p);
        const double rhs = schatten_norm(x, p);
        CHECK(std::fabs(lhs - rhs) <= 1e-9 * std::max(1.0, rhs));
    }
}

TEST_CASE("triangle inequality over random pairs") {
    for (std::uint64_t t = 0; t < 10; ++t) {
        ComplexMatrix x = oracles::random_complex(5, 100 + t);
        ComplexMatrix y = oracles::random_complex(5, 200 + t);
        for (double p : {1.0, 1.5, 2.0, 3.0, 8.0, p_infinity})
            CHECK(schatten_norm(x + y, p) <= schatten_norm(x, p) + schatten_norm(y, p) + 1e-9);
    }
}

TEST_CASE("p -> ||X||_p is non-increasing") {
    const double grid[] = {1.0, 1.1, 1.5, 2.0, 3.0, 8.0, p_infinity};
    for (std::uint64_t t = 0; t < 8; ++t) {
        ComplexMatrix x = oracles::random_complex(4, 300 + t);
        double prev = schatten_norm(x, grid[0]);
        for (std::size_t i = 1; i < std::size(grid); ++i) {
            const double cur = schatten_norm(x, grid[i]);
            CHECK(cur <= prev + 1e-12 * std::max(1.0, prev));
            prev = cur;
        }
    }
}

TEST_CASE("diagonal projection is contractive") {
    for (std::uint64_t t = 0; t < 8; ++t) {
        ComplexMatrix x = oracles::random_complex(5, 400 + t);
        for (double p : {1.0, 1.5, 2.0, 3.0, p_infinity})
            CHECK(schatten_norm(x.diagonal_part(), p) <= schatten_norm(x, p) + 1e-12);
    }
}

TEST_CASE("svd reconstructs and stays unitary, including rank deficiency") {
    auto check = [](const ComplexMatrix& x) {
        auto d = svd(x);
        ComplexMatrix us = d.u;
        for (std::size_t j = 0; j < x.cols(); ++j)
            for (std::size_t i = 0; i < x.rows(); ++i) us(i, j) *= d.sigma[j];
        CHECK((matmul(us, d.v.adjoint()) - x).frobenius_norm() <=
              1e-10 * std::max(1.0, x.frobenius_norm()));
        CHECK(orthonormality_error(d.u) <= 1e-9);
        CHECK(orthonormality_error(d.v) <= 1e-9);
        for (std::size_t i = 1; i < d.sigma.size(); ++i) CHECK(d.sigma[i - 1] >= d.sigma[i]);
    };
    check(oracles::random_complex(6, 17));
    check(ComplexMatrix::ones(4));  // rank 1
    check(ComplexMatrix(3, 3));     // zero matrix
}

TEST_CASE("parallel matmul is bit-identical to the serial reference") {
    ComplexMatrix a = oracles::random_complex(64, 1);
    ComplexMatrix b = oracles::random_complex(64, 2);
    CHECK(matmul(a, b).data() == reference::matmul_serial(a, b).data());
}
