// SPDX-License-Identifier: Apache-2.0
//
// Timing comparison between the OpenMP kernels and their serial
// references: matrix product, kernel construction and the multi-start
// norm estimator. Not a test; results vary with the machine.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "schatten/fourier_kernel.hpp"
#include "schatten/hermitian.hpp"
#include "schatten/norm_estimator.hpp"
#include "schatten/prng.hpp"

using namespace schatten;

namespace {

double seconds(void (*fn)(), int reps = 1) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

ComplexMatrix random_square(std::size_t n, std::uint64_t seed) {
    SplitMix64 gen(seed);
    ComplexMatrix m(n, n);
    for (auto& z : m.data()) z = gen.next_complex_gaussian();
    return m;
}

ComplexMatrix g_a, g_b;
KernelBuildParams g_params;
SchurSymbol* g_phi = nullptr;

void run_matmul_parallel() { (void)matmul(g_a, g_b); }
void run_matmul_serial() { (void)reference::matmul_serial(g_a, g_b); }
void run_kernel_parallel() { (void)build_kernel(g_params); }
void run_kernel_serial() { (void)reference::build_kernel_serial(g_params); }
void run_estimator() {
    EstimatorConfig cfg;
    cfg.starts = 8;
    (void)estimate_norm(*g_phi, 4.0, cfg);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel paths run serially\n");
#endif

    g_a = random_square(192, 1);
    g_b = random_square(192, 2);
    std::printf("%-28s %8.4f s\n", "matmul 192x192 serial", seconds(run_matmul_serial, 3));
    std::printf("%-28s %8.4f s\n", "matmul 192x192 parallel", seconds(run_matmul_parallel, 3));

    g_params = KernelBuildParams{};
    g_params.s_extent = 60.0;  // shortened grid keeps the benchmark quick
    std::printf("%-28s %8.4f s\n", "build_kernel serial", seconds(run_kernel_serial));
    std::printf("%-28s %8.4f s\n", "build_kernel parallel", seconds(run_kernel_parallel));

    auto dec = hermitian_eig(random_hermitian(24, 7));
    SchurSymbol phi = oscillatory_symbol({[&] {
                                              std::vector<double> mus(24);
                                              for (std::size_t i = 0; i < mus.size(); ++i)
                                                  mus[i] = static_cast<double>(i + 1);
                                              return mus;
                                          }(),
                                          3.0});
    g_phi = &phi;
    std::printf("%-28s %8.4f s\n", "estimate_norm 24x24 p=4", seconds(run_estimator));
    return 0;
}
