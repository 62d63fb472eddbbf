// Timing comparison of the OpenMP kernels against their serial reference
// implementations: coefficient quadrature over k and LU log-determinants.

#include "fhchain/fourier.hpp"
#include "fhchain/toeplitz.hpp"
#include "fhchain/xy_chain.hpp"

#include <chrono>
#include <cstdio>
#ifdef _OPENMP
#include <omp.h>
#endif

using namespace fhchain;

namespace {

template <typename F>
double time_ms(F&& f, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial/ms", "parallel/ms", "speedup");

    auto p = make_params(0.5, 0.3);
    Symbol f1 = correlator_symbols(p).first;

    for (int n : {256, 512}) {
        double ts = time_ms([&] { symbol_coefficients_serial(f1, n, 16384); });
        double tp = time_ms([&] { symbol_coefficients(f1, n, 16384); });
        std::printf("coefficients n=%-4d %8s %10.2f %11.2f %7.2fx\n", n, "", ts, tp,
                    ts / tp);
    }

    auto tc = symbol_coefficients(f1, 1024, 16384);
    for (int n : {256, 512, 1024}) {
        ToeplitzInstance inst{tc, n, 0};
        double ts = time_ms([&] { log_det_serial(inst); });
        double tp = time_ms([&] { log_det(inst); });
        std::printf("log_det      n=%-4d %8s %10.2f %11.2f %7.2fx\n", n, "", ts, tp,
                    ts / tp);
    }
    return 0;
}
