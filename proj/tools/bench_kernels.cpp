// Times the serial reference kernels against the OpenMP variants across
// state sizes.  Usage: lugeo-bench [max_qubits] (default 20).

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lugeo/kernels.hpp"
#include "lugeo/rng.hpp"
#include "lugeo/state.hpp"

using namespace lugeo;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warm up
    const auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    int max_qubits = 20;
    if (argc > 1) max_qubits = std::atoi(argv[1]);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%8s %14s %14s %8s %14s %14s %8s\n", "qubits", "apply-ser(ms)",
                "apply-par(ms)", "speedup", "rho-ser(ms)", "rho-par(ms)",
                "speedup");

    Rng rng(12345);
    Mat op(2, 2);
    op << cxd(0.6, 0.1), cxd(0.2, -0.3), cxd(0.2, 0.3), cxd(-0.6, 0.1);

    for (int q = 10; q <= max_qubits; q += 2) {
        const std::vector<int> dims(static_cast<size_t>(q), 2);
        const PureState v = random_state(dims, 17);
        Vec out(v.dim());
        const int mid = q / 2;
        const int reps = q <= 16 ? 20 : 5;

        const double apply_ser = time_ms(
            [&] {
                kernels::serial::apply_factor_op(dims, mid, op,
                                                 v.amplitudes.data(), out.data());
            },
            reps);
        const double apply_par = time_ms(
            [&] {
                kernels::par::apply_factor_op(dims, mid, op, v.amplitudes.data(),
                                              out.data());
            },
            reps);
        const double rho_ser = time_ms(
            [&] {
                volatile auto rho = kernels::serial::reduced_density(
                    dims, mid, v.amplitudes.data());
                (void)rho;
            },
            reps);
        const double rho_par = time_ms(
            [&] {
                volatile auto rho =
                    kernels::par::reduced_density(dims, mid, v.amplitudes.data());
                (void)rho;
            },
            reps);

        std::printf("%8d %14.3f %14.3f %7.2fx %14.3f %14.3f %7.2fx\n", q,
                    apply_ser, apply_par, apply_ser / apply_par, rho_ser,
                    rho_par, rho_ser / rho_par);
    }
    return 0;
}
