// Kernel benchmark: serial reference vs the OpenMP-parallel scan kernels.

#include <chrono>
#include <cstdio>

#include "chromap/corpus.hpp"
#include "chromap/properness.hpp"
#include "chromap/scanner.hpp"

using namespace chromap;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
    apply_thread_cap();
    PlanarMap grid = generate_grid(6, rat(7, 10), rat(7), rat(7));
    PlanarMap hex = generate_hex7(rat(9, 10), rat(8), rat(8));
    ForbiddenInterval eps0{rat(0)};

    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial ms", "openmp ms", "speedup");
    auto row = [](const char* name, double s, double p) {
        std::printf("%-28s %10.1f %10.1f %7.2fx\n", name, s, p, s / p);
    };

    double s1 = time_ms([&] { properness_check(grid, eps0, ExecutionPolicy::Serial); }, 3);
    double p1 = time_ms([&] { properness_check(grid, eps0, ExecutionPolicy::Parallel); }, 3);
    row("properness_check grid100", s1, p1);

    double s2 = time_ms([&] { properness_check(hex, eps0, ExecutionPolicy::Serial); }, 3);
    double p2 = time_ms([&] { properness_check(hex, eps0, ExecutionPolicy::Parallel); }, 3);
    row("properness_check hex", s2, p2);

    double s3 = time_ms([&] { sampling_oracle(grid, eps0, 100000, 1, ExecutionPolicy::Serial); }, 2);
    double p3 = time_ms([&] { sampling_oracle(grid, eps0, 100000, 1, ExecutionPolicy::Parallel); }, 2);
    row("sampling_oracle 1e5", s3, p3);

    double s4 = time_ms([&] { bichromatic_unit_scan(hex, ExecutionPolicy::Serial); }, 2);
    double p4 = time_ms([&] { bichromatic_unit_scan(hex, ExecutionPolicy::Parallel); }, 2);
    row("bichromatic_unit_scan hex", s4, p4);
    return 0;
}
