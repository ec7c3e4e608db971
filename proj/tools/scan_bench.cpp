// scan_bench.cpp - timing of the OpenMP scan kernels against their serial
// reference implementations
#include "parpart/bags.hpp"
#include "parpart/clique_decomp.hpp"
#include "parpart/subsets.hpp"
#include "parpart/synth.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace parpart;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
    const auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-24s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP scan kernels"};
    int m = 1200;
    int l = 3;
    int reps = 3;
    int n = 14, k = 3;
    app.add_option("--m", m, "synthetic system size");
    app.add_option("--l", l, "block length");
    app.add_option("--reps", reps, "repetitions per measurement");
    app.add_option("--n", n, "subset build ground set");
    app.add_option("--k", k, "subset build block size");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run the same serial code path\n");
#endif

    const TripleGraphSystem sys = make_synthetic_system(m, m - m / 8, 6, 6, 12345);
    const CliqueFamily blocks = initial_decomposition(m, l);
    const CyclicOrder order = CyclicOrder::identity(m);

    const double fam_ser =
        time_ms([&] { family_bag_scan_serial(blocks.blocks, sys.g2(), sys.g3()); }, reps);
    const double fam_par = time_ms([&] { family_bag_scan(blocks.blocks, sys.g2(), sys.g3()); }, reps);
    report("family_bag_scan", fam_ser, fam_par);

    const double win_ser =
        time_ms([&] { window_bag_scan_serial(order, l, sys.g2(), sys.g3()); }, reps);
    const double win_par = time_ms([&] { window_bag_scan(order, l, sys.g2(), sys.g3()); }, reps);
    report("window_bag_scan", win_ser, win_par);

    const KSubsetUniverse u(n, k);
    const Threshold third{Rational(1, 3)};
    const double build_ser = time_ms([&] { build_triple_system_serial(u, third, third); }, reps);
    const double build_par = time_ms([&] { build_triple_system(u, third, third); }, reps);
    std::printf("build_triple_system on C(%d,%d) = %lld vertices\n", n, k, u.subset_count());
    report("build_triple_system", build_ser, build_par);
    return 0;
}
