// Benchmark: serial reference scan vs. the OpenMP-parallel kernel on a
// representative real-pole grid, with an equality check on the outputs.
#include <chrono>
#include <cstdio>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lcm/scan.hpp"

namespace {

double time_ms(std::vector<lcm::ScanRow> (*run)(const lcm::ScanSpec&),
               const lcm::ScanSpec& spec, std::vector<lcm::ScanRow>& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = run(spec);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
    lcm::ScanSpec spec;
    spec.base.gain = 1.0;
    spec.base.zeros = {{-10, 0}, {-15, 0}, {-30, 0}};
    spec.base.poles = {{-5, 0}, {-20, 0}, {-20, 0}};
    spec.index_a = 1;
    spec.index_b = 2;
    spec.a_min = spec.b_min = -35;
    spec.a_max = spec.b_max = -5;
    spec.a_step = spec.b_step = 0.05;  // fine grid so the kernels dominate
    spec.methods = {{"theorem1", 1, 35.0, 1.0},
                    {"theorem1", 2, 35.0, 1.0},
                    {"theorem1", 3, 35.0, 1.0},
                    {"necessary", 1, {}, 1.0}};

    std::vector<lcm::ScanRow> serial, parallel;
    double ts = time_ms(&lcm::run_scan_serial, spec, serial);
    double tp = time_ms(&lcm::run_scan_parallel, spec, parallel);

    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i)
        equal = serial[i].a == parallel[i].a && serial[i].b == parallel[i].b &&
                serial[i].method == parallel[i].method && serial[i].mu == parallel[i].mu &&
                serial[i].delta == parallel[i].delta &&
                serial[i].verdict == parallel[i].verdict;

    std::printf("grid: %dx%d cells, %zu methods, %zu rows\n", spec.na(), spec.nb(),
                spec.methods.size(), serial.size());
#ifdef _OPENMP
    std::printf("threads:  %8d\n", omp_get_max_threads());
#else
    std::printf("threads:  compiled without OpenMP\n");
#endif
    std::printf("serial:   %8.1f ms\n", ts);
    std::printf("parallel: %8.1f ms  (speedup %.2fx)\n", tp, ts / tp);
    std::printf("outputs identical: %s\n", equal ? "yes" : "NO");
    return equal ? 0 : 1;
}
