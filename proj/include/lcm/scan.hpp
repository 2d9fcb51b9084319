#ifndef LCM_SCAN_HPP
#define LCM_SCAN_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcm/cert.hpp"
#include "lcm/rational.hpp"

namespace lcm {

struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One certification method of a scan: a certificate family plus tuning.
/// Names: necessary | theorem1 | corollary1 | polynomial | sampled | auto.
struct ScanMethod {
    std::string name;
    int mu = 1;
    std::optional<double> delta;  ///< auto rule per cell when absent
    double gamma = 1.0;           ///< polynomial commensurability unit
};

/// Two-parameter sweep over a plant template. Either two pole indices vary
/// independently (axis a -> pole[index_a], axis b -> pole[index_b]) or a
/// conjugate pair varies (axis a = real part, axis b = imaginary part of
/// pole[index_a], with pole[index_a + 1] its conjugate).
struct ScanSpec {
    RationalTF base;
    bool conjugate_pair = false;
    int index_a = 0, index_b = 1;
    double a_min = 0, a_max = 0, a_step = 1;
    double b_min = 0, b_max = 0, b_step = 1;
    std::vector<ScanMethod> methods;

    int na() const;
    int nb() const;
    double a_at(int i) const { return a_min + i * a_step; }
    double b_at(int j) const { return b_min + j * b_step; }
    /// Plant at one grid cell.
    RationalTF cell(int i, int j) const;
    /// Throws GridError on empty/inverted/degenerate grids or bad indices.
    void validate() const;
};

ScanSpec parse_scan_spec(std::istream& in);
ScanSpec load_scan_spec(const std::string& path);

struct ScanRow {
    double a = 0, b = 0;
    std::string method;
    int mu = 1;
    double delta = 0;  ///< resolved per cell; 0 for delta-free methods
    Verdict verdict = Verdict::Inconclusive;
};

/// One (cell, method) evaluation; shared by both scan drivers.
ScanRow evaluate_cell(const ScanSpec& spec, int i, int j, const ScanMethod& method);

/// Serial reference implementation: row-major cells, methods in spec order.
std::vector<ScanRow> run_scan_serial(const ScanSpec& spec);
/// OpenMP-parallel implementation; identical output order to the serial one.
std::vector<ScanRow> run_scan_parallel(const ScanSpec& spec);
std::vector<ScanRow> run_scan(const ScanSpec& spec);

/// Header `p_a,p_b,method,mu,delta,verdict`; numbers formatted %.12g.
void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& out);

}  // namespace lcm

#endif
