#ifndef LCM_SIMPLEX_HPP
#define LCM_SIMPLEX_HPP

#include <string>
#include <vector>

namespace lcm {

/// Dense two-phase primal simplex for small linear programs
///   minimize c'x  subject to  A x <= b,  x >= 0.
/// Problem sizes here are tiny (tens of rows), so a plain tableau with
/// Bland's rule is adequate and deterministic.
struct LpProblem {
    std::vector<double> c;
    std::vector<std::vector<double>> rows;  // one entry per constraint
    std::vector<double> rhs;

    void add_constraint(std::vector<double> a, double b) {
        rows.push_back(std::move(a));
        rhs.push_back(b);
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
    int infeasible_row = -1;  ///< a row that could not be satisfied (phase 1)
};

LpSolution solve_lp(const LpProblem& lp);

}  // namespace lcm

#endif
