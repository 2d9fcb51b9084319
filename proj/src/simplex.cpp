#include "lcm/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lcm {

namespace {
constexpr double kPivotTol = 1e-11;

struct Tableau {
    // rows x cols, last column is the rhs; an extra objective row at the end.
    std::vector<std::vector<double>> t;
    std::vector<int> basis;
    int rows, cols;  // structural dimensions excluding rhs/objective

    double& at(int i, int j) { return t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    void pivot(int pr, int pc) {
        double piv = at(pr, pc);
        for (int j = 0; j <= cols; ++j) at(pr, j) /= piv;
        for (int i = 0; i <= rows; ++i) {
            if (i == pr) continue;
            double f = at(i, pc);
            if (f == 0.0) continue;
            for (int j = 0; j <= cols; ++j) at(i, j) -= f * at(pr, j);
        }
        basis[static_cast<std::size_t>(pr)] = pc;
    }

    // Bland's rule; returns false at optimality, throws on unboundedness.
    // Entering columns are restricted to j < limit (phase 1 keeps artificials
    // from re-entering the basis).
    bool step(int limit) {
        int pc = -1;
        for (int j = 0; j < limit; ++j) {
            if (at(rows, j) < -kPivotTol) {
                pc = j;
                break;
            }
        }
        if (pc < 0) return false;
        int pr = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < rows; ++i) {
            if (at(i, pc) > kPivotTol) {
                double ratio = at(i, cols) / at(i, pc);
                if (ratio < best - 1e-12 ||
                    (ratio < best + 1e-12 && (pr < 0 || basis[static_cast<std::size_t>(i)] <
                                                             basis[static_cast<std::size_t>(pr)]))) {
                    best = ratio;
                    pr = i;
                }
            }
        }
        if (pr < 0) throw std::runtime_error("unbounded");
        pivot(pr, pc);
        return true;
    }
};
}  // namespace

LpSolution solve_lp(const LpProblem& lp) {
    int m = static_cast<int>(lp.rows.size());
    int n = static_cast<int>(lp.c.size());
    // columns: n structural, m slacks, up to m artificials
    std::vector<int> art_col(static_cast<std::size_t>(m), -1);
    int n_art = 0;
    for (int i = 0; i < m; ++i)
        if (lp.rhs[static_cast<std::size_t>(i)] < 0.0) art_col[static_cast<std::size_t>(i)] = n_art++;

    Tableau tab;
    tab.rows = m;
    tab.cols = n + m + n_art;
    tab.t.assign(static_cast<std::size_t>(m + 1), std::vector<double>(static_cast<std::size_t>(tab.cols + 1), 0.0));
    tab.basis.assign(static_cast<std::size_t>(m), -1);

    for (int i = 0; i < m; ++i) {
        double sign = lp.rhs[static_cast<std::size_t>(i)] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) tab.at(i, j) = sign * lp.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        tab.at(i, n + i) = sign;  // slack
        tab.at(i, tab.cols) = sign * lp.rhs[static_cast<std::size_t>(i)];
        if (art_col[static_cast<std::size_t>(i)] >= 0) {
            int col = n + m + art_col[static_cast<std::size_t>(i)];
            tab.at(i, col) = 1.0;
            tab.basis[static_cast<std::size_t>(i)] = col;
        } else {
            tab.basis[static_cast<std::size_t>(i)] = n + i;
        }
    }

    LpSolution sol;
    if (n_art > 0) {
        // Phase 1: minimize the sum of artificials.
        for (int i = 0; i < m; ++i) {
            if (art_col[static_cast<std::size_t>(i)] < 0) continue;
            for (int j = 0; j <= tab.cols; ++j) tab.at(m, j) -= tab.at(i, j);
        }
        // Basic artificials must carry zero reduced cost (cost 1 minus their
        // own row), otherwise they can re-enter and mask infeasibility.
        for (int k = 0; k < n_art; ++k) tab.at(m, n + m + k) = 0.0;
        try {
            while (tab.step(n + m)) {}
        } catch (const std::runtime_error&) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        double phase1 = -tab.at(m, tab.cols);
        if (phase1 > 1e-8) {
            sol.status = LpStatus::Infeasible;
            for (int i = 0; i < m; ++i)
                if (tab.basis[static_cast<std::size_t>(i)] >= n + m && tab.at(i, tab.cols) > 1e-8)
                    sol.infeasible_row = i;
            return sol;
        }
        // Drive leftover degenerate artificials out of the basis.
        for (int i = 0; i < m; ++i) {
            if (tab.basis[static_cast<std::size_t>(i)] < n + m) continue;
            for (int j = 0; j < n + m; ++j) {
                if (std::abs(tab.at(i, j)) > kPivotTol) {
                    tab.pivot(i, j);
                    break;
                }
            }
        }
        // Cut the artificial columns and reset the objective row.
        tab.cols = n + m;
        for (auto& row : tab.t) row[static_cast<std::size_t>(tab.cols)] = row.back(), row.resize(static_cast<std::size_t>(tab.cols + 1));
        for (int j = 0; j <= tab.cols; ++j) tab.at(m, j) = 0.0;
    }

    // Phase 2 objective, reduced against the current basis.
    for (int j = 0; j < n; ++j) tab.at(m, j) = lp.c[static_cast<std::size_t>(j)];
    for (int i = 0; i < m; ++i) {
        int b = tab.basis[static_cast<std::size_t>(i)];
        double f = tab.at(m, b);
        if (f == 0.0) continue;
        for (int j = 0; j <= tab.cols; ++j) tab.at(m, j) -= f * tab.at(i, j);
    }
    try {
        while (tab.step(tab.cols)) {}
    } catch (const std::runtime_error&) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.x.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < m; ++i) {
        int b = tab.basis[static_cast<std::size_t>(i)];
        if (b < n) sol.x[static_cast<std::size_t>(b)] = tab.at(i, tab.cols);
    }
    sol.objective = 0.0;
    for (int j = 0; j < n; ++j) sol.objective += lp.c[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];
    return sol;
}

}  // namespace lcm
