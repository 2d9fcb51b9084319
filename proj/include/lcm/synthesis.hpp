#ifndef LCM_SYNTHESIS_HPP
#define LCM_SYNTHESIS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lcm/polynomial.hpp"
#include "lcm/rational.hpp"

namespace lcm {

enum class CostKind {
    PoleZeroMatch,  ///< |w_1 - max over real zeros of (z+delta)^mu|
    CustomLinear,   ///< caller-supplied linear functional over (w, v)
};

/// Plant plus tuning for the monotonic pole-placement synthesis.
struct SynthesisProblem {
    RationalTF plant;
    int mu = 1;
    double delta = 0.0;
    int n_r = -1;                      ///< odd count of real closed-loop poles; -1 = all (2n-1)
    std::vector<double> theta_targets; ///< length 2n-1; empty = all zero
    double epsilon = 0.0;              ///< 0 = default 1e-6 * delta^mu
    CostKind cost = CostKind::PoleZeroMatch;
    std::vector<double> cost_w, cost_v;  ///< CustomLinear coefficients
};

/// Decision variables of the convex program: the sorted real-pole magnitudes
/// and the magnitude vector v, both of length 2n-1+m.
struct DecisionPoint {
    std::vector<double> w_sorted;
    std::vector<double> v;
};

struct SynthesisInfeasible : std::runtime_error {
    explicit SynthesisInfeasible(const std::string& what, std::string violated)
        : std::runtime_error(what), most_violated(std::move(violated)) {}
    std::string most_violated;
};

/// Explicit convex program: objective, stability box, weak-majorization
/// prefix-vs-subset-max inequalities, the cosine power-sum inequalities with
/// the closed-loop order substituted, and the affine structure constraints.
struct ConvexProgram {
    int n = 0, m = 0, n_r = 0, mu = 1;
    double delta = 0.0, epsilon = 0.0;
    std::vector<double> theta;         ///< closed-loop pole angles, length 2n-1
    std::vector<double> phi;           ///< plant zero angles
    std::vector<double> fixed_zero_v;  ///< |z_i+delta|^mu
    CostKind cost = CostKind::PoleZeroMatch;
    std::vector<double> cost_w, cost_v;
    double cost_target = 0.0;  ///< PoleZeroMatch target

    int dim() const { return 2 * n - 1 + m; }
    int n_pairs() const { return (2 * n - 1 - n_r) / 2; }

    /// Assemble the full (w, v) vectors from the free variables
    /// [w_1..w_{n_r}, pair_1..pair_{n_pairs}].
    DecisionPoint expand(const std::vector<double>& free_vars) const;

    double objective(const DecisionPoint& d) const;
    /// Largest constraint violation (<= 0 means feasible); the most violated
    /// constraint's description is written to label when given.
    double max_violation(const DecisionPoint& d, std::string* label = nullptr) const;
};

ConvexProgram formulate(const SynthesisProblem& problem);

double pole_zero_match_cost(const std::vector<double>& w_sorted, const std::vector<Complex>& zeros,
                            double delta, int mu);

/// Cutting-plane solve over the two-phase simplex. For mu = 1 every
/// constraint is affine, so the result is a vertex of the linear program.
DecisionPoint solve(const ConvexProgram& program);

std::vector<Complex> restore_poles(const DecisionPoint& point, const ConvexProgram& program);

/// Monic characteristic polynomial from a conjugate-closed pole list.
Polynomial char_poly(const std::vector<Complex>& p_cl);

/// Controller coefficients (f, g) from the banded Sylvester system
/// B F + A G = a_cl. The plant numerator and denominator must be coprime.
std::pair<std::vector<double>, std::vector<double>> solve_sylvester(const RationalTF& plant,
                                                                    const Polynomial& a_cl);

double compute_Kc(const RationalTF& plant, const Polynomial& F, const Polynomial& G);

struct SynthesisResult {
    Polynomial F, G;
    double Kc = 0.0;
    std::vector<Complex> closed_loop_poles;
    RationalTF closed_loop;
    DecisionPoint point;
    double objective = 0.0;
    double max_constraint_violation = 0.0;
    double sylvester_residual = 0.0;
};

SynthesisResult synthesize(const SynthesisProblem& problem);

/// Peak of |A G / (B F + A G)| over a log frequency grid with golden-section
/// refinement around the grid maximum.
double sensitivity_peak(const RationalTF& plant, const Polynomial& F, const Polynomial& G);

}  // namespace lcm

#endif
