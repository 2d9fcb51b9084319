#include "lcm/synthesis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "lcm/cert.hpp"
#include "lcm/simplex.hpp"

namespace lcm {

namespace {
constexpr double kFeasTol = 1e-9;
constexpr double kCutTol = 1e-12;

double angle_bound(int mu) {
    return mu <= 1 ? std::numbers::pi / 2.0 : std::numbers::pi / (2.0 * (mu - 1));
}

// max over k-subsets of v of the subset sum, by explicit enumeration when the
// dimension permits, with the maximizing subset mask returned alongside.
struct SubsetMax {
    double value;
    std::uint32_t mask;
};

std::vector<SubsetMax> subset_maxima(const std::vector<double>& v) {
    int n = static_cast<int>(v.size());
    std::vector<SubsetMax> best(static_cast<std::size_t>(n) + 1,
                                {-std::numeric_limits<double>::infinity(), 0});
    best[0] = {0.0, 0};
    if (n <= 16) {
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            int k = std::popcount(mask);
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) s += v[static_cast<std::size_t>(i)];
            if (s > best[static_cast<std::size_t>(k)].value) best[static_cast<std::size_t>(k)] = {s, mask};
        }
    } else {
        // top-k fallback for larger dimensions
        std::vector<int> idx(static_cast<std::size_t>(n));
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return v[static_cast<std::size_t>(a)] > v[static_cast<std::size_t>(b)];
        });
        double acc = 0.0;
        std::uint32_t mask = 0;
        for (int k = 1; k <= n; ++k) {
            acc += v[static_cast<std::size_t>(idx[static_cast<std::size_t>(k - 1)])];
            mask |= 1u << idx[static_cast<std::size_t>(k - 1)];
            best[static_cast<std::size_t>(k)] = {acc, mask};
        }
    }
    return best;
}

double clamped_pow(double x, double e) { return std::pow(std::max(x, 0.0), e); }
}  // namespace

DecisionPoint ConvexProgram::expand(const std::vector<double>& free_vars) const {
    DecisionPoint d;
    int N = dim();
    d.w_sorted.assign(static_cast<std::size_t>(N), 0.0);
    d.v.assign(static_cast<std::size_t>(N), 0.0);
    for (int i = 0; i < n_r; ++i) d.w_sorted[static_cast<std::size_t>(i)] = free_vars[static_cast<std::size_t>(i)];
    for (int j = 0; j < n_pairs(); ++j) {
        double val = free_vars[static_cast<std::size_t>(n_r + j)];
        d.v[static_cast<std::size_t>(n_r + 2 * j)] = val;
        d.v[static_cast<std::size_t>(n_r + 2 * j + 1)] = val;
    }
    for (int i = 0; i < m; ++i)
        d.v[static_cast<std::size_t>(2 * n - 1 + i)] = fixed_zero_v[static_cast<std::size_t>(i)];
    return d;
}

double ConvexProgram::objective(const DecisionPoint& d) const {
    if (cost == CostKind::PoleZeroMatch) return std::abs(d.w_sorted[0] - cost_target);
    double acc = 0.0;
    for (std::size_t i = 0; i < d.w_sorted.size(); ++i) acc += cost_w[i] * d.w_sorted[i];
    for (std::size_t i = 0; i < d.v.size(); ++i) acc += cost_v[i] * d.v[i];
    return acc;
}

double ConvexProgram::max_violation(const DecisionPoint& d, std::string* label) const {
    double worst = -std::numeric_limits<double>::infinity();
    std::string worst_label;
    auto consider = [&](double violation, const std::string& what) {
        if (violation > worst) {
            worst = violation;
            worst_label = what;
        }
    };
    int N = dim();
    for (int i = 0; i < N; ++i) {
        consider(-d.w_sorted[static_cast<std::size_t>(i)], "w_" + std::to_string(i + 1) + " >= 0");
        consider(-d.v[static_cast<std::size_t>(i)], "v_" + std::to_string(i + 1) + " >= 0");
    }
    for (int i = 0; i + 1 < n_r; ++i)
        consider(d.w_sorted[static_cast<std::size_t>(i + 1)] - d.w_sorted[static_cast<std::size_t>(i)],
                 "w ordering at " + std::to_string(i + 1));
    // affine structure constraints
    for (int i = n_r; i < N; ++i)
        consider(std::abs(d.w_sorted[static_cast<std::size_t>(i)]), "w zero tail");
    for (int i = 0; i < n_r; ++i) consider(std::abs(d.v[static_cast<std::size_t>(i)]), "v real-pole head");
    for (int j = 0; j < n_pairs(); ++j)
        consider(std::abs(d.v[static_cast<std::size_t>(n_r + 2 * j)] - d.v[static_cast<std::size_t>(n_r + 2 * j + 1)]),
                 "conjugate pairing " + std::to_string(j + 1));
    for (int i = 0; i < m; ++i)
        consider(std::abs(d.v[static_cast<std::size_t>(2 * n - 1 + i)] - fixed_zero_v[static_cast<std::size_t>(i)]),
                 "fixed zero magnitude " + std::to_string(i + 1));
    // stability box
    consider(d.w_sorted[0] - (std::pow(delta, mu) - epsilon), "stability w_1 <= delta^mu - eps");
    // weak majorization, prefix sums vs subset maxima
    std::vector<SubsetMax> maxima = subset_maxima(d.v);
    double prefix = 0.0;
    for (int k = 1; k <= N; ++k) {
        prefix += d.w_sorted[static_cast<std::size_t>(k - 1)];
        consider(maxima[static_cast<std::size_t>(k)].value - prefix,
                 "majorization prefix " + std::to_string(k));
    }
    // cosine power-sum inequalities, closed-loop order
    for (int k = 1; k < mu; ++k) {
        double lhs = 0.0, rhs = 0.0;
        double e = double(k) / mu;
        for (int i = 0; i < N; ++i) lhs += clamped_pow(d.w_sorted[static_cast<std::size_t>(i)], e);
        for (int i = 0; i < 2 * n - 1; ++i)
            lhs += clamped_pow(d.v[static_cast<std::size_t>(i)], e) * std::cos(theta[static_cast<std::size_t>(i)] * k);
        for (int i = 0; i < m; ++i)
            rhs += clamped_pow(d.v[static_cast<std::size_t>(2 * n - 1 + i)], e) *
                   std::cos(phi[static_cast<std::size_t>(i)] * k);
        consider(rhs - lhs, "power-sum inequality k=" + std::to_string(k));
    }
    if (label) *label = worst_label;
    return worst;
}

double pole_zero_match_cost(const std::vector<double>& w_sorted, const std::vector<Complex>& zeros,
                            double delta, int mu) {
    double target = -std::numeric_limits<double>::infinity();
    for (const Complex& z : zeros)
        if (std::abs(z.imag()) <= 1e-9) target = std::max(target, std::pow(z.real() + delta, mu));
    if (!std::isfinite(target))
        throw std::domain_error("pole_zero_match_cost: plant has no real zero; supply a custom cost");
    return std::abs(w_sorted.at(0) - target);
}

ConvexProgram formulate(const SynthesisProblem& problem) {
    const RationalTF& plant = problem.plant;
    int n = plant.n(), m = plant.m();
    if (n < 1) throw std::domain_error("formulate: plant must have at least one pole");
    if (!plant.conjugate_closed()) throw std::domain_error("formulate: plant spectrum not conjugate-closed");
    if (problem.mu < 1) throw std::domain_error("formulate: mu must be a positive integer");

    double min_z = 0.0;
    for (const Complex& z : plant.zeros) min_z = std::min(min_z, z.real());
    if (problem.delta <= -min_z)
        throw std::domain_error("formulate: delta must exceed -min Re of the plant zeros");

    ConvexProgram prog;
    prog.n = n;
    prog.m = m;
    prog.mu = problem.mu;
    prog.delta = problem.delta;
    prog.epsilon = problem.epsilon > 0.0 ? problem.epsilon : 1e-6 * std::pow(problem.delta, problem.mu);
    prog.n_r = problem.n_r < 0 ? 2 * n - 1 : problem.n_r;
    if (prog.n_r < 1 || prog.n_r > 2 * n - 1 || prog.n_r % 2 == 0)
        throw std::domain_error("formulate: n_r must be odd and within [1, 2n-1]");

    prog.theta = problem.theta_targets.empty()
                     ? std::vector<double>(static_cast<std::size_t>(2 * n - 1), 0.0)
                     : problem.theta_targets;
    if (static_cast<int>(prog.theta.size()) != 2 * n - 1)
        throw std::domain_error("formulate: theta_targets must have length 2n-1");
    double bound = angle_bound(problem.mu);
    for (int i = 0; i < prog.n_r; ++i)
        if (prog.theta[static_cast<std::size_t>(i)] != 0.0)
            throw std::domain_error("formulate: the first n_r angle targets must be zero");
    for (int j = 0; j < prog.n_pairs(); ++j) {
        double a = prog.theta[static_cast<std::size_t>(prog.n_r + 2 * j)];
        double b = prog.theta[static_cast<std::size_t>(prog.n_r + 2 * j + 1)];
        if (std::abs(a + b) > 1e-12)
            throw std::domain_error("formulate: complex angle targets must come in opposite pairs");
        if (std::abs(a) >= bound) throw std::domain_error("formulate: angle target outside the mu bound");
    }
    prog.phi.reserve(static_cast<std::size_t>(m));
    prog.fixed_zero_v.reserve(static_cast<std::size_t>(m));
    for (const Complex& z : plant.zeros) {
        Complex shifted = z + problem.delta;
        if (std::abs(std::arg(shifted)) >= bound)
            throw std::domain_error("formulate: shifted plant zero angle outside the mu bound; enlarge delta");
        prog.phi.push_back(std::arg(shifted));
        prog.fixed_zero_v.push_back(std::pow(std::abs(shifted), problem.mu));
    }

    prog.cost = problem.cost;
    if (problem.cost == CostKind::PoleZeroMatch) {
        double target = -std::numeric_limits<double>::infinity();
        for (const Complex& z : plant.zeros)
            if (std::abs(z.imag()) <= 1e-9)
                target = std::max(target, std::pow(z.real() + problem.delta, problem.mu));
        if (!std::isfinite(target))
            throw std::domain_error("formulate: pole-zero match cost requires a real plant zero");
        prog.cost_target = target;
    } else {
        prog.cost_w = problem.cost_w;
        prog.cost_v = problem.cost_v;
        if (static_cast<int>(prog.cost_w.size()) != prog.dim() ||
            static_cast<int>(prog.cost_v.size()) != prog.dim())
            throw std::domain_error("formulate: custom cost coefficient length mismatch");
    }
    return prog;
}

DecisionPoint solve(const ConvexProgram& program) {
    int n_free = program.n_r + program.n_pairs();
    bool epigraph = program.cost == CostKind::PoleZeroMatch;
    int nx = n_free + (epigraph ? 1 : 0);

    LpProblem lp;
    lp.c.assign(static_cast<std::size_t>(nx), 0.0);
    if (epigraph) {
        lp.c[static_cast<std::size_t>(n_free)] = 1.0;
    } else {
        for (int i = 0; i < program.n_r; ++i) lp.c[static_cast<std::size_t>(i)] = program.cost_w[static_cast<std::size_t>(i)];
        for (int j = 0; j < program.n_pairs(); ++j)
            lp.c[static_cast<std::size_t>(program.n_r + j)] =
                program.cost_v[static_cast<std::size_t>(program.n_r + 2 * j)] +
                program.cost_v[static_cast<std::size_t>(program.n_r + 2 * j + 1)];
    }
    auto row = [nx]() { return std::vector<double>(static_cast<std::size_t>(nx), 0.0); };

    // stability box
    {
        auto r = row();
        r[0] = 1.0;
        lp.add_constraint(std::move(r), std::pow(program.delta, program.mu) - program.epsilon);
    }
    // descending order of the real-pole magnitudes
    for (int i = 0; i + 1 < program.n_r; ++i) {
        auto r = row();
        r[static_cast<std::size_t>(i)] = -1.0;
        r[static_cast<std::size_t>(i + 1)] = 1.0;
        lp.add_constraint(std::move(r), 0.0);
    }
    // epigraph of |w_1 - target|
    if (epigraph) {
        auto r1 = row();
        r1[0] = 1.0;
        r1[static_cast<std::size_t>(n_free)] = -1.0;
        lp.add_constraint(std::move(r1), program.cost_target);
        auto r2 = row();
        r2[0] = -1.0;
        r2[static_cast<std::size_t>(n_free)] = -1.0;
        lp.add_constraint(std::move(r2), -program.cost_target);
    }

    // A majorization cut for subset mask (over the full v indexing):
    // sum_{i in S} v_i - sum_{i<=k} w_i <= 0.
    auto add_majorization_cut = [&](int k, std::uint32_t mask) {
        auto r = row();
        double fixed = 0.0;
        for (int i = 0; i < program.dim(); ++i) {
            if (!(mask & (1u << i))) continue;
            if (i >= program.n_r && i < 2 * program.n - 1) {
                int pair = (i - program.n_r) / 2;
                r[static_cast<std::size_t>(program.n_r + pair)] += 1.0;
            } else if (i >= 2 * program.n - 1) {
                fixed += program.fixed_zero_v[static_cast<std::size_t>(i - (2 * program.n - 1))];
            }
        }
        for (int i = 0; i < std::min(k, program.n_r); ++i) r[static_cast<std::size_t>(i)] -= 1.0;
        lp.add_constraint(std::move(r), -fixed);
    };
    // seed cuts: each conjugate pair against the first two prefixes, and the
    // fixed zero magnitudes against every prefix
    for (int j = 0; j < program.n_pairs(); ++j) {
        add_majorization_cut(1, 1u << (program.n_r + 2 * j));
        add_majorization_cut(2, (1u << (program.n_r + 2 * j)) | (1u << (program.n_r + 2 * j + 1)));
    }
    {
        std::vector<double> fz = program.fixed_zero_v;
        std::sort(fz.begin(), fz.end(), std::greater<double>());
        std::vector<int> order(static_cast<std::size_t>(program.m));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return program.fixed_zero_v[static_cast<std::size_t>(a)] >
                   program.fixed_zero_v[static_cast<std::size_t>(b)];
        });
        std::uint32_t mask = 0;
        for (int k = 1; k <= program.m; ++k) {
            mask |= 1u << (2 * program.n - 1 + order[static_cast<std::size_t>(k - 1)]);
            add_majorization_cut(k, mask);
        }
    }

    std::string label;
    for (int iter = 0; iter < 200; ++iter) {
        LpSolution sol = solve_lp(lp);
        if (sol.status == LpStatus::Unbounded)
            throw std::runtime_error("solve: unbounded program (cost lacks a stability box)");
        if (sol.status == LpStatus::Infeasible) {
            DecisionPoint origin = program.expand(std::vector<double>(static_cast<std::size_t>(n_free), 0.0));
            program.max_violation(origin, &label);
            throw SynthesisInfeasible("synthesis program infeasible", label);
        }
        std::vector<double> free_vars(sol.x.begin(), sol.x.begin() + n_free);
        DecisionPoint d = program.expand(free_vars);

        bool cut_added = false;
        // violated majorization prefixes
        std::vector<SubsetMax> maxima = subset_maxima(d.v);
        double prefix = 0.0;
        for (int k = 1; k <= program.dim(); ++k) {
            prefix += d.w_sorted[static_cast<std::size_t>(k - 1)];
            if (maxima[static_cast<std::size_t>(k)].value - prefix > kCutTol) {
                add_majorization_cut(k, maxima[static_cast<std::size_t>(k)].mask);
                cut_added = true;
            }
        }
        // violated cosine power-sum inequalities: outer-linearize the concave
        // left side at the current point
        for (int k = 1; k < program.mu; ++k) {
            double e = double(k) / program.mu;
            double lhs = 0.0, rhs = 0.0;
            for (int i = 0; i < program.dim(); ++i) lhs += clamped_pow(d.w_sorted[static_cast<std::size_t>(i)], e);
            for (int i = 0; i < 2 * program.n - 1; ++i)
                lhs += clamped_pow(d.v[static_cast<std::size_t>(i)], e) *
                       std::cos(program.theta[static_cast<std::size_t>(i)] * k);
            for (int i = 0; i < program.m; ++i)
                rhs += clamped_pow(d.v[static_cast<std::size_t>(2 * program.n - 1 + i)], e) *
                       std::cos(program.phi[static_cast<std::size_t>(i)] * k);
            if (rhs - lhs <= kCutTol) continue;
            // gradient of lhs wrt the free variables (clamped away from the
            // power-law singularity at zero)
            auto grad = std::vector<double>(static_cast<std::size_t>(nx), 0.0);
            for (int i = 0; i < program.n_r; ++i)
                grad[static_cast<std::size_t>(i)] =
                    e * std::pow(std::max(d.w_sorted[static_cast<std::size_t>(i)], 1e-9), e - 1.0);
            for (int j = 0; j < program.n_pairs(); ++j) {
                double val = std::max(d.v[static_cast<std::size_t>(program.n_r + 2 * j)], 1e-9);
                double ck = std::cos(program.theta[static_cast<std::size_t>(program.n_r + 2 * j)] * k) +
                            std::cos(program.theta[static_cast<std::size_t>(program.n_r + 2 * j + 1)] * k);
                grad[static_cast<std::size_t>(program.n_r + j)] = e * std::pow(val, e - 1.0) * ck;
            }
            // cut: lhs(x0) + grad.(x - x0) >= rhs  ->  -grad.x <= lhs0 - grad.x0 - rhs
            double gx0 = 0.0;
            for (int i = 0; i < n_free; ++i) gx0 += grad[static_cast<std::size_t>(i)] * free_vars[static_cast<std::size_t>(i)];
            auto r = row();
            for (int i = 0; i < n_free; ++i) r[static_cast<std::size_t>(i)] = -grad[static_cast<std::size_t>(i)];
            lp.add_constraint(std::move(r), lhs - gx0 - rhs);
            cut_added = true;
        }

        if (!cut_added) {
            double viol = program.max_violation(d, &label);
            if (viol <= kFeasTol) return d;
            throw std::runtime_error("solve: converged point violates " + label);
        }
    }
    throw std::runtime_error("solve: cutting-plane iteration limit reached");
}

std::vector<Complex> restore_poles(const DecisionPoint& point, const ConvexProgram& program) {
    std::vector<Complex> poles;
    poles.reserve(static_cast<std::size_t>(2 * program.n - 1));
    for (int j = 0; j < program.n_r; ++j)
        poles.emplace_back(std::pow(point.w_sorted[static_cast<std::size_t>(j)], 1.0 / program.mu) - program.delta,
                           0.0);
    for (int j = program.n_r; j < 2 * program.n - 1; ++j) {
        double mag = std::pow(point.v[static_cast<std::size_t>(j)], 1.0 / program.mu);
        poles.push_back(std::polar(mag, program.theta[static_cast<std::size_t>(j)]) - program.delta);
    }
    return poles;
}

Polynomial char_poly(const std::vector<Complex>& p_cl) { return Polynomial::from_roots(p_cl, 1e-10); }

std::pair<std::vector<double>, std::vector<double>> solve_sylvester(const RationalTF& plant,
                                                                    const Polynomial& a_cl) {
    int n = plant.n();
    auto [num, den] = poles_zeros_to_coeffs(plant);
    if (a_cl.degree() != 2 * n - 1 || std::abs(a_cl.leading() - 1.0) > 1e-12)
        throw std::domain_error("solve_sylvester: a_cl must be monic of degree 2n-1");
    // b_0..b_n with the leading entries zero-padded, a_0..a_n monic
    std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0), a(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        b[static_cast<std::size_t>(k)] = num.coeff_of_power(n - k);
        a[static_cast<std::size_t>(k)] = den.coeff_of_power(n - k);
    }
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 1; j <= n; ++j)
        for (int i = j; i <= j + n; ++i)
            if (i <= 2 * n) M(i - 1, j - 1) = b[static_cast<std::size_t>(i - j)];
    for (int j = n + 1; j <= 2 * n; ++j)
        for (int i = j - n; i <= j; ++i) M(i - 1, j - 1) = a[static_cast<std::size_t>(i - j + n)];
    Eigen::VectorXd rhs(2 * n);
    for (int k = 0; k < 2 * n; ++k) rhs(k) = a_cl.coeff_of_power(2 * n - 1 - k);

    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    double scale = M.cwiseAbs().maxCoeff();
    if (std::abs(lu.determinant()) <= 1e-10 * std::pow(std::max(scale, 1.0), 2 * n))
        throw std::domain_error("solve_sylvester: plant numerator and denominator are not coprime");
    Eigen::VectorXd fg = lu.solve(rhs);
    std::vector<double> f(static_cast<std::size_t>(n)), g(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        f[static_cast<std::size_t>(k)] = fg(k);
        g[static_cast<std::size_t>(k)] = fg(n + k);
    }
    // verify B F + A G = a_cl
    Polynomial F{std::vector<double>(f)}, G{std::vector<double>(g)};
    Polynomial residual = num * F + den * G - a_cl;
    for (double c : residual.coeffs())
        if (std::abs(c) > 1e-8)
            throw std::domain_error("solve_sylvester: residual exceeds tolerance; plant nearly non-coprime");
    return {f, g};
}

double compute_Kc(const RationalTF& plant, const Polynomial& F, const Polynomial& G) {
    auto [num, den] = poles_zeros_to_coeffs(plant);
    double b0 = num(0.0);
    if (b0 == 0.0) throw std::domain_error("compute_Kc: plant has a zero at the origin (B(0) = 0)");
    return (b0 * F(0.0) + den(0.0) * G(0.0)) / b0;
}

SynthesisResult synthesize(const SynthesisProblem& problem) {
    ConvexProgram program = formulate(problem);
    auto [num, den] = poles_zeros_to_coeffs(problem.plant);
    if (num(0.0) == 0.0)
        throw std::domain_error("synthesize: plant zero at the origin blocks unity DC gain");

    SynthesisResult res;
    res.point = solve(program);
    res.objective = program.objective(res.point);
    res.max_constraint_violation = program.max_violation(res.point);
    res.closed_loop_poles = restore_poles(res.point, program);
    Polynomial a_cl = char_poly(res.closed_loop_poles);
    auto [f, g] = solve_sylvester(problem.plant, a_cl);
    res.F = Polynomial{std::vector<double>(f)};
    res.G = Polynomial{std::vector<double>(g)};
    res.Kc = compute_Kc(problem.plant, res.F, res.G);

    Polynomial residual = num * res.F + den * res.G - a_cl;
    for (double c : residual.coeffs()) res.sylvester_residual = std::max(res.sylvester_residual, std::abs(c));

    res.closed_loop.gain = res.Kc * problem.plant.gain;
    res.closed_loop.zeros = problem.plant.zeros;
    res.closed_loop.poles = res.closed_loop_poles;

    for (const Complex& p : res.closed_loop_poles)
        if (p.real() >= 0.0) throw std::runtime_error("synthesize: restored pole not strictly stable");
    LcmCertificate cert = certify_corollary1(res.closed_loop, problem.mu, program.delta);
    if (cert.verdict != Verdict::Certified)
        throw std::runtime_error("synthesize: closed loop failed its own certificate (" + cert.detail + ")");
    return res;
}

double sensitivity_peak(const RationalTF& plant, const Polynomial& F, const Polynomial& G) {
    auto [num, den] = poles_zeros_to_coeffs(plant);
    Polynomial S_num = den * G;
    Polynomial S_den = num * F + den * G;
    auto mag = [&](double w) {
        Complex s(0.0, w);
        return std::abs(S_num(s) / S_den(s));
    };
    const int points = 2000;
    double lw_lo = std::log(1e-3), lw_hi = std::log(1e4);
    double best = 0.0;
    int best_i = 0;
    for (int i = 0; i < points; ++i) {
        double w = std::exp(lw_lo + (lw_hi - lw_lo) * i / (points - 1));
        double v = mag(w);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    // golden-section refinement on log-frequency around the grid maximum
    double a = lw_lo + (lw_hi - lw_lo) * std::max(0, best_i - 1) / (points - 1);
    double b = lw_lo + (lw_hi - lw_lo) * std::min(points - 1, best_i + 1) / (points - 1);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    for (int it = 0; it < 80; ++it) {
        if (mag(std::exp(c)) > mag(std::exp(d)))
            b = d;
        else
            a = c;
        c = b - gr * (b - a);
        d = a + gr * (b - a);
    }
    return std::max(best, mag(std::exp(0.5 * (a + b))));
}

}  // namespace lcm
