#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcm/cert.hpp"
#include "lcm/plant_io.hpp"
#include "lcm/positivity.hpp"
#include "lcm/rational.hpp"
#include "lcm/scan.hpp"
#include "lcm/synthesis.hpp"

namespace {

constexpr int kExitInconclusive = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitParse = 64;
constexpr int kExitGrid = 65;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt(lcm::Complex z) {
    if (z.imag() == 0.0) return fmt(z.real());
    return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

std::string poly_str(const lcm::Polynomial& p) {
    std::string out;
    int d = p.degree();
    for (int k = d; k >= 0; --k) {
        double c = p.coeff_of_power(k);
        if (!out.empty()) out += "  ";
        out += fmt(c);
    }
    return out;
}

int run_certify(const std::string& plant_path, const std::string& method, int mu,
                std::optional<double> delta, double tmax, double gamma) {
    lcm::RationalTF tf = lcm::load_plant(plant_path);

    if (method == "positivity") {
        lcm::ExPosVerdict v = tf.n() == 1   ? lcm::expos_order1(tf)
                              : tf.n() == 2 ? lcm::expos_order2(tf)
                                            : lcm::expos_oracle(tf, tmax);
        std::cout << "verdict: " << lcm::to_string(v.verdict) << "\n";
        std::cout << "method: " << v.method << "\n";
        if (v.witness_time) std::cout << "witness t*: " << fmt(*v.witness_time) << "\n";
        return v.verdict == lcm::PosVerdict::NotPositive ? 1 : 0;
    }

    lcm::LcmCertificate cert;
    if (method == "necessary") {
        cert = lcm::check_necessary(tf);
    } else if (method == "sampled") {
        cert = lcm::check_exact_sampled(tf, tmax);
    } else if (method == "polynomial") {
        cert = lcm::check_exact_polynomial(tf, gamma);
    } else if (method == "theorem1" || method == "corollary1") {
        double d = delta.value_or(lcm::auto_delta(tf, mu));
        cert = method == "theorem1" ? lcm::certify_theorem1(tf, mu, d)
                                    : lcm::certify_corollary1(tf, mu, d);
    } else {  // auto
        lcm::CertifyOptions opts;
        opts.mu = mu;
        opts.delta = delta;
        opts.gamma = gamma;
        opts.t_max = tmax;
        cert = lcm::certify(tf, opts);
    }

    std::cout << "verdict: " << lcm::to_string(cert.verdict) << "\n";
    std::cout << "method: " << lcm::to_string(cert.method) << "\n";
    if (cert.mu) std::cout << "mu: " << *cert.mu << "\n";
    if (cert.delta) std::cout << "delta: " << fmt(*cert.delta) << "\n";
    if (cert.witness_time) std::cout << "witness t*: " << fmt(*cert.witness_time) << "\n";
    if (!cert.detail.empty()) std::cout << "detail: " << cert.detail << "\n";
    switch (cert.verdict) {
        case lcm::Verdict::Certified: return 0;
        case lcm::Verdict::Refuted: return 1;
        default: return kExitInconclusive;
    }
}

int run_scan(const std::string& spec_path, const std::string& out_path) {
    lcm::ScanSpec spec = lcm::load_scan_spec(spec_path);
    std::vector<lcm::ScanRow> rows = lcm::run_scan(spec);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    lcm::write_scan_csv(rows, out);
    std::cout << "wrote " << rows.size() << " rows (" << spec.na() << "x" << spec.nb()
              << " cells, " << spec.methods.size() << " methods) to " << out_path << "\n";
    return 0;
}

int run_synthesize(const std::string& plant_path, std::optional<double> delta, int mu, int nr,
                   const std::vector<double>& theta, double epsilon, const std::string& cost,
                   const std::string& out_path) {
    lcm::RationalTF plant = lcm::load_plant(plant_path);
    auto [B, A] = lcm::poles_zeros_to_coeffs(plant);
    if (std::abs(B(0.0)) < 1e-12) {
        std::cerr << "error: plant has zero DC gain (numerator vanishes at s = 0); the static "
                     "feedforward gain is undefined\n";
        return kExitInfeasible;
    }

    lcm::SynthesisProblem problem;
    problem.plant = plant;
    problem.mu = mu;
    bool auto_d = !delta.has_value();
    problem.delta = delta.value_or(lcm::auto_delta(plant, mu));
    problem.n_r = nr;
    problem.theta_targets = theta;
    problem.epsilon = epsilon;
    if (cost != "polezero") {
        std::cerr << "error: unknown cost '" << cost << "'\n";
        return kExitParse;
    }
    problem.cost = lcm::CostKind::PoleZeroMatch;

    lcm::SynthesisResult res;
    try {
        res = lcm::synthesize(problem);
    } catch (const lcm::SynthesisInfeasible& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        std::cerr << "most violated constraint: " << e.most_violated << "\n";
        return kExitInfeasible;
    }

    if (auto_d) std::cout << "delta: " << fmt(problem.delta) << " (auto)\n";
    else std::cout << "delta: " << fmt(problem.delta) << "\n";
    std::cout << "mu: " << mu << "\n";
    std::cout << "f: " << poly_str(res.F) << "\n";
    std::cout << "g: " << poly_str(res.G) << "\n";
    std::cout << "K_c: " << fmt(res.Kc) << "\n";
    std::cout << "closed-loop poles:";
    for (const lcm::Complex& p : res.closed_loop_poles) std::cout << "  " << fmt(p);
    std::cout << "\n";
    double ms = lcm::sensitivity_peak(plant, res.F, res.G);
    std::cout << "M_s: " << fmt(ms) << "\n";

    if (!out_path.empty()) {
        double slowest = 0.0;
        for (const lcm::Complex& p : res.closed_loop_poles)
            slowest = slowest == 0.0 ? std::abs(p.real())
                                     : std::min(slowest, std::abs(p.real()));
        double T = 10.0 / slowest;
        std::vector<double> grid;
        for (int i = 0; i < 1000; ++i) grid.push_back(T * i / 999.0);
        std::vector<double> y = lcm::step_response(res.closed_loop, grid);
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        out << "t,y\n";
        for (std::size_t i = 0; i < grid.size(); ++i)
            out << fmt(grid[i]) << ',' << fmt(y[i]) << '\n';
        std::cout << "wrote step response to " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certification and monotonic-tracking synthesis for rational transfer functions"};
    app.require_subcommand(1);

    std::string plant_path, method = "auto", out_path, spec_path, cost = "polezero";
    int mu = 1, nr = -1;
    std::optional<double> delta;
    double tmax = 0.0, gamma = 1.0, epsilon = 0.0;
    std::vector<double> theta;

    CLI::App* certify = app.add_subcommand("certify", "Certify or refute a plant file");
    certify->add_option("plant", plant_path, "plant file")->required();
    certify->add_option("--mu", mu, "certificate order");
    certify->add_option("--delta", delta, "spectrum shift (default: auto rule)");
    certify->add_option("--method", method,
                        "necessary|theorem1|corollary1|polynomial|sampled|positivity|auto");
    certify->add_option("--tmax", tmax, "sampling horizon (0 = default rule)");
    certify->add_option("--gamma", gamma, "commensurability unit for --method polynomial");

    CLI::App* scan = app.add_subcommand("scan", "Sweep a 2-D pole grid to CSV");
    scan->add_option("spec", spec_path, "scan spec file")->required();
    scan->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* synth = app.add_subcommand("synthesize", "Design a monotonic-tracking controller");
    synth->add_option("plant", plant_path, "plant file")->required();
    synth->add_option("--delta", delta, "spectrum shift (default: auto rule)");
    synth->add_option("--mu", mu, "certificate order");
    synth->add_option("--nr", nr, "number of real closed-loop poles (-1 = all)");
    synth->add_option("--theta", theta, "target angles for complex closed-loop pole pairs");
    synth->add_option("--epsilon", epsilon, "stability margin (0 = default)");
    synth->add_option("--cost", cost, "objective: polezero");
    synth->add_option("--out", out_path, "step-response CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (certify->parsed()) return run_certify(plant_path, method, mu, delta, tmax, gamma);
        if (scan->parsed()) return run_scan(spec_path, out_path);
        return run_synthesize(plant_path, delta, mu, nr, theta, epsilon, cost, out_path);
    } catch (const lcm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const lcm::GridError& e) {
        std::cerr << "invalid grid: " << e.what() << "\n";
        return kExitGrid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
