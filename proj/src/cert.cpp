#include "lcm/cert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lcm/majorization.hpp"

namespace lcm {

namespace {
constexpr double kSlack = 1e-12;
constexpr double kSampleTol = 1e-10;
constexpr double kRealTol = 1e-9;

double min_real_part(const RationalTF& tf) {
    double m = 0.0;
    bool first = true;
    for (const Complex& p : tf.poles) {
        m = first ? p.real() : std::min(m, p.real());
        first = false;
    }
    for (const Complex& z : tf.zeros) {
        m = first ? z.real() : std::min(m, z.real());
        first = false;
    }
    return m;
}
}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "Certified";
        case Verdict::Refuted: return "Refuted";
        default: return "Inconclusive";
    }
}

std::string to_string(CertMethod m) {
    switch (m) {
        case CertMethod::ExactSampled: return "ExactSampled";
        case CertMethod::ExactPolynomial: return "ExactPolynomial";
        case CertMethod::NecessaryFail: return "NecessaryFail";
        case CertMethod::Theorem1: return "Theorem1";
        default: return "Corollary1";
    }
}

double MixedRelaxation::g(double t) const {
    Complex acc(0.0, 0.0);
    for (const Complex& p : poles) acc += std::exp(p * t);
    for (const Complex& z : zeros) acc -= std::exp(z * t);
    return acc.real();
}

std::vector<double> sample_grid(double t_max, int n_samples) {
    std::vector<double> grid{0.0};
    if (t_max <= 0.0 || n_samples <= 0) return grid;
    int half = n_samples / 2;
    for (int i = 1; i <= half; ++i) grid.push_back(t_max * i / half);
    if (t_max > 1e-6) {
        double lo = std::log(1e-6), hi = std::log(t_max);
        int rest = n_samples - half;
        for (int i = 0; i < rest; ++i)
            grid.push_back(std::exp(lo + (hi - lo) * i / std::max(1, rest - 1)));
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

double default_t_max(const RationalTF& tf) {
    double dom = -std::numeric_limits<double>::infinity();
    for (const Complex& p : tf.poles) dom = std::max(dom, p.real());
    for (const Complex& z : tf.zeros) dom = std::max(dom, z.real());
    if (!std::isfinite(dom) || std::abs(dom) < 1e-6) return 50.0;
    return 50.0 / std::abs(dom);
}

LcmCertificate check_necessary(const RationalTF& tf, double tol) {
    LcmCertificate cert;
    cert.method = CertMethod::NecessaryFail;
    if (tf.n() < tf.m()) {
        cert.verdict = Verdict::Refuted;
        cert.detail = "condition (a): n < m";
        return cert;
    }
    double pmax = -std::numeric_limits<double>::infinity();
    double zmax = -std::numeric_limits<double>::infinity();
    for (const Complex& p : tf.poles) pmax = std::max(pmax, p.real());
    for (const Complex& z : tf.zeros) zmax = std::max(zmax, z.real());
    if (tf.m() > 0 && pmax < zmax - tol) {
        cert.verdict = Verdict::Refuted;
        cert.detail = "condition (b): max Re(p) < max Re(z)";
        return cert;
    }
    if (tf.n() == tf.m()) {
        double ps = 0.0, zs = 0.0;
        for (const Complex& p : tf.poles) ps += p.real();
        for (const Complex& z : tf.zeros) zs += z.real();
        if (ps < zs - tol) {
            cert.verdict = Verdict::Refuted;
            cert.detail = "condition (c): sum p < sum z";
            return cert;
        }
    }
    if (tf.gain <= 0.0) {
        cert.verdict = Verdict::Refuted;
        cert.detail = "K <= 0";
        return cert;
    }
    cert.verdict = Verdict::Inconclusive;
    return cert;
}

LcmCertificate check_exact_sampled(const RationalTF& tf, double t_max, int n_samples) {
    LcmCertificate cert;
    cert.method = CertMethod::ExactSampled;
    if (tf.gain <= 0.0) {
        cert.verdict = Verdict::Refuted;
        cert.detail = "K <= 0";
        return cert;
    }
    if (t_max <= 0.0) t_max = default_t_max(tf);
    MixedRelaxation relax{tf.poles, tf.zeros};
    for (double t : sample_grid(t_max, n_samples)) {
        double g = relax.g(t);
        if (g < -kSampleTol) {
            cert.verdict = Verdict::Refuted;
            cert.witness_time = t;
            cert.detail = "g(t*) < 0";
            return cert;
        }
    }
    cert.verdict = Verdict::Certified;  // modulo sampling
    return cert;
}

namespace {

// --- real-root isolation machinery for check_exact_polynomial ---

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }

Polynomial normalize(const Polynomial& p) {
    double m = 0.0;
    for (double c : p.coeffs()) m = std::max(m, std::abs(c));
    if (m == 0.0) return p;
    return p * (1.0 / m);
}

bool negligible(const Polynomial& p, double tol = 1e-9) {
    for (double c : p.coeffs())
        if (std::abs(c) > tol) return false;
    return true;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    a = normalize(a);
    b = normalize(b);
    while (!negligible(b)) {
        Polynomial r = normalize(poly_mod(a, b));
        a = b;
        b = negligible(r) ? Polynomial() : r;
    }
    return a;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain{p, p.derivative()};
    while (chain.back().degree() > 0) {
        Polynomial r = poly_mod(chain[chain.size() - 2], chain.back()) * -1.0;
        if (negligible(normalize(r), 1e-12)) break;
        chain.push_back(r);
    }
    return chain;
}

int sign_changes(const std::vector<Polynomial>& chain, double x) {
    int changes = 0, prev = 0;
    for (const Polynomial& q : chain) {
        double v = q(x);
        int s = (v > 0.0) - (v < 0.0);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// Roots of the square-free polynomial in (a, b], isolated by Sturm bisection.
void isolate_roots(const std::vector<Polynomial>& chain, double a, double b, int count,
                   std::vector<double>& out) {
    if (count == 0) return;
    if (b - a < 1e-9) {
        for (int i = 0; i < count; ++i) out.push_back(0.5 * (a + b));
        return;
    }
    double mid = 0.5 * (a + b);
    int left = sign_changes(chain, a) - sign_changes(chain, mid);
    isolate_roots(chain, a, mid, left, out);
    isolate_roots(chain, mid, b, count - left, out);
}

}  // namespace

LcmCertificate check_exact_polynomial(const RationalTF& tf, double gamma) {
    if (gamma <= 0.0) throw std::domain_error("check_exact_polynomial: gamma must be positive");
    if (!tf.real_spectrum())
        throw std::domain_error(
            "check_exact_polynomial: non-commensurable (complex) spectrum; use check_exact_sampled");
    auto exponent = [gamma](double value) {
        double e = -value / gamma;
        double r = std::round(e);
        if (r < -0.5 || std::abs(e - r) > 1e-9)
            throw std::domain_error(
                "check_exact_polynomial: spectrum not commensurable with gamma; use check_exact_sampled");
        return static_cast<int>(r);
    };
    std::vector<int> ep, ez;
    for (const Complex& p : tf.poles) ep.push_back(exponent(p.real()));
    for (const Complex& z : tf.zeros) ez.push_back(exponent(z.real()));

    LcmCertificate cert;
    cert.method = CertMethod::ExactPolynomial;
    if (tf.gain <= 0.0) {
        cert.verdict = Verdict::Refuted;
        cert.detail = "K <= 0";
        return cert;
    }

    int emax = 0;
    for (int e : ep) emax = std::max(emax, e);
    for (int e : ez) emax = std::max(emax, e);
    // P(x) = sum x^(emax - ep_i) - sum x^(emax - ez_j), nonneg on [1, inf)
    // iff g(t) >= 0 on [0, inf) after the x = exp(gamma t) substitution.
    std::vector<double> coeffs(static_cast<std::size_t>(emax) + 1, 0.0);
    for (int e : ep) coeffs[static_cast<std::size_t>(e)] += 1.0;
    for (int e : ez) coeffs[static_cast<std::size_t>(e)] -= 1.0;
    Polynomial P(coeffs);
    if (P.is_zero()) {
        cert.verdict = Verdict::Certified;
        return cert;
    }
    if (P(1.0) < -0.5) {  // integer-valued: P(1) = n - m
        cert.verdict = Verdict::Refuted;
        cert.witness_time = 1.0;
        cert.detail = "P(1) < 0";
        return cert;
    }

    Polynomial g = poly_gcd(P, P.derivative());
    Polynomial squarefree = g.degree() > 0 ? P.divmod(g).first : P;
    std::vector<Polynomial> chain = sturm_chain(squarefree);
    double bound = 1.0;
    for (double c : squarefree.coeffs()) bound = std::max(bound, std::abs(c / squarefree.leading()));
    bound = 1.0 + bound;

    std::vector<double> roots;
    int count = sign_changes(chain, 1.0) - sign_changes(chain, bound);
    isolate_roots(chain, 1.0, bound, count, roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-8; }),
                roots.end());

    // Sample the sign of P between consecutive isolated roots and past the last.
    std::vector<double> probes;
    double prev = 1.0;
    for (double r : roots) {
        if (r - prev > 1e-7) probes.push_back(0.5 * (prev + r));
        prev = r;
    }
    probes.push_back(prev + 1.0);
    for (double x : probes) {
        if (P(x) < 0.0) {
            cert.verdict = Verdict::Refuted;
            cert.witness_time = x;
            cert.detail = "P changes sign on [1, inf)";
            return cert;
        }
    }
    cert.verdict = Verdict::Certified;
    return cert;
}

namespace {

// Shared construction; `strict` demands delta > -min Re, otherwise the
// boundary delta = -min Re is admitted and degenerate entries clamp to 0.
ShiftedSpectrum build_shifted_spectrum_impl(const RationalTF& tf, int mu, double delta,
                                            bool strict) {
    if (mu < 1) throw std::domain_error("build_shifted_spectrum: mu must be a positive integer");
    if (!tf.conjugate_closed())
        throw std::domain_error("build_shifted_spectrum: spectrum not conjugate-closed");
    if (strict ? delta <= -min_real_part(tf) : delta < -min_real_part(tf) - kSlack)
        throw std::domain_error("build_shifted_spectrum: delta too small (need delta > -min Re)");

    // Real poles first, then the complex-conjugate ones.
    std::vector<Complex> ordered;
    for (const Complex& p : tf.poles)
        if (std::abs(p.imag()) <= kRealTol) ordered.push_back(Complex(p.real(), 0.0));
    int n_r = static_cast<int>(ordered.size());
    for (const Complex& p : tf.poles)
        if (std::abs(p.imag()) > kRealTol) ordered.push_back(p);

    ShiftedSpectrum s;
    s.mu = mu;
    s.delta = delta;
    s.n_r = n_r;
    int n = tf.n(), m = tf.m();
    s.w.assign(static_cast<std::size_t>(n + m), 0.0);
    s.v.assign(static_cast<std::size_t>(n + m), 0.0);
    s.theta.assign(static_cast<std::size_t>(n), 0.0);
    s.phi.assign(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < n; ++i) {
        Complex shifted = ordered[static_cast<std::size_t>(i)] + delta;
        if (i < n_r) {
            s.w[static_cast<std::size_t>(i)] = std::pow(std::max(0.0, shifted.real()), mu);
            s.theta[static_cast<std::size_t>(i)] = 0.0;
        } else {
            s.v[static_cast<std::size_t>(i)] = std::pow(std::abs(shifted), mu);
            s.theta[static_cast<std::size_t>(i)] = std::arg(shifted);
        }
    }
    for (int j = 0; j < m; ++j) {
        Complex shifted = tf.zeros[static_cast<std::size_t>(j)] + delta;
        s.v[static_cast<std::size_t>(n + j)] = std::pow(std::abs(shifted), mu);
        s.phi[static_cast<std::size_t>(j)] = std::arg(shifted);
    }
    return s;
}

}  // namespace

ShiftedSpectrum build_shifted_spectrum(const RationalTF& tf, int mu, double delta) {
    return build_shifted_spectrum_impl(tf, mu, delta, /*strict=*/true);
}

LcmCertificate certify_theorem1(const RationalTF& tf, int mu, double delta) {
    if (mu < 1) throw std::domain_error("certify_theorem1: mu must be a positive integer");
    if (!tf.real_spectrum() || tf.m() != tf.n())
        throw std::domain_error("certify_theorem1: requires a real equal-degree spectrum; use certify_corollary1");
    LcmCertificate cert;
    cert.method = CertMethod::Theorem1;
    cert.mu = mu;
    cert.delta = delta;
    if (tf.gain <= 0.0) {
        cert.verdict = Verdict::Refuted;
        cert.detail = "K <= 0";
        return cert;
    }
    // delta = -min Re is admitted: the shifted value degenerates to 0, which
    // the majorization argument tolerates on the closed half-line.
    if (delta < -min_real_part(tf) - kSlack)
        throw std::domain_error("certify_theorem1: delta too small (need delta >= -min Re)");

    std::vector<double> sp, sz;
    for (const Complex& p : tf.poles) sp.push_back(std::pow(std::max(0.0, p.real() + delta), mu));
    for (const Complex& z : tf.zeros) sz.push_back(std::pow(std::max(0.0, z.real() + delta), mu));
    int bad = first_majorization_violation(sp, sz, kSlack);
    if (bad >= 0) {
        cert.verdict = Verdict::Inconclusive;
        cert.detail = "majorization prefix " + std::to_string(bad + 1) + " fails";
        return cert;
    }
    for (int k = 1; k < mu; ++k) {
        double lhs = 0.0, rhs = 0.0;
        for (const Complex& p : tf.poles) lhs += std::pow(std::max(0.0, p.real() + delta), k);
        for (const Complex& z : tf.zeros) rhs += std::pow(std::max(0.0, z.real() + delta), k);
        if (lhs < rhs - kSlack) {
            cert.verdict = Verdict::Inconclusive;
            cert.detail = "power-sum inequality k=" + std::to_string(k) + " fails";
            return cert;
        }
    }
    cert.verdict = Verdict::Certified;
    return cert;
}

LcmCertificate certify_corollary1(const RationalTF& tf, int mu, double delta) {
    if (tf.m() > tf.n()) throw std::domain_error("certify_corollary1: requires m <= n");
    LcmCertificate cert;
    cert.method = CertMethod::Corollary1;
    cert.mu = mu;
    cert.delta = delta;
    if (tf.gain <= 0.0) {
        cert.verdict = Verdict::Refuted;
        cert.detail = "K <= 0";
        return cert;
    }
    // delta = -min Re is admitted, matching the real-spectrum certificate.
    ShiftedSpectrum s = build_shifted_spectrum_impl(tf, mu, delta, /*strict=*/false);
    int bad = first_majorization_violation(s.w, s.v, kSlack);
    if (bad >= 0) {
        cert.verdict = Verdict::Inconclusive;
        cert.detail = "majorization prefix " + std::to_string(bad + 1) + " fails";
        return cert;
    }
    int n = tf.n(), m = tf.m();
    for (int k = 1; k < mu; ++k) {
        double lhs = 0.0, rhs = 0.0;
        for (int i = 0; i < n + m; ++i) lhs += std::pow(s.w[static_cast<std::size_t>(i)], double(k) / mu);
        for (int i = 0; i < n; ++i)
            lhs += std::pow(s.v[static_cast<std::size_t>(i)], double(k) / mu) *
                   std::cos(s.theta[static_cast<std::size_t>(i)] * k);
        for (int i = 0; i < m; ++i)
            rhs += std::pow(s.v[static_cast<std::size_t>(n + i)], double(k) / mu) *
                   std::cos(s.phi[static_cast<std::size_t>(i)] * k);
        if (lhs < rhs - kSlack) {
            cert.verdict = Verdict::Inconclusive;
            cert.detail = "cosine power-sum inequality k=" + std::to_string(k) + " fails";
            return cert;
        }
    }
    cert.verdict = Verdict::Certified;
    return cert;
}

double auto_delta(const RationalTF& tf, int mu) {
    double delta = 1.0 + std::max(0.0, -min_real_part(tf));
    if (mu > 1) {
        double bound = std::numbers::pi / (2.0 * (mu - 1));
        auto widen = [&](const Complex& value) {
            if (std::abs(value.imag()) <= kRealTol) return;
            if (bound >= std::numbers::pi / 2.0 - 1e-12) return;  // any Re > 0 suffices
            double need = std::abs(value.imag()) / std::tan(bound) - value.real();
            delta = std::max(delta, need + 1e-6);
        };
        for (const Complex& p : tf.poles) widen(p);
        for (const Complex& z : tf.zeros) widen(z);
    }
    return delta;
}

LcmCertificate certify(const RationalTF& tf, const CertifyOptions& opts) {
    double delta = opts.delta.value_or(auto_delta(tf, opts.mu));
    LcmCertificate last;
    for (Strategy s : opts.strategy) {
        switch (s) {
            case Strategy::Necessary: {
                last = check_necessary(tf);
                if (last.verdict == Verdict::Refuted) return last;
                break;
            }
            case Strategy::Theorem1: {
                if (!tf.real_spectrum() || tf.m() != tf.n()) break;
                last = certify_theorem1(tf, opts.mu, delta);
                if (last.verdict != Verdict::Inconclusive) return last;
                break;
            }
            case Strategy::Corollary1: {
                if (tf.m() > tf.n()) break;
                try {
                    last = certify_corollary1(tf, opts.mu, delta);
                } catch (const std::domain_error&) {
                    break;
                }
                if (last.verdict != Verdict::Inconclusive) return last;
                break;
            }
            case Strategy::ExactPolynomial: {
                try {
                    last = check_exact_polynomial(tf, opts.gamma);
                } catch (const std::domain_error&) {
                    break;
                }
                return last;
            }
            case Strategy::ExactSampled: {
                return check_exact_sampled(tf, opts.t_max, opts.n_samples);
            }
        }
    }
    return last;
}

}  // namespace lcm
