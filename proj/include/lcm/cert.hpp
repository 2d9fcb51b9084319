#ifndef LCM_CERT_HPP
#define LCM_CERT_HPP

#include <optional>
#include <string>
#include <vector>

#include "lcm/rational.hpp"

namespace lcm {

enum class Verdict { Certified, Refuted, Inconclusive };

enum class CertMethod { ExactSampled, ExactPolynomial, NecessaryFail, Theorem1, Corollary1 };

std::string to_string(Verdict v);
std::string to_string(CertMethod m);

/// Outcome of a certification attempt.
struct LcmCertificate {
    Verdict verdict = Verdict::Inconclusive;
    CertMethod method = CertMethod::NecessaryFail;
    std::optional<int> mu;
    std::optional<double> delta;
    /// Violation time t* (sampled refutation) or witness interval endpoint
    /// (polynomial refutation).
    std::optional<double> witness_time;
    /// Failed necessary-condition label or failed-inequality index.
    std::string detail;
};

/// The (w, v, theta, phi) transform of a shifted spectrum: real-pole
/// magnitudes in w, complex-pole and zero magnitudes in v, angles alongside.
struct ShiftedSpectrum {
    int mu = 1;
    double delta = 0.0;
    int n_r = 0;                ///< number of real poles (leading entries)
    std::vector<double> theta;  ///< pole angles, length n, zeros first n_r
    std::vector<double> phi;    ///< zero angles, length m
    std::vector<double> w;      ///< length n+m
    std::vector<double> v;      ///< length n+m
};

/// G(s) = sum 1/(s-p_i) - sum 1/(s-z_i); g(t) = sum exp(p t) - sum exp(z t).
struct MixedRelaxation {
    std::vector<Complex> poles;
    std::vector<Complex> zeros;
    /// g(t), evaluated directly from the exponential sums.
    double g(double t) const;
};

/// Mixed uniform + log-spaced sample grid on [0, t_max], t = 0 included.
std::vector<double> sample_grid(double t_max, int n_samples);

/// Default horizon: 50 divided by the magnitude of the slowest (largest real
/// part) spectrum entry.
double default_t_max(const RationalTF& tf);

/// Necessary conditions: n >= m, dominant pole right of dominant zero,
/// sum p >= sum z when n = m, K > 0. Exact: a failure refutes LCM.
LcmCertificate check_necessary(const RationalTF& tf, double tol = 1e-12);

/// Brute-force oracle on g(t): sound for refutation, sampled for acceptance.
LcmCertificate check_exact_sampled(const RationalTF& tf, double t_max = 0.0, int n_samples = 20000);

/// Exact decision for commensurable real spectra via the polynomial
/// P(x) >= 0 on [1, inf), decided by Sturm real-root isolation.
LcmCertificate check_exact_polynomial(const RationalTF& tf, double gamma);

/// The shift-and-power spectrum transform. Requires delta strictly above the spectrum
/// bound -min Re.
ShiftedSpectrum build_shifted_spectrum(const RationalTF& tf, int mu, double delta);

/// Sufficient certificate for real equal-degree spectra: shifted-power weak
/// majorization plus the power-sum inequalities for k = 1..mu-1.
LcmCertificate certify_theorem1(const RationalTF& tf, int mu, double delta);

/// General sufficient certificate (m <= n, complex spectra allowed):
/// w >_w v plus the cosine-weighted power-sum inequalities for k = 1..mu-1.
LcmCertificate certify_corollary1(const RationalTF& tf, int mu, double delta);

/// Auto rule when the caller omits delta: 1 + max(0, -min Re), widened until
/// the shifted angles clear the mu-dependent bound.
double auto_delta(const RationalTF& tf, int mu);

enum class Strategy { Necessary, Theorem1, Corollary1, ExactPolynomial, ExactSampled };

struct CertifyOptions {
    std::vector<Strategy> strategy{Strategy::Necessary, Strategy::Theorem1, Strategy::Corollary1,
                                   Strategy::ExactSampled};
    int mu = 1;
    std::optional<double> delta;  ///< auto rule when absent
    double gamma = 1.0;           ///< ExactPolynomial commensurability unit
    double t_max = 0.0;           ///< 0 = default rule
    int n_samples = 20000;
};

/// Pipeline: necessary screen, then sufficient certificates in order, then
/// the exact fallback. Returns the first decisive verdict and which method
/// produced it.
LcmCertificate certify(const RationalTF& tf, const CertifyOptions& opts = {});

}  // namespace lcm

#endif
