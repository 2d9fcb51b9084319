#include "lcm/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcm {

namespace {
constexpr double kSampleTol = 1e-10;

// Search the sampled impulse response for a concrete negativity witness.
std::optional<double> find_witness(const RationalTF& tf, double t_max, int n_samples) {
    if (tf.n() <= tf.m()) return std::nullopt;
    PartialFractionExpansion pfe = partial_fractions(tf);
    double worst = 0.0;
    std::optional<double> at;
    for (double t : sample_grid(t_max, n_samples)) {
        double h = pfe.time_response(t);
        if (h < worst) {
            worst = h;
            at = t;
        }
    }
    return at;
}
}  // namespace

std::string to_string(PosVerdict v) {
    switch (v) {
        case PosVerdict::Positive: return "Positive";
        case PosVerdict::NotPositive: return "NotPositive";
        default: return "PositiveSampled";
    }
}

ExPosVerdict expos_order1(const RationalTF& tf) {
    if (tf.n() != 1) throw std::domain_error("expos_order1: requires n = 1");
    auto [num, den] = poles_zeros_to_coeffs(tf);
    double p1 = tf.poles[0].real();
    ExPosVerdict out;
    out.method = "order1";
    if (tf.gain > 0.0 && num(p1) >= 0.0) {
        out.verdict = PosVerdict::Positive;
    } else {
        out.verdict = PosVerdict::NotPositive;
        out.witness_time = find_witness(tf, default_t_max(tf), 20000);
        if (!out.witness_time) out.witness_time = 0.0;  // Dirac-term negativity
    }
    return out;
}

ExPosVerdict expos_order2(const RationalTF& tf) {
    if (tf.n() != 2) throw std::domain_error("expos_order2: requires n = 2");
    for (const Complex& z : tf.zeros)
        for (const Complex& p : tf.poles)
            if (std::abs(z - p) <= 1e-9) throw std::domain_error("expos_order2: zero-pole cancellation");

    ExPosVerdict out;
    out.method = "order2";
    bool positive;
    if (std::abs(tf.poles[0].imag()) > 1e-9 || std::abs(tf.poles[1].imag()) > 1e-9) {
        positive = false;  // complex-conjugate poles oscillate through zero
    } else {
        auto [num, den] = poles_zeros_to_coeffs(tf);
        double p1 = std::max(tf.poles[0].real(), tf.poles[1].real());
        double p2 = std::min(tf.poles[0].real(), tf.poles[1].real());
        Polynomial dnum = num.derivative();
        positive = tf.gain > 0.0 && num(p1) >= 0.0 && dnum(p1) >= 0.0 && num(p1) >= num(p2);
    }
    if (positive) {
        out.verdict = PosVerdict::Positive;
    } else {
        out.verdict = PosVerdict::NotPositive;
        out.witness_time = find_witness(tf, default_t_max(tf), 20000);
        if (!out.witness_time) out.witness_time = 0.0;
    }
    return out;
}

ExPosVerdict expos_oracle(const RationalTF& tf, double t_max, int n_samples) {
    if (tf.n() < tf.m()) throw std::domain_error("expos_oracle: improper transfer function");
    if (t_max <= 0.0) t_max = default_t_max(tf);
    ExPosVerdict out;
    out.method = "oracle";
    PartialFractionExpansion pfe = partial_fractions(tf);
    if (pfe.direct_term < 0.0) {
        out.verdict = PosVerdict::NotPositive;
        out.witness_time = 0.0;  // Dirac term
        return out;
    }
    for (double t : sample_grid(t_max, n_samples)) {
        double h = pfe.time_response(t);
        if (h < -kSampleTol) {
            out.verdict = PosVerdict::NotPositive;
            out.witness_time = t;
            return out;
        }
    }
    out.verdict = PosVerdict::PositiveSampled;
    return out;
}

bool lcm_implies_expos_check(const RationalTF& tf) {
    LcmCertificate cert = certify(tf);
    if (cert.verdict != Verdict::Certified) return true;
    if (tf.n() < tf.m()) return true;
    return expos_oracle(tf).verdict != PosVerdict::NotPositive;
}

}  // namespace lcm
