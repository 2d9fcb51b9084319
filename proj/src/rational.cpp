#include "lcm/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lcm {

namespace {

// Pair each non-real value with its conjugate partner; returns false if some
// value has no partner within tol.
bool match_conjugates(const std::vector<Complex>& vals, double tol) {
    std::vector<bool> used(vals.size(), false);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (used[i] || std::abs(vals[i].imag()) <= tol) continue;
        bool found = false;
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(vals[j] - std::conj(vals[i])) <= tol) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// Snap eigenvalue noise: tiny imaginary parts to the real axis and conjugate
// partners to exact symmetry.
std::vector<Complex> symmetrize(std::vector<Complex> vals, double tol) {
    for (Complex& v : vals) {
        double scale = std::max(1.0, std::abs(v));
        if (std::abs(v.imag()) <= tol * scale) v = Complex(v.real(), 0.0);
    }
    std::vector<bool> used(vals.size(), false);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (used[i] || vals[i].imag() == 0.0) continue;
        std::size_t best = i;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < vals.size(); ++j) {
            if (j == i || used[j] || vals[j].imag() == 0.0) continue;
            double d = std::abs(vals[j] - std::conj(vals[i]));
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best != i) {
            Complex mean = 0.5 * (vals[i] + std::conj(vals[best]));
            vals[i] = mean;
            vals[best] = std::conj(mean);
            used[i] = used[best] = true;
        }
    }
    return vals;
}

struct PoleCluster {
    Complex center;
    int multiplicity = 0;
};

std::vector<PoleCluster> cluster_poles(const std::vector<Complex>& poles, double tol) {
    std::vector<PoleCluster> clusters;
    for (const Complex& p : poles) {
        bool merged = false;
        for (PoleCluster& c : clusters) {
            if (std::abs(p - c.center) <= tol) {
                c.center = (c.center * static_cast<double>(c.multiplicity) + p) /
                           static_cast<double>(c.multiplicity + 1);
                ++c.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) clusters.push_back({p, 1});
    }
    return clusters;
}

// Ascending Taylor coefficients of prod(u + shift - r) for r in roots.
std::vector<Complex> shifted_product(const std::vector<Complex>& roots, Complex shift) {
    std::vector<Complex> c{Complex(1.0, 0.0)};  // ascending in u
    for (const Complex& r : roots) {
        std::vector<Complex> next(c.size() + 1, Complex(0.0, 0.0));
        Complex a = shift - r;  // factor is (u + a)
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i] * a;
            next[i + 1] += c[i];
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace

bool RationalTF::conjugate_closed(double tol) const {
    return match_conjugates(zeros, tol) && match_conjugates(poles, tol);
}

double RationalTF::pole_abscissa() const {
    double a = -std::numeric_limits<double>::infinity();
    for (const Complex& p : poles) a = std::max(a, p.real());
    return a;
}

bool RationalTF::real_spectrum(double tol) const {
    auto is_real = [tol](const Complex& v) { return std::abs(v.imag()) <= tol; };
    return std::all_of(zeros.begin(), zeros.end(), is_real) &&
           std::all_of(poles.begin(), poles.end(), is_real);
}

RationalTF RationalTF::from_coeffs(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("from_coeffs: zero denominator");
    if (num.is_zero()) throw std::domain_error("from_coeffs: zero numerator");
    RationalTF tf;
    tf.gain = num.leading() / den.leading();
    tf.zeros = symmetrize(num.roots(), 1e-9);
    tf.poles = symmetrize(den.roots(), 1e-9);
    return tf;
}

std::pair<Polynomial, Polynomial> poles_zeros_to_coeffs(const RationalTF& tf) {
    if (!tf.conjugate_closed()) throw std::domain_error("poles_zeros_to_coeffs: spectrum not conjugate-closed");
    Polynomial num = Polynomial::from_roots(tf.zeros, 1e-12) * tf.gain;
    Polynomial den = Polynomial::from_roots(tf.poles, 1e-12);
    return {num, den};
}

Complex PartialFractionExpansion::evaluate(Complex s) const {
    Complex acc(direct_term, 0.0);
    for (const PfeTerm& t : terms) acc += t.residue / std::pow(s - t.pole, t.multiplicity_index);
    return acc;
}

double PartialFractionExpansion::time_response(double t, double imag_tol) const {
    Complex acc(0.0, 0.0);
    for (const PfeTerm& term : terms) {
        double fact = 1.0;
        for (int i = 2; i < term.multiplicity_index; ++i) fact *= i;
        double tp = std::pow(t, term.multiplicity_index - 1);
        acc += term.residue * (tp / fact) * std::exp(term.pole * t);
    }
    double scale = std::max(1.0, std::abs(acc));
    if (std::abs(acc.imag()) > imag_tol * scale)
        throw std::domain_error("time_response: non-real value, expansion not conjugate-symmetric");
    return acc.real();
}

PartialFractionExpansion partial_fractions(const RationalTF& tf, double cluster_tol) {
    if (tf.n() < tf.m()) throw std::domain_error("partial_fractions: improper transfer function (n < m)");
    if (!tf.conjugate_closed()) throw std::domain_error("partial_fractions: spectrum not conjugate-closed");

    PartialFractionExpansion out;
    if (tf.n() == tf.m()) out.direct_term = tf.gain;

    std::vector<PoleCluster> clusters = cluster_poles(tf.poles, cluster_tol);
    for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
        const PoleCluster& c = clusters[ci];
        // Taylor series of K * Z(s) / prod_{other clusters}(s - p)^mult around
        // the cluster pole, truncated at order multiplicity-1.
        std::vector<Complex> num = shifted_product(tf.zeros, c.center);
        for (Complex& v : num) v *= tf.gain;
        std::vector<Complex> other_poles;
        for (std::size_t cj = 0; cj < clusters.size(); ++cj) {
            if (cj == ci) continue;
            for (int k = 0; k < clusters[cj].multiplicity; ++k) other_poles.push_back(clusters[cj].center);
        }
        std::vector<Complex> den = shifted_product(other_poles, c.center);
        int q = c.multiplicity;
        std::vector<Complex> series(static_cast<std::size_t>(q), Complex(0.0, 0.0));
        for (int k = 0; k < q; ++k) {
            Complex nk = k < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(k)] : Complex(0.0, 0.0);
            for (int j = 1; j <= k; ++j) {
                Complex dj = j < static_cast<int>(den.size()) ? den[static_cast<std::size_t>(j)] : Complex(0.0, 0.0);
                nk -= dj * series[static_cast<std::size_t>(k - j)];
            }
            series[static_cast<std::size_t>(k)] = nk / den[0];
        }
        for (int k = 0; k < q; ++k)
            out.terms.push_back({c.center, q - k, series[static_cast<std::size_t>(k)]});
    }

    // Enforce exact conjugate symmetry between mirrored pole terms.
    for (PfeTerm& a : out.terms) {
        if (a.pole.imag() <= 0.0) continue;
        for (PfeTerm& b : out.terms) {
            if (b.pole.imag() < 0.0 && b.multiplicity_index == a.multiplicity_index &&
                std::abs(b.pole - std::conj(a.pole)) <= cluster_tol) {
                b.pole = std::conj(a.pole);
                b.residue = std::conj(a.residue);
            }
        }
    }
    return out;
}

double impulse_response(const RationalTF& tf, double t) {
    if (tf.n() <= tf.m()) throw std::domain_error("impulse_response: requires a strictly proper transfer function");
    if (t < 0.0) throw std::domain_error("impulse_response: t must be non-negative");
    return partial_fractions(tf).time_response(t);
}

std::vector<double> step_response(const RationalTF& tf, const std::vector<double>& grid) {
    for (const Complex& p : tf.poles)
        if (std::abs(p) <= 1e-9) throw std::domain_error("step_response: pole at the origin");
    RationalTF integrated = tf;
    integrated.poles.push_back(Complex(0.0, 0.0));
    PartialFractionExpansion pfe = partial_fractions(integrated);
    std::vector<double> out;
    out.reserve(grid.size());
    for (double t : grid) out.push_back(pfe.time_response(t));
    return out;
}

double frequency_magnitude(const RationalTF& tf, double omega) {
    Complex s(0.0, omega);
    double mag = std::abs(tf.gain);
    for (const Complex& z : tf.zeros) mag *= std::abs(s - z);
    for (const Complex& p : tf.poles) {
        double d = std::abs(s - p);
        if (d < 1e-12) return std::numeric_limits<double>::infinity();
        mag /= d;
    }
    return mag;
}

}  // namespace lcm
