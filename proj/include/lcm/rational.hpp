#ifndef LCM_RATIONAL_HPP
#define LCM_RATIONAL_HPP

#include <vector>

#include "lcm/polynomial.hpp"

namespace lcm {

/// Zero-pole-gain form of a rational transfer function
///   H(s) = K * prod(s - z_i) / prod(s - p_i).
/// Non-real zeros and poles must come in conjugate pairs.
struct RationalTF {
    double gain = 1.0;
    std::vector<Complex> zeros;
    std::vector<Complex> poles;

    int n() const { return static_cast<int>(poles.size()); }
    int m() const { return static_cast<int>(zeros.size()); }
    bool conjugate_closed(double tol = 1e-9) const;
    /// Largest pole real part.
    double pole_abscissa() const;
    bool real_spectrum(double tol = 1e-9) const;

    static RationalTF from_coeffs(const Polynomial& num, const Polynomial& den);
};

/// One term residue / (s - pole)^multiplicity_index.
struct PfeTerm {
    Complex pole;
    int multiplicity_index = 1;
    Complex residue;
};

struct PartialFractionExpansion {
    std::vector<PfeTerm> terms;
    double direct_term = 0.0;  // nonzero only when n == m

    Complex evaluate(Complex s) const;
    /// Inverse Laplace transform of the strictly proper part at time t,
    /// Sum residue * t^(k-1)/(k-1)! * exp(pole t). The Dirac direct term is
    /// not included.
    double time_response(double t, double imag_tol = 1e-9) const;
};

/// Expanded coefficient form. den is monic of degree n.
std::pair<Polynomial, Polynomial> poles_zeros_to_coeffs(const RationalTF& tf);

/// Partial fractions of a proper (n >= m) transfer function. Poles within
/// cluster_tol of each other are merged into one repeated pole.
PartialFractionExpansion partial_fractions(const RationalTF& tf, double cluster_tol = 1e-9);

/// Impulse response of a strictly proper transfer function at t >= 0.
double impulse_response(const RationalTF& tf, double t);

/// Analytic step response samples on the grid (from the expansion of H(s)/s).
std::vector<double> step_response(const RationalTF& tf, const std::vector<double>& grid);

/// |H(i w)| from the zero-pole form (product of distances). Returns +inf when
/// w sits on an imaginary-axis pole.
double frequency_magnitude(const RationalTF& tf, double omega);

}  // namespace lcm

#endif
