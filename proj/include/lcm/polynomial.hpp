#ifndef LCM_POLYNOMIAL_HPP
#define LCM_POLYNOMIAL_HPP

#include <complex>
#include <initializer_list>
#include <vector>

namespace lcm {

using Complex = std::complex<double>;

/// Real-coefficient polynomial, coefficients stored in descending powers.
/// The zero polynomial is the single coefficient {0}; otherwise the leading
/// coefficient is nonzero. No tolerances are applied internally.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    Polynomial(std::initializer_list<double> c) : coeffs_(c) { canonicalize(); }
    explicit Polynomial(std::vector<double> c) : coeffs_(std::move(c)) { canonicalize(); }

    static Polynomial constant(double c) { return Polynomial{c}; }
    /// Monic polynomial with the given roots. Non-real roots must appear in
    /// conjugate pairs; the imaginary residue of each coefficient must stay
    /// below imag_tol or a std::domain_error is thrown.
    static Polynomial from_roots(const std::vector<Complex>& roots, double imag_tol = 1e-10);

    const std::vector<double>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
    double leading() const { return coeffs_.front(); }
    /// Coefficient of s^k (0 for k above the degree).
    double coeff_of_power(int k) const;

    double operator()(double s) const;
    Complex operator()(Complex s) const;

    Polynomial derivative() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(double k) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    /// Quotient and remainder of polynomial division. Divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    /// All complex roots via the companion-matrix eigenvalues.
    std::vector<Complex> roots() const;

private:
    void canonicalize();
    std::vector<double> coeffs_;
};

inline Polynomial operator*(double k, const Polynomial& p) { return p * k; }

}  // namespace lcm

#endif
