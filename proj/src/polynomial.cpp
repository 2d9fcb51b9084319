#include "lcm/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace lcm {

void Polynomial::canonicalize() {
    if (coeffs_.empty()) {
        coeffs_ = {0.0};
        return;
    }
    std::size_t lead = 0;
    while (lead + 1 < coeffs_.size() && coeffs_[lead] == 0.0) ++lead;
    if (lead > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots, double imag_tol) {
    std::vector<Complex> c{Complex(1.0, 0.0)};
    for (const Complex& r : roots) {
        std::vector<Complex> next(c.size() + 1, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= r * c[i];
        }
        c = std::move(next);
    }
    std::vector<double> re(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        double scale = std::max(1.0, std::abs(c[i]));
        if (std::abs(c[i].imag()) > imag_tol * scale)
            throw std::domain_error("from_roots: roots are not conjugate-closed");
        re[i] = c[i].real();
    }
    return Polynomial(std::move(re));
}

double Polynomial::coeff_of_power(int k) const {
    int idx = degree() - k;
    if (idx < 0 || k < 0) return 0.0;
    return coeffs_[static_cast<std::size_t>(idx)];
}

double Polynomial::operator()(double s) const {
    double acc = 0.0;
    for (double c : coeffs_) acc = acc * s + c;
    return acc;
}

Complex Polynomial::operator()(Complex s) const {
    Complex acc(0.0, 0.0);
    for (double c : coeffs_) acc = acc * s + c;
    return acc;
}

Polynomial Polynomial::derivative() const {
    int n = degree();
    if (n <= 0) return Polynomial();
    std::vector<double> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)] * (n - i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    std::vector<double> r(n, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[n - coeffs_.size() + i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[n - o.coeffs_.size() + i] += o.coeffs_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * -1.0; }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<double> r(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(double k) const {
    std::vector<double> r = coeffs_;
    for (double& c : r) c *= k;
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    if (degree() < divisor.degree()) return {Polynomial(), *this};
    std::vector<double> rem = coeffs_;
    std::size_t qlen = rem.size() - divisor.coeffs_.size() + 1;
    std::vector<double> quot(qlen, 0.0);
    for (std::size_t i = 0; i < qlen; ++i) {
        double q = rem[i] / divisor.coeffs_[0];
        quot[i] = q;
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) rem[i + j] -= q * divisor.coeffs_[j];
    }
    std::vector<double> tail(rem.begin() + static_cast<long>(qlen), rem.end());
    return {Polynomial(std::move(quot)), Polynomial(std::move(tail))};
}

std::vector<Complex> Polynomial::roots() const {
    int n = degree();
    if (n <= 0) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) companion(0, i) = -coeffs_[static_cast<std::size_t>(i + 1)] / coeffs_[0];
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

}  // namespace lcm
