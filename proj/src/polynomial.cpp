#include "grassmann/polynomial.hpp"

#include <stdexcept>

namespace grassmann {

IntPolynomial::IntPolynomial(std::vector<long long> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(long long value) { return IntPolynomial({value}); }

IntPolynomial IntPolynomial::monomial(int exponent, long long coefficient) {
    if (exponent < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
    std::vector<long long> c(static_cast<size_t>(exponent) + 1, 0);
    c.back() = coefficient;
    return IntPolynomial(std::move(c));
}

long long IntPolynomial::coefficient(int exponent) const {
    if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(exponent)];
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<long long> c = coeffs_;
    for (long long& v : c) v = -v;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    std::vector<long long> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
    return *this + (-other);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) return IntPolynomial();
    std::vector<long long> c(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
    return value;
}

IntPolynomial IntPolynomial::substitute_power(int m) const {
    if (m < 1) throw std::invalid_argument("substitute_power requires a positive exponent");
    if (is_zero()) return IntPolynomial();
    std::vector<long long> c((coeffs_.size() - 1) * static_cast<size_t>(m) + 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<size_t>(m)] = coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reversed(int d) const {
    if (d < degree())
        throw std::out_of_range("reversal degree " + std::to_string(d) +
                                " below the polynomial degree " + std::to_string(degree()));
    std::vector<long long> c(static_cast<size_t>(d) + 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<size_t>(d) - i] = coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(int shift) const {
    if (shift < 0) throw std::invalid_argument("shift must be nonnegative");
    if (is_zero()) return IntPolynomial();
    std::vector<long long> c(coeffs_.size() + static_cast<size_t>(shift), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<size_t>(shift)] = coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (is_zero()) return IntPolynomial();
    std::vector<long long> remainder = coeffs_;
    const int dd = divisor.degree();
    const long long lead = divisor.coeffs_.back();
    if (degree() < dd) throw std::domain_error("inexact polynomial division");
    std::vector<long long> quotient(coeffs_.size() - static_cast<size_t>(dd), 0);
    for (int i = static_cast<int>(remainder.size()) - 1; i >= dd; --i) {
        long long top = remainder[static_cast<size_t>(i)];
        if (top == 0) continue;
        if (top % lead != 0) throw std::domain_error("inexact polynomial division");
        long long factor = top / lead;
        quotient[static_cast<size_t>(i - dd)] = factor;
        for (int j = 0; j <= dd; ++j)
            remainder[static_cast<size_t>(i - dd + j)] -= factor * divisor.coeffs_[static_cast<size_t>(j)];
    }
    for (long long v : remainder)
        if (v != 0) throw std::domain_error("inexact polynomial division");
    return IntPolynomial(std::move(quotient));
}

std::string IntPolynomial::to_pretty_string(const std::string& variable) const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = 0; e < static_cast<int>(coeffs_.size()); ++e) {
        long long c = coeffs_[static_cast<size_t>(e)];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        long long mag = c < 0 ? -c : c;
        if (mag != 1 || e == 0) out += std::to_string(mag);
        if (e > 0) {
            out += variable;
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

IntPolynomial q_integer(int m) {
    if (m < 0) throw std::invalid_argument("q_integer requires a nonnegative argument");
    return IntPolynomial(std::vector<long long>(static_cast<size_t>(m), 1));
}

}  // namespace grassmann
