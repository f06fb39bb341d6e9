#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grassmann {

using BigInt = boost::multiprecision::cpp_int;

// Single-variable polynomial with exact integer coefficients; coefficient i
// belongs to exponent i and trailing zeros are trimmed, so the zero polynomial
// has an empty coefficient list.  Coefficients stay well inside 64 bits for
// every shape within capacity; evaluation returns arbitrary precision since
// values like q^{k(n-k)} do not.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<long long> coefficients);

    static IntPolynomial constant(long long value);
    static IntPolynomial monomial(int exponent, long long coefficient = 1);

    const std::vector<long long>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    long long coefficient(int exponent) const;

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator-(const IntPolynomial& other) const;
    IntPolynomial operator*(const IntPolynomial& other) const;
    bool operator==(const IntPolynomial&) const = default;

    BigInt evaluate(const BigInt& x) const;

    // q -> q^m; m must be positive.
    IntPolynomial substitute_power(int m) const;

    // q^d * p(1/q); requires d >= degree.
    IntPolynomial reversed(int d) const;

    // Multiplication by q^shift.
    IntPolynomial shifted(int shift) const;

    // Exact quotient; throws when the division leaves a remainder.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    std::string to_pretty_string(const std::string& variable) const;

  private:
    void trim();
    std::vector<long long> coeffs_;
};

// 1 + q + ... + q^{m-1}.
IntPolynomial q_integer(int m);

}  // namespace grassmann
