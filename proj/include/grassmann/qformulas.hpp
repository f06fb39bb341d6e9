#pragma once

#include "grassmann/checkered.hpp"
#include "grassmann/polynomial.hpp"

namespace grassmann {

// The parity split driving every closed form: (k,n) of type (2j,2m),
// (2j,2m+1) or (2j+1,2m+1) is case one; (2j+1,2m) is case two.
struct ParityCase {
    bool case_one = true;
    int m = 0;
    int j = 0;
};

ParityCase classify_parity(const GrassmannShape& shape);

// [n k]_q by iterated multiplication and exact division of q-integers; each
// intermediate quotient is itself a Gaussian binomial, so every division step
// must be exact.
IntPolynomial gaussian_binomial(int n, int k);

// Signed cell sum (-1)^{k(n-k)} sum_w (-1)^{|w|} q^{weight(w)} with the weight
// taken from the requested fill.
IntPolynomial p_sum(const GrassmannShape& shape, FillVariant variant,
                    int capacity = default_capacity);

// Closed form: [m j]_{q^2} in case one, (q^m - 1)[m-1 j]_{q^2} in case two.
IntPolynomial p_closed(const GrassmannShape& shape);

// q^s p(q) for odd n, with s = j for even k and s = m - j for odd k.  No
// closed form exists for even n; that case throws std::domain_error and the
// cell sum is the only route.
IntPolynomial p_star_closed(const GrassmannShape& shape);

// Betti-number generating polynomial: [m j]_{t^4} in case one,
// (t^{2m-1} + 1)[m-1 j]_{t^4} in case two.
IntPolynomial poincare_polynomial(const GrassmannShape& shape);

// P(-1); cross-checked against the closed values C(m,j) / 0.
long long euler_characteristic(const GrassmannShape& shape);

long long binomial(int n, int k);

// Point count q^r p(q) over the field with q elements (q a prime power with a
// square root of -1; the polynomial itself is evaluated as stated).
struct PointCount {
    GrassmannShape shape;
    IntPolynomial p;        // the reduced polynomial p(q)
    int shift_exponent;     // r = k(n-k) - deg p

    IntPolynomial full() const { return p.shifted(shift_exponent); }
    BigInt evaluate(const BigInt& q) const { return full().evaluate(q); }
};

PointCount fq_point_count(const GrassmannShape& shape);

// q^D p(1/q) == (-1)^{k(n-k)} p(q) with D = deg p.
bool reciprocity_check(const GrassmannShape& shape);

}  // namespace grassmann
