#include "grassmann/qformulas.hpp"

#include <stdexcept>

#include "grassmann/partition.hpp"

namespace grassmann {

ParityCase classify_parity(const GrassmannShape& shape) {
    if (shape.k % 2 == 0) return {true, shape.n / 2, shape.k / 2};
    if (shape.n % 2 == 1) return {true, (shape.n - 1) / 2, (shape.k - 1) / 2};
    return {false, shape.n / 2, (shape.k - 1) / 2};
}

IntPolynomial gaussian_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        throw std::invalid_argument("gaussian_binomial requires 0 <= k <= n");
    IntPolynomial result = IntPolynomial::constant(1);
    for (int i = 1; i <= k; ++i) {
        result = result * q_integer(n - k + i);
        result = result.divide_exact(q_integer(i));  // stays a Gaussian binomial
    }
    return result;
}

IntPolynomial p_sum(const GrassmannShape& shape, FillVariant variant, int capacity) {
    shape.require_within(capacity, "p_sum");
    const int dim = shape.dimension();
    std::vector<long long> coeffs(static_cast<size_t>(dim) + 1, 0);
    int max_exp = 0;
    for (int degree = 0; degree <= dim; ++degree) {
        long long sign = (dim + degree) % 2 == 0 ? 1 : -1;
        for (const Partition& cell : enumerate_cells(shape, degree)) {
            int exp = checkered_weight(cell, shape, variant);
            coeffs[static_cast<size_t>(exp)] += sign;
            max_exp = std::max(max_exp, exp);
        }
    }
    coeffs.resize(static_cast<size_t>(max_exp) + 1);
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial p_closed(const GrassmannShape& shape) {
    ParityCase pc = classify_parity(shape);
    if (pc.case_one) return gaussian_binomial(pc.m, pc.j).substitute_power(2);
    IntPolynomial q_m_minus_1 = IntPolynomial::monomial(pc.m) - IntPolynomial::constant(1);
    return q_m_minus_1 * gaussian_binomial(pc.m - 1, pc.j).substitute_power(2);
}

IntPolynomial p_star_closed(const GrassmannShape& shape) {
    if (shape.n % 2 == 0)
        throw std::domain_error("no closed form for the shifted polynomial when n is even; "
                                "use the cell sum");
    ParityCase pc = classify_parity(shape);
    int s = shape.k % 2 == 0 ? pc.j : pc.m - pc.j;
    return p_closed(shape).shifted(s);
}

IntPolynomial poincare_polynomial(const GrassmannShape& shape) {
    ParityCase pc = classify_parity(shape);
    if (pc.case_one) return gaussian_binomial(pc.m, pc.j).substitute_power(4);
    IntPolynomial factor = IntPolynomial::monomial(2 * pc.m - 1) + IntPolynomial::constant(1);
    return factor * gaussian_binomial(pc.m - 1, pc.j).substitute_power(4);
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

long long euler_characteristic(const GrassmannShape& shape) {
    ParityCase pc = classify_parity(shape);
    BigInt value = poincare_polynomial(shape).evaluate(-1);
    long long expected = pc.case_one ? binomial(pc.m, pc.j) : 0;
    if (value != expected)
        throw falsification_error("Euler characteristic P(-1) disagrees with the closed value "
                                  "for Gr(" +
                                  std::to_string(shape.k) + "," + std::to_string(shape.n) + ")");
    return expected;
}

PointCount fq_point_count(const GrassmannShape& shape) {
    IntPolynomial p = p_closed(shape);
    return PointCount{shape, p, shape.dimension() - p.degree()};
}

bool reciprocity_check(const GrassmannShape& shape) {
    IntPolynomial p = p_closed(shape);
    IntPolynomial reversed = p.reversed(p.degree());
    IntPolynomial expected = shape.dimension() % 2 == 0 ? p : -p;
    return reversed == expected;
}

}  // namespace grassmann
