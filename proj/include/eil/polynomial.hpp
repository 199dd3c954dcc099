#ifndef EIL_POLYNOMIAL_HPP
#define EIL_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace eil {

// Dense univariate polynomial with arbitrary-precision integer coefficients,
// constant term first.  Always normalized: no trailing zero coefficient; the
// zero polynomial is the empty coefficient list and its degree is "minus
// infinity", reported as std::nullopt.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return constant(1); }
    static IntPolynomial constant(const mpz_class& c);
    static IntPolynomial monomial(const mpz_class& c, int power);
    // (1 - x)^k and (1 + x)^k, expanded.
    static IntPolynomial one_minus_x_pow(int k);
    static IntPolynomial one_plus_x_pow(int k);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    // Coefficient of x^k; zero beyond the degree.
    const mpz_class& coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class eval_at_one() const;
    mpz_class eval_at(const mpz_class& x) const;

    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator-(const IntPolynomial& other) const;
    IntPolynomial operator*(const IntPolynomial& other) const;
    IntPolynomial operator-() const;
    IntPolynomial shifted(int k) const; // multiply by x^k
    bool operator==(const IntPolynomial& other) const = default;

    // Exact quotient by (1 - x); nullopt when the division leaves a
    // remainder (equivalently, when eval_at_one() != 0).
    std::optional<IntPolynomial> divided_by_one_minus_x() const;

    std::string to_string(const std::string& var = "t") const;
    nlohmann::json to_json() const;
    static IntPolynomial from_json(const nlohmann::json& j);

private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

// numerator(x) / (1 - x)^pole_order
struct HilbertSeries {
    IntPolynomial numerator;
    int pole_order = 0;

    // Cancel as many (1 - x) factors as possible against the pole.  In the
    // result either pole_order is 0 or numerator(1) != 0.
    HilbertSeries reduced() const;
    bool same_series(const HilbertSeries& other) const;

    // First `count` coefficients of the power-series expansion.
    std::vector<mpz_class> expand(int count) const;

    nlohmann::json to_json() const;
    static HilbertSeries from_json(const nlohmann::json& j);
};

} // namespace eil

#endif
