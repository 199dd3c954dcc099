#include "eil/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "eil/errors.hpp"

namespace eil {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
    return IntPolynomial(std::vector<mpz_class>{c});
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int power) {
    if (power < 0) throw std::invalid_argument("monomial power must be nonnegative");
    std::vector<mpz_class> v(static_cast<std::size_t>(power) + 1, 0);
    v.back() = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_x_pow(int k) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    std::vector<mpz_class> v(static_cast<std::size_t>(k) + 1);
    mpz_class binom = 1;
    for (int i = 0; i <= k; ++i) {
        v[static_cast<std::size_t>(i)] = (i % 2 == 0) ? binom : -binom;
        binom = binom * (k - i) / (i + 1);
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_plus_x_pow(int k) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    std::vector<mpz_class> v(static_cast<std::size_t>(k) + 1);
    mpz_class binom = 1;
    for (int i = 0; i <= k; ++i) {
        v[static_cast<std::size_t>(i)] = binom;
        binom = binom * (k - i) / (i + 1);
    }
    return IntPolynomial(std::move(v));
}

std::optional<int> IntPolynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const mpz_class& IntPolynomial::coeff(int k) const {
    static const mpz_class zero = 0;
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
}

mpz_class IntPolynomial::eval_at_one() const {
    mpz_class s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

mpz_class IntPolynomial::eval_at(const mpz_class& x) const {
    mpz_class s = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * x + *it;
    return s;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) v[i] += other.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) v[i] -= other.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> v = coeffs_;
    for (auto& c : v) c = -c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) return zero();
    std::vector<mpz_class> v(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * other.coeffs_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return zero();
    std::vector<mpz_class> v(coeffs_.size() + static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + static_cast<std::size_t>(k)] = coeffs_[i];
    return IntPolynomial(std::move(v));
}

std::optional<IntPolynomial> IntPolynomial::divided_by_one_minus_x() const {
    // N = (1-x) Q  <=>  q_k = n_k + q_{k-1}, with the final carry n(1) = 0.
    if (is_zero()) return zero();
    if (eval_at_one() != 0) return std::nullopt;
    std::vector<mpz_class> q(coeffs_.size() - 1, 0);
    mpz_class carry = 0;
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
        carry += coeffs_[k];
        q[k] = carry;
    }
    return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

nlohmann::json mpz_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return nlohmann::json(static_cast<std::int64_t>(z.get_si()));
    // Out-of-range coefficients are serialized as decimal strings.
    return nlohmann::json(z.get_str());
}

mpz_class mpz_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw parse_error(0, "expected integer coefficient");
}

} // namespace

nlohmann::json IntPolynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_) arr.push_back(mpz_to_json(c));
    return arr;
}

IntPolynomial IntPolynomial::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw parse_error(0, "polynomial must be a JSON array");
    std::vector<mpz_class> v;
    v.reserve(j.size());
    for (const auto& c : j) v.push_back(mpz_from_json(c));
    return IntPolynomial(std::move(v));
}

HilbertSeries HilbertSeries::reduced() const {
    HilbertSeries r{numerator, pole_order};
    while (r.pole_order > 0) {
        auto q = r.numerator.divided_by_one_minus_x();
        if (!q) break;
        r.numerator = std::move(*q);
        --r.pole_order;
    }
    return r;
}

bool HilbertSeries::same_series(const HilbertSeries& other) const {
    HilbertSeries a = reduced();
    HilbertSeries b = other.reduced();
    return a.pole_order == b.pole_order && a.numerator == b.numerator;
}

std::vector<mpz_class> HilbertSeries::expand(int count) const {
    // 1/(1-x)^d has coefficients C(k+d-1, d-1).
    std::vector<mpz_class> denom(static_cast<std::size_t>(count), 0);
    mpz_class binom = 1;
    for (int k = 0; k < count; ++k) {
        denom[static_cast<std::size_t>(k)] = binom;
        binom = binom * (k + pole_order) / (k + 1);
    }
    std::vector<mpz_class> out(static_cast<std::size_t>(count), 0);
    for (int k = 0; k < count; ++k) {
        mpz_class s = 0;
        for (int i = 0; i <= k; ++i) s += numerator.coeff(i) * denom[static_cast<std::size_t>(k - i)];
        out[static_cast<std::size_t>(k)] = s;
    }
    return out;
}

nlohmann::json HilbertSeries::to_json() const {
    return nlohmann::json{{"numerator", numerator.to_json()}, {"pole_order", pole_order}};
}

HilbertSeries HilbertSeries::from_json(const nlohmann::json& j) {
    HilbertSeries s;
    s.numerator = IntPolynomial::from_json(j.at("numerator"));
    s.pole_order = j.at("pole_order").get<int>();
    if (s.pole_order < 0) throw parse_error(0, "pole_order must be nonnegative");
    return s;
}

} // namespace eil
