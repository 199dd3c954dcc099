#include "eil/field.hpp"

#include <stdexcept>

namespace eil {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::gf(std::uint32_t prime) {
    if (!is_prime(prime))
        throw std::invalid_argument("field characteristic must be prime, got " +
                                    std::to_string(prime));
    return FieldSpec{Kind::prime, prime};
}

std::optional<FieldSpec> FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q" || text == "rationals")
        return rationals();
    if (text.empty()) return std::nullopt;
    std::uint64_t value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > 0x7fffffffULL) return std::nullopt;
    }
    if (!is_prime(value)) return std::nullopt;
    return FieldSpec{Kind::prime, static_cast<std::uint32_t>(value)};
}

std::string FieldSpec::name() const {
    if (is_rationals()) return "Q";
    return "F" + std::to_string(p);
}

} // namespace eil
