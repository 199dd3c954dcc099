#ifndef EIL_FIELD_HPP
#define EIL_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace eil {

// Coefficient field for homology / Betti computations: the rationals or a
// prime field GF(p).
struct FieldSpec {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
    static FieldSpec gf(std::uint32_t prime);

    // Accepts "q", "Q", "rationals", or a prime written in decimal.
    static std::optional<FieldSpec> parse(const std::string& text);

    bool is_rationals() const { return kind == Kind::rationals; }
    std::string name() const; // "Q" or "F<p>"

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

} // namespace eil

#endif
