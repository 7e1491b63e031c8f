#ifndef CHARLAB_CHARACTERS_HPP
#define CHARLAB_CHARACTERS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charlab/arithmetic.hpp"
#include "charlab/rational_angle.hpp"

namespace charlab {

enum class Parity { kEven, kOdd };

// Dirichlet character mod q, stored as an exponent vector against the unit
// group's generators: chi(g_i) = e(c_i / d_i). Values on units are exact
// roots of unity; order, parity and conductor are computed once at
// construction and the instance is immutable afterwards.
class Character {
public:
    static constexpr std::uint32_t kNonUnit = UINT32_MAX;

    Character(std::shared_ptr<const UnitGroup> group, std::vector<std::uint32_t> exponents);

    const UnitGroup& group() const { return *group_; }
    const std::shared_ptr<const UnitGroup>& group_ptr() const { return group_; }
    std::uint64_t modulus() const { return group_->modulus(); }
    const std::vector<std::uint32_t>& exponents() const { return exponents_; }

    std::uint64_t order() const { return order_; }
    Parity parity() const { return parity_; }
    bool is_even() const { return parity_ == Parity::kEven; }
    bool is_odd() const { return parity_ == Parity::kOdd; }
    std::uint64_t conductor() const { return conductor_; }
    bool is_principal() const { return order_ == 1; }
    bool is_primitive() const { return conductor_ == modulus(); }

    // Exact evaluation: nullopt iff gcd(n, q) > 1, otherwise the root of
    // unity e(sum_i c_i e_i(n) / d_i). Negative n reduced mod q.
    std::optional<RationalAngle> operator()(std::int64_t n) const;

    // Same, collapsed to a complex double (0 off the units).
    Complex value(std::int64_t n) const;

    // Fast path for scans: chi(n) = e(order_index(n) / order()), or kNonUnit
    // when gcd(n, q) > 1. Exact integer arithmetic throughout.
    std::uint32_t order_index(std::uint64_t n) const;

    Character conjugate() const;

private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::uint32_t> exponents_;   // c_i, 0 <= c_i < d_i
    std::vector<std::uint64_t> strides_;     // c_i * (L / d_i) mod L, L = group exponent
    std::uint64_t order_;
    std::uint64_t angle_scale_;              // L / order
    Parity parity_;
    std::uint64_t conductor_;

    std::uint64_t raw_angle(std::uint64_t unit) const;  // sum e_i(n)*strides_[i] mod L
    std::uint64_t compute_conductor() const;
};

// Identifies a character in reports and persisted records.
struct CharacterKey {
    std::uint64_t modulus = 0;
    std::vector<std::uint32_t> exponents;

    static CharacterKey of(const Character& chi) { return {chi.modulus(), chi.exponents()}; }
    // exponents joined by sep, e.g. "2;0"; empty vector -> "-"
    std::string exponents_string(char sep = ';') const;
    friend bool operator==(const CharacterKey&, const CharacterKey&) = default;
};

// All phi(q) characters mod q, principal first, mixed-radix order on the
// exponent vectors (last coordinate varies fastest).
std::vector<Character> enumerate_characters(std::uint64_t q);
std::vector<Character> enumerate_characters(std::shared_ptr<const UnitGroup> group);

// Characters of order exactly g and conductor q (primitive), in enumeration order.
std::vector<Character> characters_of_order(std::uint64_t q, std::uint64_t g);

}  // namespace charlab

#endif  // CHARLAB_CHARACTERS_HPP
