#include "charlab/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace charlab {

Character::Character(std::shared_ptr<const UnitGroup> group, std::vector<std::uint32_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    if (!group_) throw std::invalid_argument("Character: null unit group");
    const auto gens = group_->generators();
    if (exponents_.size() != gens.size())
        throw std::invalid_argument("Character: exponent vector length mismatch");

    const std::uint64_t L = group_->exponent();
    strides_.resize(exponents_.size());
    order_ = 1;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        const std::uint64_t d = gens[i].order;
        const std::uint64_t c = exponents_[i];
        if (c >= d) throw std::invalid_argument("Character: exponent out of range");
        strides_[i] = c * (L / d) % L;
        order_ = std::lcm(order_, d / std::gcd<std::uint64_t>(c, d));
    }
    angle_scale_ = L / order_;

    // chi(-1) is +-1; even iff the angle at q-1 is 0.
    if (group_->modulus() <= 2) {
        parity_ = Parity::kEven;
    } else {
        parity_ = raw_angle(group_->modulus() - 1) == 0 ? Parity::kEven : Parity::kOdd;
    }
    conductor_ = compute_conductor();
}

std::uint64_t Character::raw_angle(std::uint64_t unit) const {
    const std::uint64_t L = group_->exponent();
    if (strides_.empty()) return 0;
    std::uint64_t acc = 0;
    std::uint32_t exps[16];
    group_->exponents(unit, std::span<std::uint32_t>(exps, strides_.size()));
    for (std::size_t i = 0; i < strides_.size(); ++i)
        acc = (acc + exps[i] % L * strides_[i]) % L;
    return acc;
}

std::uint32_t Character::order_index(std::uint64_t n) const {
    const std::uint64_t q = group_->modulus();
    n %= q;
    if (std::gcd(n, q) != 1) return kNonUnit;
    return static_cast<std::uint32_t>(raw_angle(n) / angle_scale_);
}

std::optional<RationalAngle> Character::operator()(std::int64_t n) const {
    const auto q = static_cast<std::int64_t>(group_->modulus());
    std::int64_t r = n % q;
    if (r < 0) r += q;
    const std::uint32_t idx = order_index(static_cast<std::uint64_t>(r));
    if (idx == kNonUnit) return std::nullopt;
    return RationalAngle(static_cast<std::int64_t>(idx), static_cast<std::int64_t>(order_));
}

Complex Character::value(std::int64_t n) const {
    const auto angle = (*this)(n);
    return angle ? angle->to_complex() : Complex(0.0, 0.0);
}

Character Character::conjugate() const {
    const auto gens = group_->generators();
    std::vector<std::uint32_t> exps(exponents_.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = exponents_[i] == 0
                      ? 0
                      : static_cast<std::uint32_t>(gens[i].order - exponents_[i]);
    return Character(group_, std::move(exps));
}

std::uint64_t Character::compute_conductor() const {
    const std::uint64_t q = group_->modulus();
    if (q == 1) return 1;
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t f = 1; f * f <= q; ++f) {
        if (q % f != 0) continue;
        divisors.push_back(f);
        if (f != q / f) divisors.push_back(q / f);
    }
    std::sort(divisors.begin(), divisors.end());
    // chi is induced mod f iff chi == 1 on every unit n == 1 (mod f).
    for (const std::uint64_t f : divisors) {
        bool constant = true;
        for (std::uint64_t n = 1 + f; n < q; n += f) {
            if (std::gcd(n, q) != 1) continue;
            if (raw_angle(n) != 0) {
                constant = false;
                break;
            }
        }
        if (constant) return f;
    }
    return q;
}

std::string CharacterKey::exponents_string(char sep) const {
    if (exponents.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i > 0) out.push_back(sep);
        out += std::to_string(exponents[i]);
    }
    return out;
}

std::vector<Character> enumerate_characters(std::shared_ptr<const UnitGroup> group) {
    const auto gens = group->generators();
    std::vector<Character> out;
    out.reserve(group->phi());
    std::vector<std::uint32_t> exps(gens.size(), 0);
    for (;;) {
        out.emplace_back(group, exps);
        // odometer: last coordinate fastest
        std::size_t i = gens.size();
        while (i > 0) {
            --i;
            if (++exps[i] < gens[i].order) break;
            exps[i] = 0;
            if (i == 0) return out;
        }
        if (gens.empty()) return out;
    }
}

std::vector<Character> enumerate_characters(std::uint64_t q) {
    return enumerate_characters(std::make_shared<const UnitGroup>(q));
}

std::vector<Character> characters_of_order(std::uint64_t q, std::uint64_t g) {
    if (g < 1) throw std::domain_error("characters_of_order: g must be >= 1");
    std::vector<Character> out;
    for (auto& chi : enumerate_characters(q)) {
        if (chi.order() == g && chi.is_primitive()) out.push_back(std::move(chi));
    }
    return out;
}

}  // namespace charlab
