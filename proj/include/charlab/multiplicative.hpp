#ifndef CHARLAB_MULTIPLICATIVE_HPP
#define CHARLAB_MULTIPLICATIVE_HPP

#include <cstdint>
#include <vector>

#include "charlab/characters.hpp"
#include "charlab/numeric.hpp"

namespace charlab {

// Completely multiplicative f with f(1) = 1 and |f(n)| <= 1. Values at
// composites are the products of the prime values.
class MultiplicativeFunction {
public:
    virtual ~MultiplicativeFunction() = default;

    virtual Complex prime_value(std::uint64_t p) const = 0;

    // Default: factorize n and multiply prime values. n >= 1.
    virtual Complex operator()(std::uint64_t n) const;
};

// The constant function 1.
class ConstantOne final : public MultiplicativeFunction {
public:
    Complex prime_value(std::uint64_t) const override { return {1.0, 0.0}; }
    Complex operator()(std::uint64_t) const override { return {1.0, 0.0}; }
};

// A Dirichlet character viewed through the multiplicative-function contract.
class CharacterFunction final : public MultiplicativeFunction {
public:
    explicit CharacterFunction(Character chi) : chi_(std::move(chi)) {}

    const Character& character() const { return chi_; }

    Complex prime_value(std::uint64_t p) const override {
        return chi_.value(static_cast<std::int64_t>(p));
    }
    Complex operator()(std::uint64_t n) const override {
        return chi_.value(static_cast<std::int64_t>(n));
    }

private:
    Character chi_;
};

// Each prime gets an independent uniform point on the unit circle. The stream
// is keyed by (seed, p), so values do not depend on evaluation order.
class RandomUnimodular final : public MultiplicativeFunction {
public:
    explicit RandomUnimodular(std::uint64_t seed) : seed_mix_(splitmix64(seed)) {}

    Complex prime_value(std::uint64_t p) const override {
        return unit_phase(uniform_unit(splitmix64(seed_mix_ ^ splitmix64(p))));
    }

private:
    std::uint64_t seed_mix_;
};

// f(n) for n in [0, bound]; index 0 unused (set to 0). One smallest-prime-
// factor sieve pass, O(bound) evaluations total.
std::vector<Complex> tabulate(const MultiplicativeFunction& f, std::uint64_t bound);

}  // namespace charlab

#endif  // CHARLAB_MULTIPLICATIVE_HPP
