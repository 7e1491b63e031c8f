#ifndef CHARLAB_ARITHMETIC_HPP
#define CHARLAB_ARITHMETIC_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace charlab {

struct PrimePower {
    std::uint64_t prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with factors ascending by prime.
class Factorization {
public:
    Factorization(std::uint64_t value, std::vector<PrimePower> factors);

    std::uint64_t value() const { return value_; }
    std::span<const PrimePower> factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    const PrimePower& operator[](std::size_t i) const { return factors_[i]; }

private:
    std::uint64_t value_;
    std::vector<PrimePower> factors_;  // ascending, product of p^e == value_
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(std::uint64_t n);

// Trial division up to 10^3, then Miller-Rabin + Pollard rho for what remains.
// Throws std::domain_error for n < 2.
Factorization factorize(std::uint64_t n);

// |(Z/qZ)*|; euler_phi(1) == 1.
std::uint64_t euler_phi(std::uint64_t q);

// Ascending primes p <= bound.
class PrimeList {
public:
    // y >= 2; sieve of Eratosthenes up to floor(y).
    static PrimeList up_to(double y);

    std::uint64_t bound() const { return bound_; }
    std::span<const std::uint64_t> primes() const { return primes_; }
    std::size_t count() const { return primes_.size(); }

private:
    PrimeList(std::uint64_t bound, std::vector<std::uint64_t> primes)
        : bound_(bound), primes_(std::move(primes)) {}
    std::uint64_t bound_;
    std::vector<std::uint64_t> primes_;
};

// Smallest prime factor for every n in [2, bound]; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint64_t bound);

// Structure of (Z/qZ)* as a product of cyclic groups: one primitive root per
// odd prime-power factor, and the {-1, 5} pair for 2^k with k >= 3. Discrete
// logarithm tables are built eagerly per CRT component, so exponent lookups
// are O(#generators) per residue.
class UnitGroup {
public:
    static constexpr std::uint64_t kMaxModulus = 10'000'000;

    struct Generator {
        std::uint64_t residue;  // CRT-lifted: == local generator mod its component, 1 elsewhere
        std::uint64_t order;
    };

    // Throws std::length_error above kMaxModulus, std::domain_error for q == 0.
    explicit UnitGroup(std::uint64_t q);

    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t phi() const { return phi_; }
    // lcm of the generator orders (the exponent of the group); 1 for q <= 2.
    std::uint64_t exponent() const { return exponent_; }
    std::span<const Generator> generators() const { return generators_; }
    std::size_t rank() const { return generators_.size(); }

    bool is_unit(std::uint64_t n) const;

    // Exponent vector of a unit residue: n == prod generators[i].residue ^ out[i] (mod q).
    // Throws std::domain_error when gcd(n, q) > 1.
    void exponents(std::uint64_t n, std::span<std::uint32_t> out) const;
    std::vector<std::uint32_t> exponents(std::uint64_t n) const;

    // prod generators[i].residue ^ exps[i] mod q.
    std::uint64_t reconstruct(std::span<const std::uint32_t> exps) const;

private:
    struct Slot {
        std::uint64_t component_modulus;         // prime power this generator lives in
        const std::vector<std::uint32_t>* table; // dlog table indexed by residue mod component
    };

    std::uint64_t modulus_;
    std::uint64_t phi_;
    std::uint64_t exponent_;
    std::vector<Generator> generators_;
    std::vector<std::vector<std::uint32_t>> tables_;  // one per generator, parallel to generators_
    std::vector<std::uint64_t> component_moduli_;     // parallel to generators_
};

}  // namespace charlab

#endif  // CHARLAB_ARITHMETIC_HPP
