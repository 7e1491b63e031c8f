#include "charlab/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "charlab/numeric.hpp"

namespace charlab {

namespace {

constexpr std::uint64_t kTrialBound = 1000;

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Pollard rho with Brent cycle detection. n must be odd composite, not a prime power guard needed.
std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    std::uint64_t seed = 0;
    for (;;) {
        ++seed;
        std::uint64_t x = splitmix64(n ^ seed) % n;
        const std::uint64_t c = 1 + splitmix64(seed * 0x5851f42d4c957f2dULL) % (n - 1);
        std::uint64_t y = x, d = 1;
        std::uint64_t power = 1, lam = 0;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (mulmod(y, y, n) + c) % n;
            ++lam;
            d = gcd64(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // This witness set decides primality for every n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Factorization::Factorization(std::uint64_t value, std::vector<PrimePower> factors)
    : value_(value), factors_(std::move(factors)) {}

Factorization factorize(std::uint64_t n) {
    if (n < 2) throw std::domain_error("factorize: n must be >= 2");
    const std::uint64_t original = n;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= kTrialBound && p * p <= n; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) {
        if (n <= kTrialBound * kTrialBound) {
            primes.push_back(n);  // no factor <= 10^3, so n is prime
        } else {
            factor_into(n, primes);
        }
    }
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> grouped;
    for (std::uint64_t p : primes) {
        if (!grouped.empty() && grouped.back().prime == p)
            ++grouped.back().exponent;
        else
            grouped.push_back({p, 1});
    }
    return Factorization(original, std::move(grouped));
}

std::uint64_t euler_phi(std::uint64_t q) {
    if (q == 0) throw std::domain_error("euler_phi: q must be >= 1");
    if (q == 1) return 1;
    std::uint64_t phi = 1;
    const Factorization fac = factorize(q);
    for (const auto& [p, e] : fac.factors()) {
        std::uint64_t pk = 1;
        for (int i = 1; i < e; ++i) pk *= p;
        phi *= pk * (p - 1);
    }
    return phi;
}

PrimeList PrimeList::up_to(double y) {
    if (!(y >= 2.0)) throw std::domain_error("primes_up_to: y must be >= 2");
    if (y > 1e8) throw std::length_error("primes_up_to: y above 10^8 guard");
    const auto bound = static_cast<std::uint64_t>(std::floor(y));
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return PrimeList(bound, std::move(primes));
}

std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint64_t bound) {
    std::vector<std::uint32_t> spf(bound + 1, 0);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= bound; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    return spf;
}

namespace {

// Least primitive root mod p^e for odd prime p.
std::uint64_t primitive_root(std::uint64_t pk, std::uint64_t phi) {
    const auto phi_factors = factorize(phi);
    for (std::uint64_t g = 2; g < pk; ++g) {
        if (gcd64(g, pk) != 1) continue;
        bool primitive = true;
        for (const auto& [ell, e] : phi_factors.factors()) {
            if (powmod(g, phi / ell, pk) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::logic_error("primitive_root: none found (non prime-power modulus?)");
}

// a^-1 mod m via extended gcd; requires gcd(a, m) == 1, m >= 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (r != 1) throw std::logic_error("invmod: arguments not coprime");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

// z == r (mod m), z == 1 (mod n), gcd(m, n) = 1; result mod m*n.
std::uint64_t crt_lift(std::uint64_t r, std::uint64_t m, std::uint64_t n) {
    const unsigned __int128 q = static_cast<unsigned __int128>(m) * n;
    // n*(n^-1 mod m) == 1 mod m, 0 mod n;  m*(m^-1 mod n) == 0 mod m, 1 mod n
    unsigned __int128 z = static_cast<unsigned __int128>(n) * invmod(n, m) % q * (r % m) % q;
    z += static_cast<unsigned __int128>(m) * invmod(m, n) % q;
    return static_cast<std::uint64_t>(z % q);
}

}  // namespace

UnitGroup::UnitGroup(std::uint64_t q) {
    if (q == 0) throw std::domain_error("UnitGroup: modulus must be >= 1");
    if (q > kMaxModulus) throw std::length_error("UnitGroup: modulus above 10^7 table guard");
    modulus_ = q;
    phi_ = euler_phi(q);
    exponent_ = 1;
    if (q <= 2) return;  // trivial group, no generators

    const Factorization fac = factorize(q);
    for (const auto& [p, e] : fac.factors()) {
        std::uint64_t pk = 1;
        for (int i = 0; i < e; ++i) pk *= p;
        if (p == 2) {
            if (e == 1) continue;  // (Z/2Z)* trivial
            if (e == 2) {
                // generator -1 == 3 (mod 4), order 2
                std::vector<std::uint32_t> table(4, UINT32_MAX);
                table[1] = 0;
                table[3] = 1;
                generators_.push_back({crt_lift(3, 4, q / 4), 2});
                component_moduli_.push_back(4);
                tables_.push_back(std::move(table));
            } else {
                // (Z/2^e Z)* = <-1> x <5>, orders 2 and 2^(e-2)
                const std::uint64_t ord5 = pk / 4;
                std::vector<std::uint32_t> sign(pk, UINT32_MAX), pow5(pk, UINT32_MAX);
                std::uint64_t v = 1;
                for (std::uint64_t j = 0; j < ord5; ++j) {
                    sign[v] = 0;
                    pow5[v] = static_cast<std::uint32_t>(j);
                    const std::uint64_t neg = pk - v;
                    sign[neg] = 1;
                    pow5[neg] = static_cast<std::uint32_t>(j);
                    v = v * 5 % pk;
                }
                generators_.push_back({crt_lift(pk - 1, pk, q / pk), 2});
                component_moduli_.push_back(pk);
                tables_.push_back(std::move(sign));
                generators_.push_back({crt_lift(5, pk, q / pk), ord5});
                component_moduli_.push_back(pk);
                tables_.push_back(std::move(pow5));
            }
        } else {
            const std::uint64_t phi_pk = pk / p * (p - 1);
            const std::uint64_t g = primitive_root(pk, phi_pk);
            std::vector<std::uint32_t> table(pk, UINT32_MAX);
            std::uint64_t v = 1;
            for (std::uint64_t j = 0; j < phi_pk; ++j) {
                table[v] = static_cast<std::uint32_t>(j);
                v = v * g % pk;
            }
            generators_.push_back({crt_lift(g, pk, q / pk), phi_pk});
            component_moduli_.push_back(pk);
            tables_.push_back(std::move(table));
        }
    }
    for (const auto& gen : generators_) exponent_ = std::lcm(exponent_, gen.order);
}

bool UnitGroup::is_unit(std::uint64_t n) const {
    return std::gcd(n % modulus_, modulus_) == 1;
}

void UnitGroup::exponents(std::uint64_t n, std::span<std::uint32_t> out) const {
    n %= modulus_;
    if (std::gcd(n, modulus_) != 1) throw std::domain_error("UnitGroup::exponents: not a unit");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const std::uint32_t v = tables_[i][n % component_moduli_[i]];
        out[i] = v;
    }
}

std::vector<std::uint32_t> UnitGroup::exponents(std::uint64_t n) const {
    std::vector<std::uint32_t> out(generators_.size());
    exponents(n, out);
    return out;
}

std::uint64_t UnitGroup::reconstruct(std::span<const std::uint32_t> exps) const {
    if (exps.size() != generators_.size())
        throw std::invalid_argument("UnitGroup::reconstruct: exponent count mismatch");
    std::uint64_t r = 1 % modulus_;
    for (std::size_t i = 0; i < generators_.size(); ++i)
        r = mulmod(r, powmod(generators_[i].residue, exps[i], modulus_), modulus_);
    return r;
}

}  // namespace charlab
