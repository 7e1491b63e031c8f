#include "charlab/multiplicative.hpp"

#include <stdexcept>

#include "charlab/arithmetic.hpp"

namespace charlab {

Complex MultiplicativeFunction::operator()(std::uint64_t n) const {
    if (n == 0) throw std::domain_error("MultiplicativeFunction: n must be >= 1");
    if (n == 1) return {1.0, 0.0};
    Complex out{1.0, 0.0};
    const Factorization fac = factorize(n);
    for (const auto& [p, e] : fac.factors()) {
        const Complex v = prime_value(p);
        for (int i = 0; i < e; ++i) out *= v;
    }
    return out;
}

std::vector<Complex> tabulate(const MultiplicativeFunction& f, std::uint64_t bound) {
    const auto spf = smallest_prime_factor_sieve(bound);
    std::vector<Complex> values(bound + 1, Complex{0.0, 0.0});
    if (bound >= 1) values[1] = {1.0, 0.0};
    std::vector<Complex> at_prime(bound + 1);
    for (std::uint64_t n = 2; n <= bound; ++n) {
        const std::uint32_t p = spf[n];
        if (n == p) at_prime[p] = f.prime_value(p);
        values[n] = values[n / p] * at_prime[p];
    }
    return values;
}

}  // namespace charlab
