#include "charlab/euler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "charlab/arithmetic.hpp"
#include "charlab/pretense.hpp"

namespace charlab {

namespace {

double shift_for(double y) { return std::log(std::log(y)) / std::log(y); }

void require_y16(double y, const char* who) {
    if (!(y >= 16.0)) throw std::domain_error(std::string(who) + ": y must be >= 16");
}

}  // namespace

double harmonic_partial_max(const MultiplicativeFunction& f, double y) {
    if (!(y >= 2.0)) throw std::domain_error("harmonic_partial_max: y must be >= 2");
    const auto bound = static_cast<std::uint64_t>(std::floor(y));
    const auto values = tabulate(f, bound);
    Complex acc{0.0, 0.0};
    double best = 0.0;
    for (std::uint64_t n = 1; n <= bound; ++n) {
        acc += values[n] / static_cast<double>(n);
        best = std::max(best, std::abs(acc));
    }
    return best;
}

ShiftedSeries shifted_series(const MultiplicativeFunction& f, double y) {
    require_y16(y, "shifted_series");
    const double delta = shift_for(y);
    const auto bound = static_cast<std::uint64_t>(std::floor(y));
    const auto values = tabulate(f, bound);
    Complex acc{0.0, 0.0};
    for (std::uint64_t n = 1; n <= bound; ++n)
        acc += values[n] * std::pow(static_cast<double>(n), -1.0 - delta);
    return {y, delta, acc, 1.0 / (delta * std::pow(y, delta))};
}

EulerComparison euler_log_comparison(const MultiplicativeFunction& f, double y) {
    require_y16(y, "euler_log_comparison");
    const double delta = shift_for(y);
    const PrimeList primes = PrimeList::up_to(y);
    KahanSum log_abs, prime_sum;
    for (const std::uint64_t p : primes.primes()) {
        const double pd = std::pow(static_cast<double>(p), -1.0 - delta);
        // |f(p) p^(-1-delta)| <= p^(-1-delta) < 1, so the factor never vanishes.
        log_abs.add(-std::log(std::abs(1.0 - f.prime_value(p) * pd)));
        prime_sum.add(f.prime_value(p).real() / static_cast<double>(p));
    }
    const double gap = std::abs(log_abs.value() - prime_sum.value());
    return {log_abs.value(), prime_sum.value(), gap};
}

double lemma21_ratio(const MultiplicativeFunction& f, double y) {
    require_y16(y, "lemma21_ratio");
    const double loglog = std::log(std::log(y));
    const double lhs = harmonic_partial_max(f, y) + 1.0 / loglog;
    const ConstantOne one;
    const double d2 = distance_squared(f, one, y).squared;
    const double rhs = std::log(y) / loglog * std::exp(-d2);
    return lhs / rhs;
}

}  // namespace charlab
