#include "charlab/pretense.hpp"

#include <cmath>
#include <stdexcept>

#include "charlab/arithmetic.hpp"

namespace charlab {

double DistanceResult::distance() const { return std::sqrt(std::max(squared, 0.0)); }

DistanceResult distance_squared(const MultiplicativeFunction& f, const MultiplicativeFunction& g,
                                double y) {
    if (!(y >= 2.0)) throw std::domain_error("distance_squared: y must be >= 2");
    const PrimeList primes = PrimeList::up_to(y);
    KahanSum sum;
    for (const std::uint64_t p : primes.primes()) {
        const Complex prod = f.prime_value(p) * std::conj(g.prime_value(p));
        sum.add((1.0 - prod.real()) / static_cast<double>(p));
    }
    return {y, sum.value(), primes.count()};
}

DistanceResult distance_squared(const Character& chi, const Character& psi, double y) {
    return distance_squared(CharacterFunction(chi), CharacterFunction(psi), y);
}

std::pair<double, double> triangle_check(const MultiplicativeFunction& f,
                                         const MultiplicativeFunction& g,
                                         const MultiplicativeFunction& h, double y) {
    const double dfg = distance_squared(f, g, y).distance();
    const double dgh = distance_squared(g, h, y).distance();
    const double dfh = distance_squared(f, h, y).distance();
    return {dfg + dgh, dfh};
}

}  // namespace charlab
