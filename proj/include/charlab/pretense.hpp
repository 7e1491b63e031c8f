#ifndef CHARLAB_PRETENSE_HPP
#define CHARLAB_PRETENSE_HPP

#include <cstdint>
#include <utility>

#include "charlab/multiplicative.hpp"

namespace charlab {

// D(f, g; y)^2 = sum_{p <= y} (1 - Re f(p) conj(g(p))) / p.
struct DistanceResult {
    double cutoff = 0.0;
    double squared = 0.0;
    std::uint64_t primes_summed = 0;

    double distance() const;  // sqrt of squared, clamped at 0
};

// Ascending prime order with compensated accumulation. A term where f(p) or
// g(p) vanishes contributes exactly 1/p. y >= 2.
DistanceResult distance_squared(const MultiplicativeFunction& f, const MultiplicativeFunction& g,
                                double y);
DistanceResult distance_squared(const Character& chi, const Character& psi, double y);

// (D(f,g;y) + D(g,h;y), D(f,h;y)); the pseudometric triangle inequality says
// first >= second.
std::pair<double, double> triangle_check(const MultiplicativeFunction& f,
                                         const MultiplicativeFunction& g,
                                         const MultiplicativeFunction& h, double y);

}  // namespace charlab

#endif  // CHARLAB_PRETENSE_HPP
