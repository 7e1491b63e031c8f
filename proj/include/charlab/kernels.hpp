#ifndef CHARLAB_KERNELS_HPP
#define CHARLAB_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "charlab/characters.hpp"
#include "charlab/numeric.hpp"

namespace charlab {

// Fejer kernel F_N(theta) = sum_{|n| <= N} (1 - |n|/N) e(n theta)
//                         = (1/N) (sin(pi N theta) / sin(pi theta))^2.
// Closed form away from integers; coefficient sum when |sin(pi theta)| is
// tiny, where the closed form cancels catastrophically. F_N(integer) = N.
double fejer(std::uint64_t N, double theta);

// Coefficients a(n) for 1 <= |n| <= bound, |a(n)| <= 1.
class CoefficientSequence {
public:
    static CoefficientSequence ones(std::uint64_t bound);
    static CoefficientSequence zeros(std::uint64_t bound);
    // a(n) = chi(n), extended to negative n by chi(-1) chi(|n|).
    static CoefficientSequence from_character(const Character& chi, std::uint64_t bound);
    // Independent uniform unit-circle values for each n, keyed by (seed, n).
    static CoefficientSequence random_unimodular(std::uint64_t bound, std::uint64_t seed);
    // Direct construction; validates |a(n)| <= 1 + 1e-12.
    CoefficientSequence(std::vector<Complex> positive, std::vector<Complex> negative);

    std::uint64_t bound() const { return positive_.size(); }
    Complex at(std::int64_t n) const;  // 1 <= |n| <= bound

    // T(theta) = sum_{1 <= |n| <= bound} (a(n)/n) e(n theta)
    Complex full_theta_sum(double theta) const;
    // same, truncated at |n| <= N
    Complex theta_sum(std::uint64_t N, double theta) const;

private:
    std::vector<Complex> positive_;  // a(1..bound)
    std::vector<Complex> negative_;  // a(-1..-bound)
};

// Fejer-weighted sum sum_{1 <= |n| <= N} (a(n)/n) e(n alpha) (1 - |n|/N).
// 1 <= N <= a.bound().
Complex smoothed_theta_sum(const CoefficientSequence& a, std::uint64_t N, double alpha);

// |smoothed_theta_sum(a, N, alpha) - (1/K) sum_j T(alpha - j/K) F_N(j/K)|.
// Uniform K-point sampling integrates trigonometric polynomials of degree
// < K exactly, so the convolution identity makes this a finite check; K must
// exceed 2(bound + N). Throws std::domain_error otherwise.
double fejer_convolution_check(const CoefficientSequence& a, std::uint64_t N, double alpha,
                               std::uint64_t K);

// LHS - RHS of the two-sided maximization: LHS maximizes |theta_sum(N, .)|
// over theta and 1 <= N <= x, RHS maximizes the full-length sum over theta.
// Both maxima are taken on the same ceil(8x)-point grid, so the gap is
// nonnegative by pointwise domination. x >= 2.
double lemma22_gap(const CoefficientSequence& a, double x);

}  // namespace charlab

#endif  // CHARLAB_KERNELS_HPP
