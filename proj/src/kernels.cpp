#include "charlab/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace charlab {

double fejer(std::uint64_t N, double theta) {
    if (N < 1) throw std::domain_error("fejer: N must be >= 1");
    const double s = std::sin(std::numbers::pi * theta);
    if (std::abs(s) > 1e-6) {
        const double num = std::sin(std::numbers::pi * static_cast<double>(N) * theta);
        return num * num / (static_cast<double>(N) * s * s);
    }
    // Near-integer theta: coefficient sum, exact at integers (value N).
    double acc = 1.0;
    for (std::uint64_t n = 1; n < N; ++n) {
        const double w = 1.0 - static_cast<double>(n) / static_cast<double>(N);
        acc += 2.0 * w * std::cos(kTwoPi * static_cast<double>(n) * theta);
    }
    return acc;
}

CoefficientSequence::CoefficientSequence(std::vector<Complex> positive,
                                         std::vector<Complex> negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
    if (positive_.size() != negative_.size())
        throw std::invalid_argument("CoefficientSequence: mismatched sides");
    for (const auto& side : {positive_, negative_})
        for (const Complex& v : side)
            if (std::abs(v) > 1.0 + 1e-12)
                throw std::domain_error("CoefficientSequence: |a(n)| exceeds 1");
}

CoefficientSequence CoefficientSequence::ones(std::uint64_t bound) {
    return CoefficientSequence(std::vector<Complex>(bound, Complex{1.0, 0.0}),
                               std::vector<Complex>(bound, Complex{1.0, 0.0}));
}

CoefficientSequence CoefficientSequence::zeros(std::uint64_t bound) {
    return CoefficientSequence(std::vector<Complex>(bound, Complex{0.0, 0.0}),
                               std::vector<Complex>(bound, Complex{0.0, 0.0}));
}

CoefficientSequence CoefficientSequence::from_character(const Character& chi,
                                                        std::uint64_t bound) {
    std::vector<Complex> pos(bound), neg(bound);
    const double sign = chi.is_even() ? 1.0 : -1.0;
    for (std::uint64_t n = 1; n <= bound; ++n) {
        pos[n - 1] = chi.value(static_cast<std::int64_t>(n));
        neg[n - 1] = sign * pos[n - 1];
    }
    return CoefficientSequence(std::move(pos), std::move(neg));
}

CoefficientSequence CoefficientSequence::random_unimodular(std::uint64_t bound,
                                                           std::uint64_t seed) {
    const std::uint64_t mix = splitmix64(seed);
    std::vector<Complex> pos(bound), neg(bound);
    for (std::uint64_t n = 1; n <= bound; ++n) {
        pos[n - 1] = unit_phase(uniform_unit(splitmix64(mix ^ splitmix64(2 * n))));
        neg[n - 1] = unit_phase(uniform_unit(splitmix64(mix ^ splitmix64(2 * n + 1))));
    }
    return CoefficientSequence(std::move(pos), std::move(neg));
}

Complex CoefficientSequence::at(std::int64_t n) const {
    if (n == 0 || static_cast<std::uint64_t>(std::abs(n)) > bound())
        throw std::out_of_range("CoefficientSequence::at: |n| outside [1, bound]");
    return n > 0 ? positive_[static_cast<std::size_t>(n - 1)]
                 : negative_[static_cast<std::size_t>(-n - 1)];
}

Complex CoefficientSequence::theta_sum(std::uint64_t N, double theta) const {
    if (N < 1 || N > bound())
        throw std::domain_error("CoefficientSequence::theta_sum: N outside [1, bound]");
    Complex acc{0.0, 0.0};
    for (std::uint64_t n = 1; n <= N; ++n) {
        const Complex phase = unit_phase(static_cast<double>(n) * theta);
        acc += positive_[n - 1] * phase / static_cast<double>(n);
        acc -= negative_[n - 1] * std::conj(phase) / static_cast<double>(n);
    }
    return acc;
}

Complex CoefficientSequence::full_theta_sum(double theta) const {
    return theta_sum(bound(), theta);
}

Complex smoothed_theta_sum(const CoefficientSequence& a, std::uint64_t N, double alpha) {
    if (N < 1 || N > a.bound())
        throw std::domain_error("smoothed_theta_sum: N outside [1, bound]");
    Complex acc{0.0, 0.0};
    for (std::uint64_t n = 1; n <= N; ++n) {
        const double w = 1.0 - static_cast<double>(n) / static_cast<double>(N);
        if (w == 0.0) break;
        const Complex phase = unit_phase(static_cast<double>(n) * alpha);
        acc += a.at(static_cast<std::int64_t>(n)) * phase * (w / static_cast<double>(n));
        acc -= a.at(-static_cast<std::int64_t>(n)) * std::conj(phase) * (w / static_cast<double>(n));
    }
    return acc;
}

double fejer_convolution_check(const CoefficientSequence& a, std::uint64_t N, double alpha,
                               std::uint64_t K) {
    if (K <= 2 * (a.bound() + N))
        throw std::domain_error("fejer_convolution_check: K must exceed 2(x + N)");
    const Complex smoothed = smoothed_theta_sum(a, N, alpha);
    Complex quadrature{0.0, 0.0};
    for (std::uint64_t j = 0; j < K; ++j) {
        const double theta = static_cast<double>(j) / static_cast<double>(K);
        quadrature += a.full_theta_sum(alpha - theta) * fejer(N, theta);
    }
    quadrature /= static_cast<double>(K);
    return std::abs(smoothed - quadrature);
}

double lemma22_gap(const CoefficientSequence& a, double x) {
    if (!(x >= 2.0)) throw std::domain_error("lemma22_gap: x must be >= 2");
    const auto bound = static_cast<std::uint64_t>(std::floor(x));
    if (bound > a.bound()) throw std::domain_error("lemma22_gap: x exceeds coefficient bound");
    const auto grid = static_cast<std::uint64_t>(std::ceil(8.0 * x));
    const auto roots = unit_roots(grid);

    double lhs = 0.0, rhs = 0.0;
    for (std::uint64_t j = 0; j < grid; ++j) {
        Complex acc{0.0, 0.0};
        double best_n = 0.0;
        std::uint64_t idx = 0;
        for (std::uint64_t n = 1; n <= bound; ++n) {
            idx += j;
            if (idx >= grid) idx -= grid;
            const Complex phase = roots[idx];
            acc += a.at(static_cast<std::int64_t>(n)) * phase / static_cast<double>(n);
            acc -= a.at(-static_cast<std::int64_t>(n)) * std::conj(phase) / static_cast<double>(n);
            best_n = std::max(best_n, std::abs(acc));
        }
        lhs = std::max(lhs, best_n);
        rhs = std::max(rhs, std::abs(acc));  // acc now holds the full sum at this theta
    }
    return lhs - rhs;
}

}  // namespace charlab
