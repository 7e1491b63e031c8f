#ifndef CHARLAB_NUMERIC_HPP
#define CHARLAB_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

namespace charlab {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// e(t) = exp(2*pi*i*t)
inline Complex unit_phase(double t) { return std::polar(1.0, kTwoPi * t); }

// Table of the k-th roots of unity, roots[j] = e(j/k). Each entry is computed
// from its own angle rather than by repeated multiplication so there is no
// phase drift along the table.
// Table of e(j/k).  The upper half mirrors the lower as exact conjugates so
// that conjugate characters produce bitwise-conjugate values.
inline std::vector<Complex> unit_roots(std::uint64_t k) {
    std::vector<Complex> roots(k);
    for (std::uint64_t j = 0; j <= k / 2; ++j)
        roots[j] = unit_phase(static_cast<double>(j) / static_cast<double>(k));
    if (k % 2 == 0 && k > 0) roots[k / 2] = Complex{-1.0, 0.0};  // e(1/2), exactly real
    for (std::uint64_t j = k / 2 + 1; j < k; ++j) roots[j] = std::conj(roots[k - j]);
    return roots;
}

// Compensated accumulation for long sums of small terms.
class KahanSum {
public:
    void add(double x) {
        const double y = x - carry_;
        const double t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

// splitmix64 step; the standard finalizer, stable across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform double in [0, 1) from a 64-bit hash state.
inline double uniform_unit(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Least-squares slope of y against x.
inline double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("least_squares_slope: need >= 2 matched points");
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("least_squares_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / denom;
}

// Runs body(i) for i in [0, count) across `threads` workers. Tasks are claimed
// through an atomic counter; each index is processed exactly once and the body
// must write only to its own slot, which keeps results independent of the
// thread count.
void parallel_for(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t)>& body);

unsigned resolve_thread_count(unsigned requested);

}  // namespace charlab

#endif  // CHARLAB_NUMERIC_HPP
