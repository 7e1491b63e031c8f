#ifndef CHARLAB_EULER_HPP
#define CHARLAB_EULER_HPP

#include <cstdint>

#include "charlab/multiplicative.hpp"

namespace charlab {

// Truncated shifted Dirichlet series sum_{n <= y} f(n) / n^(1+delta) with the
// shift delta = log log y / log y.
struct ShiftedSeries {
    double cutoff = 0.0;
    double delta = 0.0;
    Complex value{0.0, 0.0};
    double tail_bound = 0.0;  // 1 / (delta * y^delta)
};

struct EulerComparison {
    double log_abs_f = 0.0;   // log |prod_{p <= y} (1 - f(p) p^(-1-delta))^(-1)|
    double prime_sum = 0.0;   // sum_{p <= y} Re f(p) / p
    double gap = 0.0;         // |log_abs_f - prime_sum|
};

// max_{N <= y} |sum_{n <= N} f(n)/n| over integer N, one incremental pass. y >= 2.
double harmonic_partial_max(const MultiplicativeFunction& f, double y);

// y >= 16 so that delta > 0 and log log y > 1.
ShiftedSeries shifted_series(const MultiplicativeFunction& f, double y);

// Compares the log of the truncated Euler product against the prime sum; the
// gap is what the Mertens step bounds by log log log y + O(1). y >= 16.
EulerComparison euler_log_comparison(const MultiplicativeFunction& f, double y);

// [max partial sum + 1/log log y] / [(log y / log log y) exp(-D(f,1;y)^2)].
// Bounded below by an absolute constant per the pretentious lower bound. y >= 16.
double lemma21_ratio(const MultiplicativeFunction& f, double y);

}  // namespace charlab

#endif  // CHARLAB_EULER_HPP
