#include "charlab/charsums.hpp"

#include <cmath>
#include <stdexcept>

namespace charlab {

namespace {
// Orders above this are evaluated by direct phase calls instead of a table.
constexpr std::uint64_t kRootTableMax = 1u << 20;
}  // namespace

CharacterTable::CharacterTable(const Character& chi)
    : q_(chi.modulus()),
      order_(chi.order()),
      parity_sign_(chi.is_even() ? 1 : -1),
      index_(chi.modulus()) {
    for (std::uint64_t n = 0; n < q_; ++n) index_[n] = chi.order_index(n);
    if (order_ <= kRootTableMax) roots_ = unit_roots(order_);
}

SumTrace partial_sums(const Character& chi, std::uint64_t bound) {
    if (bound < 1) throw std::domain_error("partial_sums: bound must be >= 1");
    const CharacterTable table(chi);
    SumTrace trace{CharacterKey::of(chi), bound, {}};
    trace.prefix.reserve(bound);
    Complex s{0.0, 0.0};
    for (std::uint64_t n = 1; n <= bound; ++n) {
        s += table.value(n);
        trace.prefix.push_back(s);
    }
    return trace;
}

double max_partial_sum(const CharacterTable& table) {
    if (table.order() == 1)
        throw std::domain_error("max_partial_sum: unbounded for the principal character");
    Complex s{0.0, 0.0};
    double best = 0.0;
    for (std::uint64_t t = 1; t <= table.modulus(); ++t) {
        s += table.value(t);
        best = std::max(best, std::abs(s));
    }
    return best;
}

double max_partial_sum(const Character& chi) {
    if (chi.is_principal())
        throw std::domain_error("max_partial_sum: unbounded for the principal character");
    return max_partial_sum(CharacterTable(chi));
}

GaussSum gauss_sum(const Character& chi) {
    const std::uint64_t q = chi.modulus();
    Complex acc{0.0, 0.0};
    for (std::uint64_t b = 0; b < q; ++b) {
        const auto angle = chi(static_cast<std::int64_t>(b));
        if (!angle) continue;
        acc += (*angle * RationalAngle(static_cast<std::int64_t>(b), static_cast<std::int64_t>(q)))
                   .to_complex();
    }
    return {CharacterKey::of(chi), acc};
}

Complex theta_sum(const CharacterTable& table, double theta, double x) {
    if (!(x >= 1.0)) throw std::domain_error("theta_sum: x must be >= 1");
    const auto bound = static_cast<std::uint64_t>(std::floor(x));
    const double sign = table.sign_at_minus_one();
    Complex acc{0.0, 0.0};
    for (std::uint64_t n = 1; n <= bound; ++n) {
        const std::uint32_t idx = table.index(n);
        if (idx == Character::kNonUnit) continue;
        const Complex phase = unit_phase(static_cast<double>(n) * theta);
        acc += table.root(idx) * (phase - sign * std::conj(phase)) / static_cast<double>(n);
    }
    return acc;
}

Complex theta_sum(const Character& chi, double theta, double x) {
    return theta_sum(CharacterTable(chi), theta, x);
}

ThetaMax max_theta_sum(const CharacterTable& table, double x) {
    if (!(x >= 1.0)) throw std::domain_error("max_theta_sum: x must be >= 1");
    const auto bound = static_cast<std::uint64_t>(std::floor(x));
    const auto grid = static_cast<std::uint64_t>(std::ceil(8.0 * x));
    const auto roots = unit_roots(grid);
    const double sign = table.sign_at_minus_one();

    std::uint64_t best_j = 0;
    double best = -1.0;
    for (std::uint64_t j = 0; j < grid; ++j) {
        Complex acc{0.0, 0.0};
        std::uint64_t idx = 0;  // n*j mod grid, advanced incrementally
        for (std::uint64_t n = 1; n <= bound; ++n) {
            idx += j;
            if (idx >= grid) idx -= grid;
            const std::uint32_t ci = table.index(n);
            if (ci == Character::kNonUnit) continue;
            const Complex phase = roots[idx];
            acc += table.root(ci) * (phase - sign * std::conj(phase)) / static_cast<double>(n);
        }
        const double a = std::abs(acc);
        if (a > best) {
            best = a;
            best_j = j;
        }
    }

    // Local ternary refinement around the best grid point, run until the
    // bracket value is stable to relative 1e-6.
    const double h = 1.0 / static_cast<double>(grid);
    double lo = static_cast<double>(best_j) * h - h;
    double hi = static_cast<double>(best_j) * h + h;
    auto eval = [&](double theta) { return std::abs(theta_sum(table, theta, x)); };
    double theta_star = static_cast<double>(best_j) * h;
    double value_star = eval(theta_star);
    for (int iter = 0; iter < 200; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        const double f1 = eval(m1), f2 = eval(m2);
        if (f1 < f2) {
            lo = m1;
            if (f2 > value_star) {
                value_star = f2;
                theta_star = m2;
            }
        } else {
            hi = m2;
            if (f1 > value_star) {
                value_star = f1;
                theta_star = m1;
            }
        }
        if (std::abs(f1 - f2) <= 1e-6 * std::max(value_star, 1e-12) && hi - lo < h * 0.25) break;
    }
    if (theta_star < 0.0) theta_star += 1.0;
    return {theta_star, value_star};
}

ThetaMax max_theta_sum(const Character& chi, double x) {
    return max_theta_sum(CharacterTable(chi), x);
}

Complex twisted_harmonic_sum(const Character& chi, const Character& psi, std::uint64_t N) {
    if (N < 1) throw std::domain_error("twisted_harmonic_sum: N must be >= 1");
    Complex acc{0.0, 0.0};
    for (std::uint64_t n = 1; n <= N; ++n) {
        const auto a = chi(static_cast<std::int64_t>(n));
        if (!a) continue;
        const auto b = psi(static_cast<std::int64_t>(n));
        if (!b) continue;
        acc += (*a * b->conj()).to_complex() / static_cast<double>(n);
    }
    return acc;
}

double max_twisted_harmonic(const Character& chi, const Character& psi, std::uint64_t bound) {
    if (bound < 1) throw std::domain_error("max_twisted_harmonic: bound must be >= 1");
    Complex acc{0.0, 0.0};
    double best = 0.0;
    for (std::uint64_t n = 1; n <= bound; ++n) {
        const auto a = chi(static_cast<std::int64_t>(n));
        if (a) {
            const auto b = psi(static_cast<std::int64_t>(n));
            if (b) acc += (*a * b->conj()).to_complex() / static_cast<double>(n);
        }
        best = std::max(best, std::abs(acc));
    }
    return best;
}

}  // namespace charlab
