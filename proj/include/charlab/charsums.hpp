#ifndef CHARLAB_CHARSUMS_HPP
#define CHARLAB_CHARSUMS_HPP

#include <cstdint>
#include <vector>

#include "charlab/characters.hpp"
#include "charlab/numeric.hpp"

namespace charlab {

// Dense, exact value table of a character: chi(n) = e(index[n] / order).
// 4 bytes per residue plus a root table when the order is small enough to
// tabulate. value() follows the identical arithmetic on both paths, so sums
// are bit-stable regardless of which path a modulus lands on.
class CharacterTable {
public:
    explicit CharacterTable(const Character& chi);

    std::uint64_t modulus() const { return q_; }
    std::uint64_t order() const { return order_; }
    int sign_at_minus_one() const { return parity_sign_; }

    std::uint32_t index(std::uint64_t n) const { return index_[n % q_]; }

    Complex value(std::uint64_t n) const {
        const std::uint32_t idx = index_[n % q_];
        if (idx == Character::kNonUnit) return {0.0, 0.0};
        return root(idx);
    }

    Complex root(std::uint32_t idx) const {
        if (!roots_.empty()) return roots_[idx];
        return unit_phase(static_cast<double>(idx) / static_cast<double>(order_));
    }

private:
    std::uint64_t q_;
    std::uint64_t order_;
    int parity_sign_;  // chi(-1)
    std::vector<std::uint32_t> index_;
    std::vector<Complex> roots_;
};

// Prefix sums S(t) = sum_{n <= t} chi(n), t = 1..bound.
struct SumTrace {
    CharacterKey character;
    std::uint64_t bound = 0;
    std::vector<Complex> prefix;  // prefix[t-1] = S(t)

    Complex at(std::uint64_t t) const { return prefix.at(t - 1); }
};

struct GaussSum {
    CharacterKey character;
    Complex value;
};

// One O(T) pass; values exact per term, converted to complex at accumulation.
SumTrace partial_sums(const Character& chi, std::uint64_t bound);

// M(chi) = max_{1 <= t <= q} |S(t)|. By periodicity and S(q) = 0 this is the
// supremum over all real t. Throws std::domain_error for the principal
// character (its partial sums are unbounded).
double max_partial_sum(const Character& chi);
double max_partial_sum(const CharacterTable& table);

// tau(chi) = sum_{b mod q} chi(b) e(b/q), exact angles per term.
GaussSum gauss_sum(const Character& chi);

// sum_{1 <= |n| <= x} (chi(n)/n) e(n theta), using chi(-n) = chi(-1) chi(n).
Complex theta_sum(const Character& chi, double theta, double x);
Complex theta_sum(const CharacterTable& table, double theta, double x);

struct ThetaMax {
    double theta = 0.0;
    double value = 0.0;
};

// Maximizes |theta_sum| over a ceil(8x)-point uniform grid, then refines
// around the best grid point by ternary search to relative 1e-6.
ThetaMax max_theta_sum(const Character& chi, double x);
ThetaMax max_theta_sum(const CharacterTable& table, double x);

// sum_{n <= N} chi(n) conj(psi(n)) / n, exact angle products per term.
Complex twisted_harmonic_sum(const Character& chi, const Character& psi, std::uint64_t N);

// max_{1 <= N <= bound} |twisted_harmonic_sum(chi, psi, N)|, one incremental pass.
double max_twisted_harmonic(const Character& chi, const Character& psi, std::uint64_t bound);

}  // namespace charlab

#endif  // CHARLAB_CHARSUMS_HPP
