#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"

#include "charlab/characters.hpp"
#include "charlab/euler.hpp"
#include "charlab/multiplicative.hpp"

using namespace charlab;

namespace {

// Legendre symbol mod 5 as exact integers, for an implementation-free oracle.
int quad5_value(std::uint64_t n) {
    switch (n % 5) {
        case 1:
        case 4:
            return 1;
        case 2:
        case 3:
            return -1;
        default:
            return 0;
    }
}

}  // namespace

TEST_CASE("harmonic partial max of the constant function is the harmonic number") {
    const ConstantOne one;
    CHECK(harmonic_partial_max(one, 10.0) ==
          doctest::Approx(2.9289682539682539683).epsilon(1e-14));
    CHECK(harmonic_partial_max(one, 100.0) ==
          doctest::Approx(5.1873775176396202608).epsilon(1e-14));
    CHECK(harmonic_partial_max(one, 10.9) ==
          doctest::Approx(2.9289682539682539683).epsilon(1e-14));

    const CharacterFunction odd3{enumerate_characters(3)[1]};
    CHECK(harmonic_partial_max(odd3, 3.0) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(harmonic_partial_max(one, 1.5), std::domain_error);
}

TEST_CASE("shifted series against direct long-double summation") {
    const Character quad5 = enumerate_characters(5)[2];
    REQUIRE(quad5.order() == 2);
    const CharacterFunction f{quad5};
    const double y = 1e4;
    const ShiftedSeries s = shifted_series(f, y);

    CHECK(s.cutoff == y);
    CHECK(s.delta == doctest::Approx(std::log(std::log(y)) / std::log(y)).epsilon(1e-15));
    // y^delta = exp(log log y) = log y, so the tail bound is 1/(delta log y).
    CHECK(s.tail_bound == doctest::Approx(1.0 / (s.delta * std::log(y))).epsilon(1e-12));

    long double acc = 0.0L;
    for (std::uint64_t n = 1; n <= 10000; ++n)
        acc += static_cast<long double>(quad5_value(n)) *
               std::pow(static_cast<long double>(n), -1.0L - static_cast<long double>(s.delta));
    CHECK(std::abs(s.value - Complex{static_cast<double>(acc), 0.0}) < 1e-12);

    CHECK_THROWS_AS(shifted_series(f, 10.0), std::domain_error);
}

TEST_CASE("shifted series is dominated by the harmonic partial max") {
    const ConstantOne one;
    const CharacterFunction quad5{enumerate_characters(5)[2]};
    const CharacterFunction odd3{enumerate_characters(3)[1]};
    const RandomUnimodular r7(7), r8(8);
    const MultiplicativeFunction* fs[] = {&one, &quad5, &odd3, &r7, &r8};
    for (const auto* f : fs) {
        for (const double y : {100.0, 1000.0, 10000.0}) {
            CHECK(std::abs(shifted_series(*f, y).value) <=
                  harmonic_partial_max(*f, y) + 1e-9);
        }
    }
}

TEST_CASE("euler log comparison and the Mertens prime sum") {
    const ConstantOne one;
    CHECK(euler_log_comparison(one, 100.0).prime_sum ==
          doctest::Approx(1.8028172010488709399).epsilon(1e-14));

    // Mertens: sum 1/p = log log y + M + o(1), M = 0.2614972128...
    constexpr double kMertens = 0.26149721284764278375;
    for (const double y : {100.0, 1e3, 1e4, 1e5, 1e6}) {
        const double sum = euler_log_comparison(one, y).prime_sum;
        CHECK(std::abs(sum - std::log(std::log(y)) - kMertens) < 0.05);
    }

    CHECK_THROWS_AS(euler_log_comparison(one, 15.9), std::domain_error);
}

TEST_CASE("euler product log stays within the Mertens-step window") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const RandomUnimodular f(seed);
        for (const double y : {100.0, 1e3, 1e4, 1e5}) {
            const EulerComparison c = euler_log_comparison(f, y);
            CHECK(c.gap == std::abs(c.log_abs_f - c.prime_sum));
            CHECK(c.gap / (std::log(std::log(std::log(y))) + 1.0) < 3.0);
        }
    }
}

TEST_CASE("lemma 2.1 ratio stays of order one") {
    const ConstantOne one;
    for (const double y : {100.0, 1e3, 1e4}) CHECK(lemma21_ratio(one, y) >= 1.0);

    const CharacterFunction odd3{enumerate_characters(3)[1]};
    CHECK(lemma21_ratio(odd3, 100.0) > 0.0);

    CHECK_THROWS_AS(lemma21_ratio(one, 4.0), std::domain_error);
}
