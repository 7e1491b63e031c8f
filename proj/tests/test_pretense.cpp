#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "charlab/characters.hpp"
#include "charlab/multiplicative.hpp"
#include "charlab/pretense.hpp"

using namespace charlab;

namespace {

Character nontrivial_mod3() { return enumerate_characters(3)[1]; }

}  // namespace

TEST_CASE("distance from the odd character mod 3 to 1 at y = 10") {
    // Terms: p=2 gives (1-(-1))/2 = 1, p=3 ramified 1/3, p=5 gives 2/5,
    // p=7 gives 0; total 26/15.
    const DistanceResult r =
        distance_squared(nontrivial_mod3(), enumerate_characters(1).front(), 10.0);
    CHECK(r.squared == doctest::Approx(26.0 / 15.0).epsilon(1e-14));
    CHECK(r.cutoff == 10.0);
    CHECK(r.primes_summed == 4);
    CHECK(r.distance() == doctest::Approx(std::sqrt(26.0 / 15.0)).epsilon(1e-14));

    const CharacterFunction f{nontrivial_mod3()};
    const ConstantOne one;
    CHECK(distance_squared(f, one, 10.0).squared == r.squared);
}

TEST_CASE("self distance counts exactly the ramified primes") {
    const ConstantOne one;
    CHECK(distance_squared(one, one, 1000.0).squared == 0.0);

    const Character chi6 = enumerate_characters(6)[1];
    const DistanceResult r = distance_squared(chi6, chi6, 10.0);
    CHECK(r.squared == doctest::Approx(1.0 / 2 + 1.0 / 3).epsilon(1e-15));

    // Principal character mod 210 vs 1: every prime <= 10 is ramified, so the
    // sum is exactly 1/2 + 1/3 + 1/5 + 1/7.
    const DistanceResult s =
        distance_squared(enumerate_characters(210).front(), enumerate_characters(1).front(), 10.0);
    CHECK(s.squared == doctest::Approx(1.1761904761904761905).epsilon(1e-15));
}

TEST_CASE("distance is symmetric to the bit") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const RandomUnimodular f(seed);
        const RandomUnimodular g(seed + 1000);
        CHECK(distance_squared(f, g, 997.0).squared == distance_squared(g, f, 997.0).squared);
    }
    for (std::uint64_t q = 3; q <= 30; ++q) {
        const auto chars = enumerate_characters(q);
        for (std::size_t i = 0; i + 1 < chars.size(); i += 2)
            CHECK(distance_squared(chars[i], chars[i + 1], 500.0).squared ==
                  distance_squared(chars[i + 1], chars[i], 500.0).squared);
    }
}

TEST_CASE("distance grows with the cutoff") {
    const RandomUnimodular f(42);
    const ConstantOne one;
    double prev = -1.0;
    std::uint64_t prev_primes = 0;
    for (const double y : {10.0, 100.0, 1000.0, 10000.0}) {
        const DistanceResult r = distance_squared(f, one, y);
        CHECK(r.squared >= prev);
        CHECK(r.primes_summed >= prev_primes);
        prev = r.squared;
        prev_primes = r.primes_summed;
    }
}

TEST_CASE("triangle inequality for the pretentious distance") {
    const ConstantOne one;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const RandomUnimodular f(splitmix64(seed));
        const RandomUnimodular g(splitmix64(seed) + 17);
        const auto [lhs, rhs] = triangle_check(f, g, one, 100.0);
        CHECK(lhs + 1e-12 >= rhs);
    }
    const CharacterFunction a{nontrivial_mod3()};
    const CharacterFunction b{enumerate_characters(5)[2]};
    const CharacterFunction c{enumerate_characters(7)[3]};
    for (const double y : {100.0, 1000.0, 10000.0}) {
        const auto [lhs, rhs] = triangle_check(a, b, c, y);
        CHECK(lhs + 1e-12 >= rhs);
        CHECK(rhs >= 0.0);
    }
}

TEST_CASE("distance rejects tiny cutoffs") {
    const ConstantOne one;
    CHECK_THROWS_AS(distance_squared(one, one, 1.5), std::domain_error);
    CHECK_NOTHROW(distance_squared(one, one, 2.0));
}
