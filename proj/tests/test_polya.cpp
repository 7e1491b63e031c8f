#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"

#include "charlab/characters.hpp"
#include "charlab/charsums.hpp"
#include "charlab/polya.hpp"

using namespace charlab;

namespace {

Character quad_character(std::uint64_t q) {
    for (auto& chi : enumerate_characters(q))
        if (chi.order() == 2 && chi.is_primitive()) return chi;
    throw std::logic_error("no primitive quadratic character");
}

}  // namespace

TEST_CASE("polya expansion endpoints") {
    const Character quad5 = quad_character(5);

    const ExpansionReport r1 = polya_error(quad5, 1);
    CHECK(r1.t == 1);
    CHECK(std::abs(r1.lhs - Complex{1.0, 0.0}) < 1e-15);

    const ExpansionReport rq = polya_error(quad5, 5);
    CHECK(std::abs(rq.lhs) < 1e-12);  // S(q) = 0

    CHECK_THROWS_AS(polya_error(quad5, 0), std::domain_error);
    CHECK_THROWS_AS(polya_error(quad5, 6), std::domain_error);
    CHECK_THROWS_AS(polya_error(enumerate_characters(5).front(), 1), std::domain_error);
}

TEST_CASE("polya expansion error stays well under log q") {
    for (const std::uint64_t q : {5ULL, 13ULL, 101ULL}) {
        for (const auto& chi : enumerate_characters(q)) {
            if (!chi.is_primitive()) continue;
            const ExpansionReport worst = polya_worst_error(chi);
            CHECK(std::isfinite(worst.error));
            CHECK(worst.error_over_log_q < 1.0);
            CHECK(worst.error ==
                  doctest::Approx(worst.error_over_log_q *
                                  std::max(std::log(static_cast<double>(q)), 1.0)));
        }
    }
}

TEST_CASE("even polya max") {
    const Character quad5 = quad_character(5);
    CHECK(even_polya_max(quad5) >= 0.8333);

    const Character odd3 = enumerate_characters(3)[1];
    CHECK_THROWS_AS(even_polya_max(odd3), std::domain_error);
    CHECK_THROWS_AS(even_polya_max(enumerate_characters(5).front()), std::domain_error);
}

TEST_CASE("odd twist identity, pinned cases") {
    const Character quad5 = quad_character(5);
    const Character odd3 = enumerate_characters(3)[1];

    CHECK(twist_identity_check(quad5, odd3, 4) < 1e-10);

    // Both sides equal 2 tau(psi) S = 2 (i sqrt 3)(1.75).
    const Complex rhs = 2.0 * gauss_sum(odd3).value * twisted_harmonic_sum(quad5, odd3, 4);
    CHECK(std::abs(rhs - Complex{0.0, 3.5 * std::sqrt(3.0)}) < 1e-12);

    // N = 1: both sides reduce to 2 tau(psi).
    CHECK(twist_identity_check(quad5, odd3, 1) < 1e-12);

    CHECK_THROWS_AS(twist_identity_check(quad5, quad5, 4), std::domain_error);
    // The order-2 character mod 9 is induced from mod 3: odd but imprimitive.
    for (const auto& psi : enumerate_characters(9)) {
        if (psi.order() != 2) continue;
        REQUIRE(psi.is_odd());
        CHECK_FALSE(psi.is_primitive());
        CHECK_THROWS_AS(twist_identity_check(quad5, psi, 4), std::domain_error);
    }
    CHECK_THROWS_AS(twist_identity_check(quad5, odd3, 0), std::domain_error);
}

TEST_CASE("odd twist identity, seeded even-character sweep") {
    const Character odd_psis[] = {enumerate_characters(3)[1], enumerate_characters(4)[1],
                                  quad_character(7)};
    int checked = 0;
    for (const std::uint64_t q : {5ULL, 7ULL, 13ULL, 31ULL}) {
        for (const auto& chi : enumerate_characters(q)) {
            if (!chi.is_even() || chi.is_principal()) continue;
            for (const auto& psi : odd_psis) {
                const std::uint64_t N = 3 + (chi.order() + psi.modulus()) % 48;
                CHECK(twist_identity_check(chi, psi, N) < 1e-9 * static_cast<double>(N));
                ++checked;
            }
        }
    }
    CHECK(checked >= 30);
}

TEST_CASE("theorem 1 ratio guards and assembly") {
    const Character odd3 = enumerate_characters(3)[1];
    const Character quad5 = quad_character(5);

    CHECK_THROWS_AS(theorem1_ratio(odd3, odd3), std::domain_error);     // chi odd
    CHECK_THROWS_AS(theorem1_ratio(quad5, quad5), std::domain_error);   // psi even
    const Character cubic7 = characters_of_order(7, 3).front();
    CHECK_THROWS_AS(theorem1_ratio(cubic7, odd3), std::domain_error);   // q < 100

    // Below the guard the unchecked variant still produces a finite record.
    const Theorem1Ratio small = theorem1_ratio_unchecked(cubic7, odd3);
    CHECK(std::isfinite(small.ratio));
    CHECK(small.ratio > 0.0);

    const Character cubic103 = characters_of_order(103, 3).front();
    const Theorem1Ratio r = theorem1_ratio(cubic103, odd3);
    CHECK(r.ratio > 0.0);
    CHECK(r.lhs == doctest::Approx(max_partial_sum(cubic103) + std::sqrt(103.0)));
    CHECK(r.dist_sq >= 0.0);
    CHECK(r.ratio == doctest::Approx(r.lhs / r.rhs0));

    const Theorem1Ratio again = theorem1_ratio_unchecked(cubic103, odd3);
    CHECK(r.lhs == again.lhs);
    CHECK(r.rhs0 == again.rhs0);
    CHECK(r.ratio == again.ratio);

    const Theorem1Ratio assembled =
        theorem1_ratio_from(max_partial_sum(cubic103), 103, 3, r.dist_sq);
    CHECK(assembled.lhs == r.lhs);
    CHECK(assembled.rhs0 == r.rhs0);
    CHECK(assembled.ratio == r.ratio);
}

TEST_CASE("odd order forces even parity, q <= 2000") {
    for (std::uint64_t q = 1; q <= 2000; ++q) {
        for (const auto& chi : enumerate_characters(q)) {
            if (chi.order() % 2 == 1) CHECK(chi.is_even());
        }
    }
}
