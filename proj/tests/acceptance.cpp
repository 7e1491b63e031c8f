// Acceptance gate for the library: one line per criterion, nonzero exit when
// any criterion fails. Every tolerance is pinned next to the check it gates.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "charlab/characters.hpp"
#include "charlab/charsums.hpp"
#include "charlab/kernels.hpp"
#include "charlab/lab.hpp"
#include "charlab/multiplicative.hpp"
#include "charlab/numeric.hpp"
#include "charlab/polya.hpp"
#include "charlab/pretense.hpp"

namespace {

using namespace charlab;

constexpr std::uint64_t kSeed = 42;
constexpr unsigned kThreads = 4;

struct Outcome {
    bool ok = false;
    std::string detail;
};

Outcome suite_outcome(const char* name) {
    const SuiteReport r = run_suite(name, kSeed, kThreads);
    char buf[192];
    if (r.trend_slope.has_value())
        std::snprintf(buf, sizeof(buf), "%llu/%llu cases, %s = %.3g, trend slope %.4f",
                      static_cast<unsigned long long>(r.cases_passed),
                      static_cast<unsigned long long>(r.cases_run), r.worst_label.c_str(),
                      r.worst, *r.trend_slope);
    else
        std::snprintf(buf, sizeof(buf), "%llu/%llu cases, %s = %.3g",
                      static_cast<unsigned long long>(r.cases_passed),
                      static_cast<unsigned long long>(r.cases_run), r.worst_label.c_str(),
                      r.worst);
    return {r.passed(), buf};
}

// 1. Exact finite identities: the odd-twist identity, the Fejer convolution
//    identity, and the finite Fourier inversion behind the Gauss sum.
Outcome criterion_identities() {
    constexpr double kTwistTolPerN = 1e-9;   // twist_identity_check < 1e-9 * N
    constexpr double kConvolutionTol = 1e-8;
    constexpr double kDftTol = 1e-9;

    std::vector<Character> even_chis;
    for (std::uint64_t q = 3; q <= 101; ++q)
        for (const Character& chi : enumerate_characters(q))
            if (chi.is_even() && !chi.is_principal()) even_chis.push_back(chi);
    std::vector<Character> odd_psis;
    for (std::uint64_t m = 3; m <= 23; ++m)
        for (const Character& psi : enumerate_characters(m))
            if (psi.is_primitive() && psi.is_odd()) odd_psis.push_back(psi);

    double worst_twist = 0.0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const std::uint64_t h = splitmix64(kSeed + i);
        const Character& chi = even_chis[h % even_chis.size()];
        const Character& psi = odd_psis[splitmix64(h) % odd_psis.size()];
        const std::uint64_t N = 1 + splitmix64(h ^ 0xff) % 500;
        worst_twist = std::max(worst_twist,
                               twist_identity_check(chi, psi, N) / static_cast<double>(N));
    }

    double worst_conv = 0.0;
    for (std::uint64_t i = 0; i < 20; ++i) {
        constexpr std::uint64_t bound = 25;
        const CoefficientSequence a =
            CoefficientSequence::random_unimodular(bound, splitmix64(kSeed ^ (i + 1)));
        const std::uint64_t N = 5 + i;
        const double alpha = uniform_unit(splitmix64(kSeed + 100 + i));
        worst_conv = std::max(worst_conv,
                              fejer_convolution_check(a, N, alpha, 2 * (bound + N) + 1));
    }

    double worst_dft = 0.0;
    for (std::uint64_t m = 1; m <= 100; ++m) {
        const auto roots = unit_roots(m);
        for (const Character& psi : enumerate_characters(m)) {
            if (!psi.is_primitive()) continue;
            const CharacterTable table(psi);
            const Complex tau = gauss_sum(psi).value;
            for (std::uint64_t n = 0; n < m; ++n) {
                Complex s{0.0, 0.0};
                std::uint64_t idx = 0;  // b*n mod m
                for (std::uint64_t b = 0; b < m; ++b) {
                    s += table.value(b) * roots[idx];
                    idx += n;
                    if (idx >= m) idx -= m;
                }
                worst_dft = std::max(worst_dft, std::abs(s - std::conj(table.value(n)) * tau));
            }
        }
    }

    const bool ok =
        worst_twist < kTwistTolPerN && worst_conv < kConvolutionTol && worst_dft < kDftTol;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "worst: twist %.2e/N, convolution %.2e, inversion %.2e",
                  worst_twist, worst_conv, worst_dft);
    return {ok, buf};
}

// 8. Pseudometric structure of the pretentious distance.
Outcome criterion_pseudometric() {
    constexpr double kTriangleSlack = 1e-12;

    bool symmetric = true;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const RandomUnimodular f(splitmix64(kSeed + 2 * i));
        const RandomUnimodular g(splitmix64(kSeed + 2 * i + 1));
        symmetric = symmetric && distance_squared(f, g, 1000.0).squared ==
                                     distance_squared(g, f, 1000.0).squared;
    }
    for (std::uint64_t q = 3; q <= 30; ++q) {
        const auto chars = enumerate_characters(q);
        for (std::size_t i = 0; i + 1 < chars.size(); ++i)
            symmetric = symmetric && distance_squared(chars[i], chars[i + 1], 500.0).squared ==
                                         distance_squared(chars[i + 1], chars[i], 500.0).squared;
    }

    double worst_violation = -1.0;
    for (std::uint64_t t = 0; t < 1000; ++t) {
        const RandomUnimodular f(splitmix64(kSeed ^ (3 * t + 1)));
        const RandomUnimodular g(splitmix64(kSeed ^ (3 * t + 2)));
        const RandomUnimodular h(splitmix64(kSeed ^ (3 * t + 3)));
        for (const double y : {1e2, 1e3, 1e4}) {
            const auto [lhs, rhs] = triangle_check(f, g, h, y);
            worst_violation = std::max(worst_violation, rhs - lhs);
        }
    }

    const bool ok = symmetric && worst_violation <= kTriangleSlack;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "symmetry %s, worst triangle violation %.2e",
                  symmetric ? "bit-exact" : "BROKEN", worst_violation);
    return {ok, buf};
}

// 9. The delta constants against an independent long-double series evaluation.
long double sin_series(long double x) {
    long double term = x;
    long double sum = x;
    for (int k = 1; k <= 40; ++k) {
        term *= -(x * x) / static_cast<long double>((2 * k) * (2 * k + 1));
        sum += term;
        if (std::fabs(static_cast<double>(term)) < 1e-30) break;
    }
    return sum;
}

long double delta_reference(unsigned g) {
    constexpr long double pi = 3.141592653589793238462643383279502884L;
    return 1.0L - (static_cast<long double>(g) / pi) * sin_series(pi / g);
}

Outcome criterion_delta() {
    constexpr double kSpotTol = 1e-6;       // published digits 0.1730067
    constexpr double kReferenceTol = 1e-12;  // vs the series evaluation

    double worst_ref = 0.0;
    for (const unsigned g : {3u, 5u, 7u, 9u})
        worst_ref = std::max(
            worst_ref, std::fabs(delta(g) - static_cast<double>(delta_reference(g))));

    const bool ok = std::fabs(delta(3) - 0.1730067) <= kSpotTol && worst_ref <= kReferenceTol &&
                    delta(3) > delta(5) && delta(5) > delta(7) && delta(7) > delta(9) &&
                    delta(9) > 0.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "delta(3) = %.10f, max drift vs series %.2e", delta(3),
                  worst_ref);
    return {ok, buf};
}

// 10. Desk-scale trend evidence: theorem-1 ratio minima plus the Paley-type
//     running maximum of M / (sqrt(q) log log q).
Outcome criterion_desk_scale() {
    const SuiteReport t1 = run_suite("theorem1", kSeed, kThreads);

    PaleyOptions options;
    options.q_max = 100000;
    options.threads = kThreads;
    const std::vector<ScanRecord> records = paley_scan(options);

    double running = 0.0;
    double at_1e3 = 0.0;
    for (const ScanRecord& r : records) {
        running = std::max(running, r.paley_norm);
        if (r.q <= 1000) at_1e3 = running;
    }
    const bool paley_ok = at_1e3 > 0.0 && running >= 0.5 * at_1e3;

    char buf[224];
    std::snprintf(buf, sizeof(buf),
                  "ratio suite %llu/%llu (min %.3f, slope %.4f); paley max %.4f final vs %.4f "
                  "at q<=1e3 over %zu primes",
                  static_cast<unsigned long long>(t1.cases_passed),
                  static_cast<unsigned long long>(t1.cases_run), t1.worst,
                  t1.trend_slope.value_or(0.0), running, at_1e3, records.size());
    return {t1.passed() && paley_ok, buf};
}

// 11. Scan output is byte-identical across thread counts.
Outcome criterion_determinism() {
    ScanOptions options;
    options.order = 3;
    options.q_min = 7;
    options.q_max = 3000;
    options.threads = 1;
    const std::string csv1 = to_csv(scan_odd_order(options));
    options.threads = kThreads;
    const std::string csv4 = to_csv(scan_odd_order(options));

    char buf[128];
    std::snprintf(buf, sizeof(buf), "%zu bytes, threads 1 vs %u %s", csv1.size(), kThreads,
                  csv1 == csv4 ? "identical" : "DIFFER");
    return {csv1 == csv4, buf};
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {"exact finite identities", criterion_identities},
        {"gauss sum modulus law", [] { return suite_outcome("gauss"); }},
        {"orthogonality relations", [] { return suite_outcome("orthogonality"); }},
        {"polya expansion error trend", [] { return suite_outcome("polya"); }},
        {"lemma 2.2 gap", [] { return suite_outcome("lemma22"); }},
        {"lemma 2.1 domination and ratio", [] { return suite_outcome("lemma21"); }},
        {"fejer positivity and mean", [] { return suite_outcome("fejer"); }},
        {"pretentious pseudometric", criterion_pseudometric},
        {"delta constants", criterion_delta},
        {"desk-scale trends", criterion_desk_scale},
        {"thread-count determinism", criterion_determinism},
    };

    std::printf("acceptance gate: seed %llu, %u threads\n",
                static_cast<unsigned long long>(kSeed), kThreads);
    int failures = 0;
    int index = 0;
    for (const Entry& entry : entries) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        const Outcome outcome = entry.fn();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%2d] %-32s %s  (%s; %.1fs)\n", index, entry.name,
                    outcome.ok ? "pass" : "FAIL", outcome.detail.c_str(), seconds);
        std::fflush(stdout);
        if (!outcome.ok) ++failures;
    }
    std::printf("acceptance: %d/11 criteria passed\n", 11 - failures);
    return failures == 0 ? 0 : 1;
}
