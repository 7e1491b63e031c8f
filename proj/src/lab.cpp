#include "charlab/lab.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "charlab/arithmetic.hpp"
#include "charlab/charsums.hpp"
#include "charlab/euler.hpp"
#include "charlab/kernels.hpp"
#include "charlab/multiplicative.hpp"
#include "charlab/numeric.hpp"
#include "charlab/polya.hpp"
#include "charlab/pretense.hpp"

namespace charlab {

namespace {

// Suite tolerances, pinned here so every caller sees the same gates.
constexpr double kGaussRelTol = 1e-6;
constexpr double kOrthogonalityTol = 1e-9;
constexpr double kTrendSlopeTol = 0.1;
constexpr double kFejerNonnegFloor = -1e-12;
constexpr double kFejerMeanTol = 1e-10;
constexpr double kLemma21Slack = 1e-9;

constexpr std::uint64_t kGaussMaxModulus = 500;
constexpr std::uint64_t kOrthogonalityMaxModulus = 200;
constexpr std::uint64_t kFejerMaxN = 200;
constexpr std::size_t kTheorem1Buckets = 6;

double delta_closed_form(std::uint64_t g) {
    const auto gd = static_cast<double>(g);
    return 1.0 - gd / std::numbers::pi * std::sin(std::numbers::pi / gd);
}

std::vector<Character> primitive_pool(std::uint64_t max_modulus, Parity parity) {
    std::vector<Character> pool;
    for (std::uint64_t m = 3; m <= max_modulus; ++m)
        for (const Character& chi : enumerate_characters(m))
            if (chi.is_primitive() && chi.parity() == parity) pool.push_back(chi);
    return pool;
}

ScanRecord make_record(const Character& chi, const std::vector<Character>& psi_pool,
                       double epsilon) {
    const std::uint64_t q = chi.modulus();
    ScanRecord rec;
    rec.q = q;
    rec.char_exps = chi.exponents();
    rec.order = chi.order();
    rec.parity = chi.parity();
    rec.conductor = chi.conductor();
    rec.max_sum = max_partial_sum(chi);
    const double sqrt_q = std::sqrt(static_cast<double>(q));
    rec.max_over_sqrtq = rec.max_sum / sqrt_q;

    const double y = std::max(std::log(static_cast<double>(q)), 2.0);
    double best = std::numeric_limits<double>::infinity();
    const Character* best_psi = nullptr;
    for (const Character& psi : psi_pool) {
        const double d2 = distance_squared(chi, psi, y).squared;
        if (d2 < best) {
            best = d2;
            best_psi = &psi;
        }
    }
    if (best_psi == nullptr) throw std::domain_error("make_record: empty psi pool");
    rec.psi_modulus = best_psi->modulus();
    rec.psi_exps = best_psi->exponents();
    rec.dist_sq = best;

    const Theorem1Ratio t1 = theorem1_ratio_from(rec.max_sum, q, rec.psi_modulus, rec.dist_sq);
    rec.t1_lhs = t1.lhs;
    rec.t1_rhs0 = t1.rhs0;
    rec.t1_ratio = t1.ratio;

    const double loglog = std::log(std::log(static_cast<double>(q)));
    rec.paley_norm = rec.max_sum / (sqrt_q * loglog);
    const double exponent = 1.0 - delta_closed_form(rec.order) - epsilon;
    rec.gs_norm = rec.max_sum / (sqrt_q * std::pow(loglog, exponent));
    return rec;
}

std::vector<ScanRecord> flatten(std::vector<std::vector<ScanRecord>> chunks) {
    std::vector<ScanRecord> records;
    std::size_t total = 0;
    for (const auto& c : chunks) total += c.size();
    records.reserve(total);
    for (auto& c : chunks)
        for (auto& rec : c) records.push_back(std::move(rec));
    return records;
}

std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

const char* parity_name(Parity p) { return p == Parity::kOdd ? "odd" : "even"; }

}  // namespace

double delta(std::uint64_t g) {
    if (g < 3 || g % 2 == 0) throw std::domain_error("delta: g must be odd and >= 3");
    return delta_closed_form(g);
}

std::vector<ScanRecord> scan_odd_order(const ScanOptions& options) {
    delta(options.order);  // validates: odd, >= 3
    const std::vector<Character> pool =
        primitive_pool(options.psi_conductor_max, Parity::kOdd);
    if (pool.empty())
        throw std::domain_error("scan_odd_order: no primitive odd psi of conductor <= psi_max");

    std::vector<std::uint64_t> moduli;
    for (std::uint64_t q = std::max<std::uint64_t>(options.q_min, 3); q <= options.q_max; ++q)
        if (q % options.order == 1 && is_prime(q)) moduli.push_back(q);

    std::vector<std::vector<ScanRecord>> chunks(moduli.size());
    parallel_for(moduli.size(), options.threads, [&](std::uint64_t i) {
        for (const Character& chi : characters_of_order(moduli[i], options.order))
            chunks[i].push_back(make_record(chi, pool, options.epsilon));
    });
    return flatten(std::move(chunks));
}

std::vector<ScanRecord> paley_scan(const PaleyOptions& options) {
    const std::vector<Character> odd_pool =
        primitive_pool(options.psi_conductor_max, Parity::kOdd);
    const std::vector<Character> even_pool =
        primitive_pool(options.psi_conductor_max, Parity::kEven);
    if (odd_pool.empty() || even_pool.empty())
        throw std::domain_error("paley_scan: psi pool needs both parities; raise psi_max (>= 5)");

    std::vector<std::uint64_t> moduli;
    for (std::uint64_t q = 5; q <= options.q_max; ++q)
        if (is_prime(q)) moduli.push_back(q);

    std::vector<std::vector<ScanRecord>> chunks(moduli.size());
    parallel_for(moduli.size(), options.threads, [&](std::uint64_t i) {
        const std::uint64_t q = moduli[i];
        auto group = std::make_shared<const UnitGroup>(q);
        const Character chi(group, {static_cast<std::uint32_t>((q - 1) / 2)});
        const auto& pool = chi.is_even() ? odd_pool : even_pool;
        chunks[i].push_back(make_record(chi, pool, options.epsilon));
    });
    return flatten(std::move(chunks));
}

const char* const kCsvHeader =
    "q,char_exps,order,parity,conductor,M,M_over_sqrtq,psi_modulus,psi_exps,"
    "dist_sq,t1_lhs,t1_rhs0,t1_ratio,paley_norm,gs_norm";

std::string to_csv(const std::vector<ScanRecord>& records) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const ScanRecord& r : records) {
        out += std::to_string(r.q);
        out += ',';
        out += CharacterKey{r.q, r.char_exps}.exponents_string();
        out += ',';
        out += std::to_string(r.order);
        out += ',';
        out += parity_name(r.parity);
        out += ',';
        out += std::to_string(r.conductor);
        out += ',';
        out += format_double(r.max_sum);
        out += ',';
        out += format_double(r.max_over_sqrtq);
        out += ',';
        out += std::to_string(r.psi_modulus);
        out += ',';
        out += CharacterKey{r.psi_modulus, r.psi_exps}.exponents_string();
        out += ',';
        out += format_double(r.dist_sq);
        out += ',';
        out += format_double(r.t1_lhs);
        out += ',';
        out += format_double(r.t1_rhs0);
        out += ',';
        out += format_double(r.t1_ratio);
        out += ',';
        out += format_double(r.paley_norm);
        out += ',';
        out += format_double(r.gs_norm);
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<ScanRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ScanRecord& r : records) {
        nlohmann::ordered_json o;
        o["q"] = r.q;
        o["char_exps"] = r.char_exps;
        o["order"] = r.order;
        o["parity"] = parity_name(r.parity);
        o["conductor"] = r.conductor;
        o["M"] = r.max_sum;
        o["M_over_sqrtq"] = r.max_over_sqrtq;
        o["psi_modulus"] = r.psi_modulus;
        o["psi_exps"] = r.psi_exps;
        o["dist_sq"] = r.dist_sq;
        o["t1_lhs"] = r.t1_lhs;
        o["t1_rhs0"] = r.t1_rhs0;
        o["t1_ratio"] = r.t1_ratio;
        o["paley_norm"] = r.paley_norm;
        o["gs_norm"] = r.gs_norm;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

void write_records(std::ostream& out, const std::vector<ScanRecord>& records,
                   RecordFormat format) {
    out << (format == RecordFormat::kCsv ? to_csv(records) : to_json(records));
}

namespace {

// --- verification suites -------------------------------------------------

SuiteReport gauss_suite(unsigned threads) {
    SuiteReport report;
    report.name = "gauss";
    report.worst_label = "max relative error of |tau|^2 vs q";

    struct PerQ {
        std::uint64_t run = 0, passed = 0;
        double worst = 0.0;
    };
    std::vector<PerQ> partial(kGaussMaxModulus);
    parallel_for(kGaussMaxModulus, threads, [&](std::uint64_t i) {
        const std::uint64_t q = i + 1;
        PerQ local;
        for (const Character& chi : enumerate_characters(q)) {
            if (!chi.is_primitive()) continue;
            const Complex tau = gauss_sum(chi).value;
            const double rel =
                std::abs(std::norm(tau) - static_cast<double>(q)) / static_cast<double>(q);
            ++local.run;
            if (rel <= kGaussRelTol) ++local.passed;
            local.worst = std::max(local.worst, rel);
        }
        partial[i] = local;
    });
    for (const PerQ& p : partial) {
        report.cases_run += p.run;
        report.cases_passed += p.passed;
        report.worst = std::max(report.worst, p.worst);
    }
    return report;
}

SuiteReport orthogonality_suite(unsigned threads) {
    SuiteReport report;
    report.name = "orthogonality";
    report.worst_label = "max deviation from the orthogonality relations";

    struct PerQ {
        std::uint64_t run = 0, passed = 0;
        double worst = 0.0;
    };
    std::vector<PerQ> partial(kOrthogonalityMaxModulus);
    parallel_for(kOrthogonalityMaxModulus, threads, [&](std::uint64_t i) {
        const std::uint64_t q = i + 1;
        const std::vector<Character> chars = enumerate_characters(q);
        const double phi = static_cast<double>(chars.size());
        std::vector<CharacterTable> tables;
        tables.reserve(chars.size());
        for (const Character& chi : chars) tables.emplace_back(chi);

        PerQ local;
        auto record = [&](double deviation) {
            ++local.run;
            if (deviation <= kOrthogonalityTol) ++local.passed;
            local.worst = std::max(local.worst, deviation);
        };

        // Row relations: sum_n chi_i(n) conj(chi_j(n)) = phi(q) [i == j].
        for (std::size_t a = 0; a < tables.size(); ++a)
            for (std::size_t b = a; b < tables.size(); ++b) {
                Complex s{0.0, 0.0};
                for (std::uint64_t n = 0; n < q; ++n)
                    s += tables[a].value(n) * std::conj(tables[b].value(n));
                const double expected = (a == b) ? phi : 0.0;
                record(std::abs(s - Complex{expected, 0.0}));
            }

        // Column relations: sum_chi chi(u) conj(chi(v)) = phi(q) [u == v].
        std::vector<std::uint64_t> units;
        const UnitGroup& group = chars.front().group();
        for (std::uint64_t n = 0; n < q; ++n)
            if (group.is_unit(n)) units.push_back(n);
        for (std::size_t a = 0; a < units.size(); ++a)
            for (std::size_t b = a; b < units.size(); ++b) {
                Complex s{0.0, 0.0};
                for (const CharacterTable& t : tables)
                    s += t.value(units[a]) * std::conj(t.value(units[b]));
                const double expected = (a == b) ? phi : 0.0;
                record(std::abs(s - Complex{expected, 0.0}));
            }
        partial[i] = local;
    });
    for (const PerQ& p : partial) {
        report.cases_run += p.run;
        report.cases_passed += p.passed;
        report.worst = std::max(report.worst, p.worst);
    }
    return report;
}

SuiteReport polya_suite(unsigned threads) {
    SuiteReport report;
    report.name = "polya";
    report.worst_label = "max expansion error / log q";

    const std::array<std::uint64_t, 5> primes = {101, 211, 401, 809, 1601};
    std::vector<Character> chars;
    std::vector<std::size_t> prime_of;
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (const Character& chi : enumerate_characters(primes[i])) {
            if (chi.is_principal()) continue;  // prime modulus: the rest are primitive
            chars.push_back(chi);
            prime_of.push_back(i);
        }

    std::vector<double> eolq(chars.size());
    parallel_for(chars.size(), threads, [&](std::uint64_t k) {
        eolq[k] = polya_worst_error(chars[k]).error_over_log_q;
    });

    std::array<double, 5> per_prime{};
    for (std::size_t k = 0; k < chars.size(); ++k) {
        ++report.cases_run;
        if (std::isfinite(eolq[k])) ++report.cases_passed;
        report.worst = std::max(report.worst, eolq[k]);
        per_prime[prime_of[k]] = std::max(per_prime[prime_of[k]], eolq[k]);
    }

    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        xs.push_back(std::log(static_cast<double>(primes[i])));
        ys.push_back(per_prime[i]);
    }
    const double slope = least_squares_slope(xs, ys);
    report.trend_slope = slope;
    ++report.cases_run;
    if (std::abs(slope) <= kTrendSlopeTol) ++report.cases_passed;
    return report;
}

SuiteReport fejer_suite(std::uint64_t seed, unsigned /*threads*/) {
    SuiteReport report;
    report.name = "fejer";
    report.worst_label = "min kernel value sampled";
    report.worst = std::numeric_limits<double>::infinity();

    for (std::uint64_t N = 1; N <= kFejerMaxN; ++N) {
        // Nonnegativity on a grid plus seeded off-grid points.
        double min_value = std::numeric_limits<double>::infinity();
        const std::uint64_t grid = 8 * N + 3;
        for (std::uint64_t j = 0; j < grid; ++j)
            min_value = std::min(
                min_value, fejer(N, static_cast<double>(j) / static_cast<double>(grid)));
        for (std::uint64_t k = 0; k < 16; ++k)
            min_value =
                std::min(min_value, fejer(N, uniform_unit(splitmix64(seed ^ (N * 16 + k)))));
        ++report.cases_run;
        if (min_value >= kFejerNonnegFloor) ++report.cases_passed;
        report.worst = std::min(report.worst, min_value);

        // Discrete mean value: (1/K) sum_{j<K} F_N(j/K) = 1 exactly once K > 2N.
        const std::uint64_t K = 2 * N + 1;
        KahanSum mean;
        for (std::uint64_t j = 0; j < K; ++j)
            mean.add(fejer(N, static_cast<double>(j) / static_cast<double>(K)));
        ++report.cases_run;
        if (std::abs(mean.value() / static_cast<double>(K) - 1.0) <= kFejerMeanTol)
            ++report.cases_passed;
    }
    return report;
}

std::vector<std::unique_ptr<const MultiplicativeFunction>> lemma21_family(std::uint64_t seed) {
    std::vector<std::unique_ptr<const MultiplicativeFunction>> family;
    for (std::uint64_t i = 0; i < 100; ++i)
        family.push_back(std::make_unique<RandomUnimodular>(splitmix64(seed + i)));
    for (std::uint64_t q = 1; q <= 50; ++q)
        for (const Character& chi : enumerate_characters(q))
            family.push_back(std::make_unique<CharacterFunction>(chi));
    return family;
}

SuiteReport lemma21_suite(std::uint64_t seed, unsigned threads) {
    SuiteReport report;
    report.name = "lemma21";
    report.worst_label = "min lower-bound ratio";
    report.worst = std::numeric_limits<double>::infinity();

    const auto family = lemma21_family(seed);
    const std::array<double, 3> exact_y = {1e2, 1e3, 1e4};
    const std::array<double, 7> trend_y = {100, 200, 400, 800, 1600, 3200, 6400};

    struct PerMember {
        std::array<bool, 3> inequality_ok{};
        std::array<double, 7> ratio{};
    };
    std::vector<PerMember> partial(family.size());
    parallel_for(family.size(), threads, [&](std::uint64_t i) {
        const MultiplicativeFunction& f = *family[i];
        PerMember local;
        for (std::size_t k = 0; k < exact_y.size(); ++k) {
            const double lhs = std::abs(shifted_series(f, exact_y[k]).value);
            const double rhs = harmonic_partial_max(f, exact_y[k]);
            local.inequality_ok[k] = lhs <= rhs + kLemma21Slack;
        }
        for (std::size_t k = 0; k < trend_y.size(); ++k)
            local.ratio[k] = lemma21_ratio(f, trend_y[k]);
        partial[i] = local;
    });

    std::array<double, 7> min_ratio;
    min_ratio.fill(std::numeric_limits<double>::infinity());
    for (const PerMember& p : partial) {
        for (const bool ok : p.inequality_ok) {
            ++report.cases_run;
            if (ok) ++report.cases_passed;
        }
        for (std::size_t k = 0; k < p.ratio.size(); ++k) {
            min_ratio[k] = std::min(min_ratio[k], p.ratio[k]);
            report.worst = std::min(report.worst, p.ratio[k]);
        }
    }

    std::vector<double> xs, ys;
    for (std::size_t k = 0; k < trend_y.size(); ++k) {
        xs.push_back(std::log(trend_y[k]));
        ys.push_back(min_ratio[k]);
    }
    const double slope = least_squares_slope(xs, ys);
    report.trend_slope = slope;
    ++report.cases_run;
    if (slope >= -kTrendSlopeTol) ++report.cases_passed;
    return report;
}

SuiteReport lemma22_suite(std::uint64_t seed, unsigned threads) {
    SuiteReport report;
    report.name = "lemma22";
    report.worst_label = "max two-sided maximization gap";

    constexpr std::uint64_t kSequences = 50;
    const std::array<double, 4> xs_scale = {50, 100, 200, 400};

    std::vector<std::array<double, 4>> gaps(kSequences);
    parallel_for(kSequences, threads, [&](std::uint64_t s) {
        const CoefficientSequence a =
            CoefficientSequence::random_unimodular(400, splitmix64(seed ^ (s + 1)));
        for (std::size_t k = 0; k < xs_scale.size(); ++k)
            gaps[s][k] = lemma22_gap(a, xs_scale[k]);
    });

    std::vector<double> xs, ys;
    for (std::uint64_t s = 0; s < kSequences; ++s)
        for (std::size_t k = 0; k < xs_scale.size(); ++k) {
            ++report.cases_run;
            if (gaps[s][k] >= 0.0) ++report.cases_passed;
            report.worst = std::max(report.worst, gaps[s][k]);
            xs.push_back(std::log(xs_scale[k]));
            ys.push_back(gaps[s][k]);
        }

    const double slope = least_squares_slope(xs, ys);
    report.trend_slope = slope;
    ++report.cases_run;
    if (slope <= kTrendSlopeTol) ++report.cases_passed;
    return report;
}

SuiteReport theorem1_suite(unsigned threads) {
    SuiteReport report;
    report.name = "theorem1";
    report.worst_label = "min theorem-1 ratio";
    report.worst = std::numeric_limits<double>::infinity();

    ScanOptions options;
    options.order = 3;
    options.q_min = 7;
    options.q_max = 10000;
    options.psi_conductor_max = 25;
    options.threads = threads;
    const std::vector<ScanRecord> records = scan_odd_order(options);

    for (const ScanRecord& r : records) {
        ++report.cases_run;
        const bool finite = std::isfinite(r.max_sum) && std::isfinite(r.dist_sq) &&
                            std::isfinite(r.t1_lhs) && std::isfinite(r.t1_rhs0) &&
                            std::isfinite(r.t1_ratio) && std::isfinite(r.paley_norm) &&
                            std::isfinite(r.gs_norm);
        if (finite && r.t1_ratio > 0.0) ++report.cases_passed;
        report.worst = std::min(report.worst, r.t1_ratio);
    }

    // Bucket minima of the ratio across a geometric split of [100, q_max],
    // the range where the ratio's normalization is meaningful (log log q > 1).
    // The ratio is bounded below by an unspecified absolute constant, so its
    // drift is measured on the log scale: a slope of -s means the minima shrink
    // by a factor e^s per e-fold of q, and non-decay asks that rate to vanish.
    const double lo = std::log(100.0);
    const double hi = std::log(static_cast<double>(options.q_max));
    struct Bucket {
        double min_ratio = std::numeric_limits<double>::infinity();
        double log_q = 0.0;
    };
    std::array<Bucket, kTheorem1Buckets> buckets;
    for (const ScanRecord& r : records) {
        if (r.q < 100) continue;
        const double lq = std::log(static_cast<double>(r.q));
        auto k = static_cast<std::size_t>((lq - lo) / (hi - lo) * kTheorem1Buckets);
        k = std::min(k, kTheorem1Buckets - 1);
        if (r.t1_ratio < buckets[k].min_ratio) buckets[k] = {r.t1_ratio, lq};
    }
    std::vector<double> xs, ys;
    for (const Bucket& b : buckets)
        if (std::isfinite(b.min_ratio) && b.min_ratio > 0.0) {
            xs.push_back(b.log_q);
            ys.push_back(std::log(b.min_ratio));
        }
    ++report.cases_run;
    if (xs.size() >= 2) {
        const double slope = least_squares_slope(xs, ys);
        report.trend_slope = slope;
        if (slope >= -kTrendSlopeTol) ++report.cases_passed;
    }
    return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"polya",    "fejer",         "lemma21",
                                                   "lemma22",  "theorem1",      "orthogonality",
                                                   "gauss"};
    return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, unsigned threads) {
    if (name == "polya") return polya_suite(threads);
    if (name == "fejer") return fejer_suite(seed, threads);
    if (name == "lemma21") return lemma21_suite(seed, threads);
    if (name == "lemma22") return lemma22_suite(seed, threads);
    if (name == "theorem1") return theorem1_suite(threads);
    if (name == "orthogonality") return orthogonality_suite(threads);
    if (name == "gauss") return gauss_suite(threads);
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

}  // namespace charlab
