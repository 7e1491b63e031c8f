#ifndef CHARLAB_LAB_HPP
#define CHARLAB_LAB_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "charlab/characters.hpp"

namespace charlab {

// delta_g = 1 - (g/pi) sin(pi/g); strictly decreasing, -> 0 as g -> infinity.
// g must be odd and >= 3.
double delta(std::uint64_t g);

// One row of a family scan. Every field is recomputable from
// (q, char_exps, psi_modulus, psi_exps) alone.
struct ScanRecord {
    std::uint64_t q = 0;
    std::vector<std::uint32_t> char_exps;
    std::uint64_t order = 0;
    Parity parity = Parity::kEven;
    std::uint64_t conductor = 0;
    double max_sum = 0.0;         // M = max_t |sum_{n<=t} chi(n)|
    double max_over_sqrtq = 0.0;  // M / sqrt(q)
    std::uint64_t psi_modulus = 0;
    std::vector<std::uint32_t> psi_exps;
    double dist_sq = 0.0;   // D(chi, psi; max(log q, 2))^2
    double t1_lhs = 0.0;    // M + sqrt(q)
    double t1_rhs0 = 0.0;   // constant-free lower-bound shape
    double t1_ratio = 0.0;  // t1_lhs / t1_rhs0
    double paley_norm = 0.0;  // M / (sqrt(q) log log q)
    double gs_norm = 0.0;     // M / (sqrt(q) (log log q)^(1 - delta_order - eps))
};

struct ScanOptions {
    std::uint64_t order = 3;
    std::uint64_t q_min = 7;
    std::uint64_t q_max = 10000;
    std::uint64_t psi_conductor_max = 25;
    double epsilon = 0.0;  // shifts the gs_norm exponent to 1 - delta - epsilon
    unsigned threads = 0;  // 0 = hardware concurrency
};

// One record per primitive order-g character per prime q = 1 (mod g) in
// [q_min, q_max]; psi minimizes D(chi, psi; log q)^2 over primitive odd
// characters of conductor <= psi_conductor_max (first minimum in
// (modulus, enumeration) order on ties). Sorted by (q, char_exps); empty
// range yields an empty list. Output is byte-stable across thread counts.
std::vector<ScanRecord> scan_odd_order(const ScanOptions& options);

struct PaleyOptions {
    std::uint64_t q_max = 100000;
    std::uint64_t psi_conductor_max = 25;
    double epsilon = 0.0;
    unsigned threads = 0;
};

// The quadratic character record for every prime q in [5, q_max]; psi is the
// distance-minimizing primitive character of parity opposite to chi, so the
// twisted pair always has odd product parity. Sorted by q.
std::vector<ScanRecord> paley_scan(const PaleyOptions& options);

enum class RecordFormat { kCsv, kJson };

// "q,char_exps,order,parity,conductor,M,M_over_sqrtq,psi_modulus,psi_exps,
//  dist_sq,t1_lhs,t1_rhs0,t1_ratio,paley_norm,gs_norm"
extern const char* const kCsvHeader;

// CSV with the fixed header above; floats at 12 significant digits; exponent
// vectors ';'-joined ("-" when empty); parity "even"/"odd".
std::string to_csv(const std::vector<ScanRecord>& records);

// JSON array mirroring the CSV columns (exponent vectors as integer arrays,
// floats at full precision).
std::string to_json(const std::vector<ScanRecord>& records);

void write_records(std::ostream& out, const std::vector<ScanRecord>& records,
                   RecordFormat format);

struct SuiteReport {
    std::string name;
    std::uint64_t cases_run = 0;
    std::uint64_t cases_passed = 0;
    double worst = 0.0;          // suite-specific extremal statistic
    std::string worst_label;     // what `worst` measures
    std::optional<double> trend_slope;  // set for suites with a regression check

    bool passed() const { return cases_passed == cases_run; }
};

// {"polya", "fejer", "lemma21", "lemma22", "theorem1", "orthogonality", "gauss"}
const std::vector<std::string>& suite_names();

// Runs one verification suite at its documented scale. The seed feeds the
// randomized suites (lemma21, lemma22); all suites are deterministic given
// the seed, independent of the thread count. Unknown names throw
// std::invalid_argument.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, unsigned threads = 0);

}  // namespace charlab

#endif  // CHARLAB_LAB_HPP
