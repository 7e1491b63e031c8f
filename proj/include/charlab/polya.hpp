#ifndef CHARLAB_POLYA_HPP
#define CHARLAB_POLYA_HPP

#include <cstdint>

#include "charlab/characters.hpp"
#include "charlab/charsums.hpp"

namespace charlab {

// Two-sided evaluation of the Fourier expansion of a partial character sum:
// lhs = S_chi(t), rhs = (tau(chi)/2 pi i) sum_{1<=|n|<=q} (conj(chi)(n)/n)(1 - e(-nt/q)).
struct ExpansionReport {
    CharacterKey character;
    std::uint64_t t = 0;
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double error = 0.0;
    double error_over_log_q = 0.0;  // denominator clamped at 1 for q <= 2
};

struct Theorem1Ratio {
    double lhs = 0.0;      // M(chi) + sqrt(q)
    double rhs0 = 0.0;     // (sqrt(qm)/phi(m)) (log log q / max(log log log q, 1)) exp(-D^2)
    double ratio = 0.0;    // lhs / rhs0
    double dist_sq = 0.0;  // D(chi, psi; log q)^2
};

// Both sides computed independently (prefix sums vs O(q) Fourier sum).
// chi must be primitive, 1 <= t <= q.
ExpansionReport polya_error(const Character& chi, std::uint64_t t);

// Worst-t expansion error: every t in [1, q] for q <= 2000, 64 stratified
// sample points above that.
ExpansionReport polya_worst_error(const Character& chi);

// max_theta |sum_{1<=|n|<=q} (chi(n)/n) e(n theta)| for primitive even chi.
double even_polya_max(const Character& chi);

// |LHS - RHS| of the odd-twist identity
//   sum_{b mod m} psi(b) (sum_{1<=|n|<=N} (chi(n)/n) e(nb/m))
//     = 2 tau(psi) sum_{n<=N} chi(n) conj(psi)(n) / n,
// an exact finite identity when psi is primitive and odd.
double twist_identity_check(const Character& chi, const Character& psi, std::uint64_t N);

// chi primitive even mod q (q >= 100), psi primitive odd mod m.
Theorem1Ratio theorem1_ratio(const Character& chi, const Character& psi);

// Same arithmetic without the parity/primitivity/size guards; used by family
// scans that include moduli below the guard. The distance cutoff log q is
// clamped below at 2 so the prime sum is well formed for tiny q.
Theorem1Ratio theorem1_ratio_unchecked(const Character& chi, const Character& psi);

// Assembles the ratio from precomputed pieces (M(chi), D(chi,psi;log q)^2)
// with the same arithmetic as theorem1_ratio_unchecked, so scans that already
// hold those values produce bit-identical records.
Theorem1Ratio theorem1_ratio_from(double max_sum, std::uint64_t q, std::uint64_t psi_modulus,
                                  double dist_sq);

}  // namespace charlab

#endif  // CHARLAB_POLYA_HPP
