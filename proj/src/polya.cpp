#include "charlab/polya.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "charlab/arithmetic.hpp"
#include "charlab/pretense.hpp"

namespace charlab {

namespace {

constexpr std::uint64_t kFullSweepMax = 2000;
constexpr std::uint64_t kSampledPoints = 64;

// rhs(t) for every requested t in one pass:
//   rhs(t) = (tau/2 pi i) [A - B(t)],   A = (1 - chi(-1)) sum_n u_n,
//   B(t)  = sum_{n=1}^{q} u_n (e(-nt/q) - chi(-1) e(nt/q)),  u_n = conj(chi)(n)/n.
// A vanishes for even chi, recovering the even-character specialization.
class ExpansionRhs {
public:
    explicit ExpansionRhs(const Character& chi)
        : q_(chi.modulus()),
          table_(chi),
          roots_(unit_roots(std::max<std::uint64_t>(q_, 1))),
          tau_(gauss_sum(chi).value) {
        u_.resize(q_ + 1, Complex{0.0, 0.0});
        Complex total{0.0, 0.0};
        for (std::uint64_t n = 1; n <= q_; ++n) {
            const std::uint32_t idx = table_.index(n);
            if (idx == Character::kNonUnit) continue;
            u_[n] = std::conj(table_.root(idx)) / static_cast<double>(n);
            total += u_[n];
        }
        const double sign = table_.sign_at_minus_one();
        constant_ = (1.0 - sign) * total;
        sign_ = sign;
    }

    Complex at(std::uint64_t t) const {
        Complex b{0.0, 0.0};
        std::uint64_t idx = 0;  // n*t mod q
        for (std::uint64_t n = 1; n <= q_; ++n) {
            idx += t;
            if (idx >= q_) idx -= q_;
            if (u_[n] == Complex{0.0, 0.0}) continue;
            const Complex forward = roots_[idx];
            b += u_[n] * (std::conj(forward) - sign_ * forward);
        }
        const Complex two_pi_i{0.0, kTwoPi};
        return tau_ / two_pi_i * (constant_ - b);
    }

private:
    std::uint64_t q_;
    CharacterTable table_;
    std::vector<Complex> roots_;
    Complex tau_;
    std::vector<Complex> u_;
    Complex constant_;
    double sign_ = 1.0;
};

ExpansionReport report_at(const Character& chi, const ExpansionRhs& rhs_eval,
                          const Complex& lhs, std::uint64_t t) {
    ExpansionReport report;
    report.character = CharacterKey::of(chi);
    report.t = t;
    report.lhs = lhs;
    report.rhs = rhs_eval.at(t);
    report.error = std::abs(report.lhs - report.rhs);
    const double denom = std::max(std::log(static_cast<double>(chi.modulus())), 1.0);
    report.error_over_log_q = report.error / denom;
    return report;
}

void require_primitive(const Character& chi, const char* who) {
    if (!chi.is_primitive())
        throw std::domain_error(std::string(who) + ": character must be primitive");
}

}  // namespace

ExpansionReport polya_error(const Character& chi, std::uint64_t t) {
    require_primitive(chi, "polya_error");
    const std::uint64_t q = chi.modulus();
    if (t < 1 || t > q) throw std::domain_error("polya_error: t must lie in [1, q]");
    const ExpansionRhs rhs_eval(chi);
    const CharacterTable table(chi);
    Complex s{0.0, 0.0};
    for (std::uint64_t n = 1; n <= t; ++n) s += table.value(n);
    return report_at(chi, rhs_eval, s, t);
}

ExpansionReport polya_worst_error(const Character& chi) {
    require_primitive(chi, "polya_worst_error");
    const std::uint64_t q = chi.modulus();
    const ExpansionRhs rhs_eval(chi);
    const CharacterTable table(chi);

    ExpansionReport worst;
    worst.error = -1.0;
    if (q <= kFullSweepMax) {
        Complex s{0.0, 0.0};
        for (std::uint64_t t = 1; t <= q; ++t) {
            s += table.value(t);
            ExpansionReport r = report_at(chi, rhs_eval, s, t);
            if (r.error > worst.error) worst = r;
        }
    } else {
        Complex s{0.0, 0.0};
        std::uint64_t done = 0;
        for (std::uint64_t k = 1; k <= kSampledPoints; ++k) {
            const std::uint64_t t = std::max<std::uint64_t>(1, k * q / kSampledPoints);
            for (std::uint64_t n = done + 1; n <= t; ++n) s += table.value(n);
            done = std::max(done, t);
            ExpansionReport r = report_at(chi, rhs_eval, s, t);
            if (r.error > worst.error) worst = r;
        }
    }
    return worst;
}

double even_polya_max(const Character& chi) {
    require_primitive(chi, "even_polya_max");
    if (!chi.is_even()) throw std::domain_error("even_polya_max: character must be even");
    return max_theta_sum(chi, static_cast<double>(chi.modulus())).value;
}

double twist_identity_check(const Character& chi, const Character& psi, std::uint64_t N) {
    require_primitive(psi, "twist_identity_check");
    if (!psi.is_odd()) throw std::domain_error("twist_identity_check: psi must be odd");
    if (N < 1) throw std::domain_error("twist_identity_check: N must be >= 1");

    const auto m = static_cast<std::int64_t>(psi.modulus());
    const auto chi_sign = chi.is_even() ? 1 : -1;
    Complex lhs{0.0, 0.0};
    for (std::int64_t b = 0; b < m; ++b) {
        const auto psi_b = psi(b);
        if (!psi_b) continue;
        Complex inner{0.0, 0.0};
        for (std::uint64_t n = 1; n <= N; ++n) {
            const auto chi_n = chi(static_cast<std::int64_t>(n));
            if (!chi_n) continue;
            const RationalAngle fwd(static_cast<std::int64_t>(n) * b, m);
            // chi(n)/n e(nb/m) + chi(-n)/(-n) e(-nb/m)
            Complex term = (*chi_n * fwd).to_complex();
            term -= static_cast<double>(chi_sign) * (*chi_n * fwd.conj()).to_complex();
            inner += term / static_cast<double>(n);
        }
        lhs += psi_b->to_complex() * inner;
    }
    const Complex rhs = 2.0 * gauss_sum(psi).value * twisted_harmonic_sum(chi, psi, N);
    return std::abs(lhs - rhs);
}

Theorem1Ratio theorem1_ratio_from(double max_sum, std::uint64_t q, std::uint64_t psi_modulus,
                                  double dist_sq) {
    const auto qd = static_cast<double>(q);
    const auto md = static_cast<double>(psi_modulus);
    const double loglog = std::log(std::log(qd));
    const double logloglog = std::max(std::log(loglog), 1.0);
    const double lhs = max_sum + std::sqrt(qd);
    const double rhs0 = std::sqrt(qd * md) / static_cast<double>(euler_phi(psi_modulus)) *
                        (loglog / logloglog) * std::exp(-dist_sq);
    return {lhs, rhs0, lhs / rhs0, dist_sq};
}

Theorem1Ratio theorem1_ratio_unchecked(const Character& chi, const Character& psi) {
    const double y = std::max(std::log(static_cast<double>(chi.modulus())), 2.0);
    const double d2 = distance_squared(chi, psi, y).squared;
    return theorem1_ratio_from(max_partial_sum(chi), chi.modulus(), psi.modulus(), d2);
}

Theorem1Ratio theorem1_ratio(const Character& chi, const Character& psi) {
    require_primitive(chi, "theorem1_ratio");
    require_primitive(psi, "theorem1_ratio");
    if (!chi.is_even()) throw std::domain_error("theorem1_ratio: chi must be even");
    if (!psi.is_odd()) throw std::domain_error("theorem1_ratio: psi must be odd");
    if (chi.modulus() < 100) throw std::domain_error("theorem1_ratio: q must be >= 100");
    return theorem1_ratio_unchecked(chi, psi);
}

}  // namespace charlab
