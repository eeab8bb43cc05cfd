#include "etaq/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "etaq/errors.hpp"
#include "etaq/specfun.hpp"

namespace etaq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long double kTwoPi = 6.283185307179586476925286766559L;

// N = floor(sqrt(2 pi (24n + delta2)/24)). 2 pi x is irrational for rational
// x != 0, so the floor is never at a tie; the adjustment loop makes the
// extended-precision guard N^2 <= 2 pi (n + delta2/24) < (N+1)^2 explicit.
long trunc_from(long delta2, long n) {
    long double x = kTwoPi * (24.0L * static_cast<long double>(n) + delta2) / 24.0L;
    long trunc = static_cast<long>(std::sqrt(static_cast<double>(x)));
    while (static_cast<long double>(trunc + 1) * (trunc + 1) <= x) ++trunc;
    while (trunc > 0 && static_cast<long double>(trunc) * trunc > x) --trunc;
    return trunc;
}

double bound_exp_term(double t) {
    // e^{-pi t} / (1 - e^{-pi t})^2
    double e = std::exp(-kPi * t);
    return e / ((1.0 - e) * (1.0 - e));
}

// I_nu via the power series in BigFloat arithmetic. Only nu >= -1/2 reaches
// this path, so all series terms are positive.
BigFloat bessel_i_hp(int twice_nu, const BigFloat& x, mpfr_prec_t prec) {
    if (twice_nu % 2 == 0 && twice_nu < 0) twice_nu = -twice_nu;
    if (twice_nu < -1) throw std::logic_error("bessel_i_hp: order below -1/2");
    BigFloat half_x = x / 2;
    BigFloat nu_plus_1 = BigFloat::of(static_cast<long>(twice_nu) + 2, prec) / 2;
    BigFloat term =
        pow(half_x, BigFloat::of(static_cast<long>(twice_nu), prec) / 2) / gamma_fn(nu_plus_1);
    BigFloat q = half_x * half_x;
    BigFloat sum = term;
    const double xd = x.to_double();
    for (long j = 1; j < 400000; ++j) {
        term *= q;
        term /= j * (2 * j + twice_nu);
        term *= 2;
        sum += term;
        if (j > 0.5 * xd && term.exponent() < sum.exponent() - (prec + 32)) return sum;
    }
    throw std::runtime_error("bessel_i_hp: series did not converge");
}

// Real part of the k-shell exponential sum; the sum is exactly real by the
// h <-> k-h pairing, so the imaginary part is dropped at full precision.
BigFloat exp_sum_hp(const PhaseTable& table, long n, const BigFloat& pi_hp,
                    mpfr_prec_t prec) {
    const long k = table.k;
    const long n_mod = ((n % k) + k) % k;
    BigFloat sum(prec);
    for (const auto& [h, p] : table.entries) {
        long u = (p + 12 * ((n_mod * h) % k)) % (12 * k);
        BigFloat angle = pi_hp * u / (6 * k);
        sum += cos(angle);
    }
    return sum;
}

}  // namespace

long truncation_order(const EtaQuotient& eq, long n) {
    QuotientInvariants inv = invariants(eq);
    if (24 * n + inv.delta2 <= 0)
        throw hypothesis_error("truncation_order: need 24n + delta2 > 0");
    return trunc_from(inv.delta2, n);
}

long default_sussman_kmax(const EtaQuotient& eq, long n) {
    if (n < 1) throw std::invalid_argument("default_sussman_kmax: n must be >= 1");
    QuotientInvariants inv = invariants(eq);
    long root = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(n))));
    return root + inv.big_l;
}

Evaluator::Evaluator(EtaQuotient eq)
    : eq_(std::move(eq)), inv_(etaq::invariants(eq_)), adm_(check_admissible(eq_)) {}

const PhaseTable& Evaluator::phases(long k) {
    if (static_cast<std::size_t>(k) >= phase_tables_.size())
        phase_tables_.resize(static_cast<std::size_t>(k) + 1);
    auto& slot = phase_tables_[static_cast<std::size_t>(k)];
    if (!slot) slot = std::make_unique<PhaseTable>(PhaseTable::build(eq_, k));
    return *slot;
}

void Evaluator::require_main_branch(long n) const {
    if (inv_.delta1.twice > 0)
        throw hypothesis_error("main theorem requires delta1 <= 0, got delta1 = " +
                               to_string(inv_.delta1) + " (use the Sussman branch)");
    if (!adm_.ok) {
        const auto& v = adm_.violations.front();
        throw hypothesis_error("quotient is not admissible: gcd^2(m_r,l)/m_r < delta3(l)/24 at l=" +
                               std::to_string(v.first) + ", r=" + std::to_string(v.second));
    }
    if (n < 1 || 24 * n + inv_.delta2 <= 0)
        throw hypothesis_error("n = " + std::to_string(n) + " is too small: need a positive integer with 24n + delta2 > 0");
    if (trunc_from(inv_.delta2, n) < 1)
        throw hypothesis_error("truncation order N = 0 at n = " + std::to_string(n) +
                               ": the Farey dissection is empty this close to -delta2/24");
}

void Evaluator::require_sussman_branch(long n, long k_max) const {
    if (inv_.delta1.twice <= 0)
        throw hypothesis_error("Sussman's theorem requires delta1 > 0, got delta1 = " +
                               to_string(inv_.delta1) + " (use the main-theorem branch)");
    if (!adm_.ok) {
        const auto& v = adm_.violations.front();
        throw hypothesis_error("quotient is not admissible: gcd^2(m_r,l)/m_r < delta3(l)/24 at l=" +
                               std::to_string(v.first) + ", r=" + std::to_string(v.second));
    }
    if (n < 1 || 24 * n + inv_.delta2 <= 0)
        throw hypothesis_error("n = " + std::to_string(n) + " is too small: need a positive integer with 24n + delta2 > 0");
    if (k_max < 1) throw hypothesis_error("k_max must be >= 1");
}

struct Evaluator::Assembly {
    std::vector<ShellContribution> contributions;
    double total = 0.0;
    double imag_residual = 0.0;
    double last_shell_abs = 0.0;
};

// One pass over the shells k = 1..k_hi in ascending order. Each shell is
//   2 pi Delta4(l) ((24n+Delta2)/Delta3(l))^{-(Delta1+1)/2}
//     * I_{nu}(pi sqrt(Delta3(l)(24n+Delta2))/(6k)) / k * exp_sum(n, k),
// summed only over classes with Delta3(l) > 0. The Bessel factor is computed
// once per k and reused across the h-sum, which runs on exact phases.
Evaluator::Assembly Evaluator::assemble(long n, long k_hi, int twice_nu) {
    const long a24 = 24 * n + inv_.delta2;
    const double expo = -static_cast<double>(inv_.delta1.twice + 2) / 4.0;
    std::complex<double> total{0.0, 0.0};
    double noise_scale = 0.0;
    Assembly out;
    for (long k = 1; k <= k_hi; ++k) {
        long l = inv_.residue_class(k);
        const Rational& d3 = inv_.delta3[static_cast<std::size_t>(l - 1)];
        if (d3 <= 0) continue;
        double d3d = d3.get_d();
        double x = kPi * std::sqrt(d3d * static_cast<double>(a24)) / (6.0 * k);
        double pref = 2.0 * kPi * inv_.delta4_at(l) *
                      std::pow(static_cast<double>(a24) / d3d, expo);
        double factor = pref * bessel_i(BesselOrder::from_twice(twice_nu), x) / k;
        const PhaseTable& table = phases(k);
        std::complex<double> shell = factor * table.exp_sum(n);
        total += shell;
        // An exponential sum may vanish exactly; what survives in its shell
        // is |factor| * (h-sum rounding), which this scale accounts for.
        noise_scale += std::fabs(factor) * static_cast<double>(table.entries.size());
        out.last_shell_abs = std::abs(shell);
        out.contributions.push_back({l, k, shell.real()});
    }
    double scale = std::max({std::fabs(total.real()), 1e-9 * noise_scale, 1e-300});
    out.imag_residual = std::fabs(total.imag()) / scale;
    if (out.imag_residual > 1e-6)
        throw std::runtime_error("assembled shell sum is not real: relative imaginary residue " +
                                 std::to_string(out.imag_residual));
    out.total = total.real();
    return out;
}

AsymptoticEstimate Evaluator::main_term(long n) {
    require_main_branch(n);
    const long trunc = trunc_from(inv_.delta2, n);
    Assembly a = assemble(n, trunc, -inv_.delta1.twice - 2);
    AsymptoticEstimate est;
    est.n = n;
    est.branch = Branch::MainTheorem;
    est.trunc = trunc;
    est.contributions = std::move(a.contributions);
    est.main_total = a.total;
    est.imag_residual = a.imag_residual;
    est.error_bound = error_bound(n);
    return est;
}

double Evaluator::error_bound(long n) const {
    require_main_branch(n);
    const long trunc = trunc_from(inv_.delta2, n);
    const double a_n = (24.0 * n + inv_.delta2) / 24.0;  // n + delta2/24
    const double d1 = inv_.delta1.value();
    const double rho = 1.0 / (static_cast<double>(trunc) * trunc);
    const double growth = std::exp(2.0 * kPi * rho * a_n);

    double sum_pos = 0.0;
    for (long l : inv_.l_pos)
        sum_pos += std::exp(inv_.delta3[static_cast<std::size_t>(l - 1)].get_d() * kPi / 3.0);
    double piece1 = std::exp2(-d1) / kPi * std::pow(static_cast<double>(trunc), -d1 + 2.0) /
                    a_n * growth * sum_pos;

    double bracket = 0.0;
    for (long l = 1; l <= inv_.big_l; ++l) {
        double d3d = inv_.delta3[static_cast<std::size_t>(l - 1)].get_d();
        double inner = 0.0;
        for (std::size_t r = 0; r < eq_.size(); ++r) {
            long g = std::gcd(eq_.m()[r], l);
            inner += std::fabs(static_cast<double>(eq_.delta()[r])) *
                     bound_exp_term(static_cast<double>(g) * g / eq_.m()[r]);
        }
        bracket += inv_.delta4_at(l) * std::exp(kPi * d3d / 24.0 + inner);
    }
    for (long l : inv_.l_pos)
        bracket -= inv_.delta4_at(l) *
                   std::exp(kPi * inv_.delta3[static_cast<std::size_t>(l - 1)].get_d() / 24.0);
    double piece2 = 2.0 * growth * xi(inv_.delta1, static_cast<double>(trunc)) * bracket;
    return piece1 + piece2;
}

AsymptoticEstimate Evaluator::sussman_term(long n, long k_max) {
    require_sussman_branch(n, k_max);
    Assembly a = assemble(n, k_max, inv_.delta1.twice + 2);
    AsymptoticEstimate est;
    est.n = n;
    est.branch = Branch::Sussman;
    est.trunc = k_max;
    est.contributions = std::move(a.contributions);
    est.main_total = a.total;
    est.imag_residual = a.imag_residual;
    est.remainder_indicator = a.last_shell_abs;
    return est;
}

TailDiagnostic Evaluator::tail_diagnostic(long n, long k0) {
    require_main_branch(n);
    if (k0 < 1) throw hypothesis_error("tail_diagnostic: k0 must be >= 1");
    const long l0 = inv_.residue_class(k0);
    const Rational& d3 = inv_.delta3[static_cast<std::size_t>(l0 - 1)];
    if (d3 <= 0)
        throw hypothesis_error("tail_diagnostic: the class of k0 = " + std::to_string(k0) +
                               " is l = " + std::to_string(l0) + ", not in L_{>0}");
    const long trunc = trunc_from(inv_.delta2, n);
    const long a24 = 24 * n + inv_.delta2;
    const double d3d = d3.get_d();
    const double expo = -static_cast<double>(inv_.delta1.twice + 2) / 4.0;
    const double pref = 2.0 * kPi * inv_.delta4_at(l0) *
                        std::pow(static_cast<double>(a24) / d3d, expo);
    const int twice_nu = -inv_.delta1.twice - 2;
    TailDiagnostic diag;
    for (long k = k0 + inv_.big_l; k <= trunc; k += inv_.big_l) {
        double x = kPi * std::sqrt(d3d * static_cast<double>(a24)) / (6.0 * k);
        double factor = pref * bessel_i(BesselOrder::from_twice(twice_nu), x) / k;
        diag.tail += std::abs(factor * phases(k).exp_sum(n));
    }
    diag.scale = std::exp(kPi * std::sqrt(d3d * static_cast<double>(a24)) / (6.0 * k0));
    return diag;
}

// Shells whose double evaluation could disturb the target accuracy are
// recomputed in BigFloat arithmetic; the rest are added as doubles. A double
// shell of size e^y carries error ~1e-12 e^y (Bessel kernel accuracy times
// the h-sum length), so it is kept iff e^y <= abs_target * 1e10 / k_hi.
BigFloat Evaluator::assemble_hp(long n, long k_hi, int twice_nu, double abs_target) {
    const long a24 = 24 * n + inv_.delta2;
    // The largest shell is e^{x_l / k} at the smallest k in its class (k = l),
    // which fixes how many bits the accumulator needs.
    double y_max = 0.0;
    for (long l : inv_.l_pos) {
        if (l > k_hi) continue;
        double d3d = inv_.delta3[static_cast<std::size_t>(l - 1)].get_d();
        double x_l = kPi * std::sqrt(d3d * static_cast<double>(a24)) / 6.0;
        y_max = std::max(y_max, x_l / static_cast<double>(l));
    }
    const mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(96 + std::max(0.0, std::ceil(1.4427 * y_max)));
    const double y_threshold =
        std::log(std::max(abs_target, 1e-280) / static_cast<double>(k_hi)) + 23.0;
    const BigFloat pi_hp = BigFloat::pi(prec);
    const double expo_d = -static_cast<double>(inv_.delta1.twice + 2) / 4.0;
    const BigFloat expo = BigFloat::of(-(inv_.delta1.twice + 2L), prec) / 4;

    BigFloat total(prec);
    for (long k = 1; k <= k_hi; ++k) {
        long l = inv_.residue_class(k);
        const Rational& d3 = inv_.delta3[static_cast<std::size_t>(l - 1)];
        if (d3 <= 0) continue;
        double d3d = d3.get_d();
        double y = kPi * std::sqrt(d3d * static_cast<double>(a24)) / (6.0 * k);
        if (y <= y_threshold) {
            double pref = 2.0 * kPi * inv_.delta4_at(l) *
                          std::pow(static_cast<double>(a24) / d3d, expo_d);
            double factor = pref * bessel_i(BesselOrder::from_twice(twice_nu), y) / k;
            std::complex<double> shell = factor * phases(k).exp_sum(n);
            total += BigFloat::of(shell.real(), 64);
            continue;
        }
        Rational arg = d3 * a24;
        BigFloat x = pi_hp * sqrt(BigFloat::of(arg, prec)) / (6 * k);
        Rational ratio = Rational(a24) / d3;
        BigFloat pref = pi_hp * 2 * sqrt(BigFloat::of(inv_.delta4_sq_at(l), prec)) *
                        pow(BigFloat::of(ratio, prec), expo);
        BigFloat shell = pref * bessel_i_hp(twice_nu, x, prec) / k;
        shell *= exp_sum_hp(phases(k), n, pi_hp, prec);
        total += shell;
    }
    return total;
}

double Evaluator::residual_vs_exact(long n, const BigInt& exact_coeff) {
    require_main_branch(n);
    const long trunc = trunc_from(inv_.delta2, n);
    const double bound = error_bound(n);
    BigFloat total = assemble_hp(n, trunc, -inv_.delta1.twice - 2,
                                 std::max(bound * 1e-4, 1e-250));
    BigFloat g = BigFloat::of(exact_coeff, total.precision());
    return (g - total).to_double();
}

BigInt Evaluator::sussman_rounded(long n, long k_max) {
    require_sussman_branch(n, k_max);
    BigFloat total = assemble_hp(n, k_max, inv_.delta1.twice + 2, 0.01);
    return total.round_to_integer();
}

AsymptoticEstimate main_term(const EtaQuotient& eq, long n) {
    return Evaluator(eq).main_term(n);
}

double error_bound(const EtaQuotient& eq, long n) {
    return Evaluator(eq).error_bound(n);
}

AsymptoticEstimate sussman_term(const EtaQuotient& eq, long n, long k_max) {
    return Evaluator(eq).sussman_term(n, k_max);
}

TailDiagnostic tail_diagnostic(const EtaQuotient& eq, long n, long k0) {
    return Evaluator(eq).tail_diagnostic(n, k0);
}

double main_term_residual(const EtaQuotient& eq, long n, const BigInt& exact_coeff) {
    return Evaluator(eq).residual_vs_exact(n, exact_coeff);
}

BigInt sussman_rounded(const EtaQuotient& eq, long n, long k_max) {
    return Evaluator(eq).sussman_rounded(n, k_max);
}

}  // namespace etaq
