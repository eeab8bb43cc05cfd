#include "etaq/verify.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"

namespace etaq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

long positive_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// e(y) = exp(2 pi i y)
std::complex<double> e_of(std::complex<double> y) {
    double mag = std::exp(-kTwoPi * y.imag());
    return {mag * std::cos(kTwoPi * y.real()), mag * std::sin(kTwoPi * y.real())};
}

// (w; w)_inf = prod_{j>=1} (1 - w^j), truncated once the dropped factors
// differ from 1 by less than 1e-18.
std::complex<double> pochhammer_inf(std::complex<double> w) {
    double aw = std::abs(w);
    if (!(aw < 1.0)) throw std::invalid_argument("pochhammer_inf: need |w| < 1");
    long trunc = static_cast<long>(std::ceil(-18.0 * 2.302585092994046 / std::log(aw))) + 1;
    if (trunc > 400000)
        throw std::overflow_error("pochhammer_inf: |w| too close to 1 (Im(tau) too small)");
    std::complex<double> prod{1.0, 0.0};
    std::complex<double> p{1.0, 0.0};
    for (long j = 1; j <= trunc; ++j) {
        p *= w;
        prod *= (1.0 - p);
    }
    return prod;
}

std::complex<double> int_pow(std::complex<double> base, long e) {
    if (e < 0) return 1.0 / int_pow(base, -e);
    std::complex<double> out{1.0, 0.0};
    while (e-- > 0) out *= base;
    return out;
}

double bound_exp_term(double t) {
    double e = std::exp(-kPi * t);
    return e / ((1.0 - e) * (1.0 - e));
}

}  // namespace

SamplePoint::SamplePoint(long h_in, long k_in, std::complex<double> z_in)
    : h(h_in), k(k_in), z(z_in) {
    if (k < 1) throw std::invalid_argument("SamplePoint: k must be >= 1");
    if (std::gcd(positive_mod(h, k), k) != 1)
        throw std::invalid_argument("SamplePoint: gcd(h, k) must be 1");
    if (!(z.real() > 0.0))
        throw std::invalid_argument("SamplePoint: Re(z) must be positive (Im(tau) > 0)");
}

std::complex<double> SamplePoint::tau() const {
    return std::complex<double>(static_cast<double>(h) - z.imag(), z.real()) /
           static_cast<double>(k);
}

std::vector<FareyArc> farey_arcs(long order_n) {
    if (order_n < 1) throw std::invalid_argument("farey_arcs: order must be >= 1");
    // The Farey sequence of order N on [0, 1) by the next-term recurrence.
    std::vector<std::pair<long, long>> seq;
    long a = 0, b = 1, c = 1, d = order_n;
    seq.emplace_back(a, b);
    while (!(c == 1 && d == 1)) {
        seq.emplace_back(c, d);
        long step = (order_n + b) / d;
        long c2 = step * c - a;
        long d2 = step * d - b;
        a = c;
        b = d;
        c = c2;
        d = d2;
    }
    std::vector<FareyArc> arcs;
    arcs.reserve(seq.size());
    const std::size_t count = seq.size();
    for (std::size_t i = 0; i < count; ++i) {
        auto [h, k] = seq[i];
        // Wrap cyclically: the left neighbor of 0/1 is the last fraction
        // shifted by -1, the right neighbor of the last is 0/1 shifted by +1.
        auto [hl, kl] = (i == 0) ? std::pair<long, long>{seq.back().first - seq.back().second,
                                                         seq.back().second}
                                 : seq[i - 1];
        auto [hr, kr] = (i + 1 == count) ? std::pair<long, long>{1, 1} : seq[i + 1];
        // Neighboring Farey fractions are unimodular, so the distance to the
        // mediant is 1/(k (k + k_neighbor)) exactly.
        if (h * kl - hl * k != 1 || hr * k - h * kr != 1)
            throw std::logic_error("farey_arcs: neighbors not unimodular");
        FareyArc arc;
        arc.h = h;
        arc.k = k;
        arc.theta_left = make_rational(1, k * (k + kl));
        arc.theta_right = make_rational(1, k * (k + kr));
        arcs.push_back(std::move(arc));
    }
    return arcs;
}

std::complex<double> eta_f(std::complex<double> y, long trunc) {
    if (!(y.imag() > 0.0)) throw std::invalid_argument("eta_f: need Im(y) > 0");
    std::complex<double> q = e_of(y);
    if (trunc <= 0) return 1.0 / pochhammer_inf(q);
    std::complex<double> prod{1.0, 0.0};
    std::complex<double> p{1.0, 0.0};
    for (long j = 1; j <= trunc; ++j) {
        p *= q;
        prod *= (1.0 - p);
    }
    return 1.0 / prod;
}

double check_transform(const EtaQuotient& eq, const SamplePoint& pt) {
    const QuotientInvariants inv = invariants(eq);
    const std::complex<double> tau = pt.tau();
    const std::complex<double> z = pt.z;
    const long k = pt.k;

    std::complex<double> lhs{1.0, 0.0};
    for (std::size_t r = 0; r < eq.size(); ++r) {
        std::complex<double> factor =
            pochhammer_inf(e_of(static_cast<double>(eq.m()[r]) * tau));
        lhs *= int_pow(factor, eq.delta()[r]);
    }

    std::complex<double> expfac =
        std::exp(kPi / (12.0 * k) *
                 (inv.delta3_at(k).get_d() / z + static_cast<double>(inv.delta2) * z));
    std::complex<double> zpow = std::pow(z, inv.delta1.value());  // principal branch
    std::complex<double> om = omega(eq, positive_mod(pt.h, k), k).value();
    std::complex<double> rhs = expfac * zpow * om * inv.delta4_at(k);
    for (std::size_t r = 0; r < eq.size(); ++r) {
        std::complex<double> y =
            gamma_matrix(eq.m()[r], k, pt.h).apply(static_cast<double>(eq.m()[r]) * tau);
        rhs *= int_pow(eta_f(y), -eq.delta()[r]);
    }
    return std::abs(lhs - rhs) / std::abs(lhs);
}

BoundsReport check_bounds(const EtaQuotient& eq, long order_n, const SamplePoint& pt) {
    if (order_n < 1) throw std::invalid_argument("check_bounds: order must be >= 1");
    const long k = pt.k;
    const double n2 = static_cast<double>(order_n) * order_n;
    if (k > order_n) throw std::invalid_argument("check_bounds: need k <= N");
    if (std::fabs(pt.rho() * n2 - 1.0) > 1e-9)
        throw std::invalid_argument("check_bounds: point not on the arc geometry (rho != 1/N^2)");
    if (std::fabs(pt.phi()) > 1.0 / (static_cast<double>(k) * order_n) * (1.0 + 1e-12))
        throw std::invalid_argument("check_bounds: point not on the arc geometry (|phi| > 1/(kN))");

    const std::complex<double> z = pt.z;
    const std::complex<double> tau = pt.tau();
    BoundsReport report;
    report.re_inv_z_margin = (1.0 / z).real() - 0.5 * k;
    report.z_abs_margin = std::abs(z) - static_cast<double>(k) / n2;

    std::complex<double> prod{1.0, 0.0};
    double rough_exponent = 0.0;
    for (std::size_t r = 0; r < eq.size(); ++r) {
        long m = eq.m()[r];
        long g = std::gcd(m, k);
        std::complex<double> y =
            gamma_matrix(m, k, pt.h).apply(static_cast<double>(m) * tau);
        std::complex<double> f = eta_f(y);
        double rhs = std::exp(bound_exp_term(static_cast<double>(g) * g / m));
        report.f_bound_margins.push_back(
            std::min(rhs - std::abs(f), rhs - 1.0 / std::abs(f)));
        prod *= int_pow(f, -eq.delta()[r]);
        double ey = std::exp(-kTwoPi * y.imag());
        rough_exponent += std::fabs(static_cast<double>(eq.delta()[r])) * ey /
                          ((1.0 - ey) * (1.0 - ey));
    }
    report.rough_bound_margin = (std::exp(rough_exponent) - 1.0) - std::abs(prod - 1.0);

    // The F-bound and product-lemma margins shrink like e^{-2 pi Im(y)}; far
    // inside the arc both sides agree to O(q^2) and the true (positive)
    // margin drops below what double evaluation can resolve. Margins are
    // reported raw; ok certifies them nonnegative within that resolution.
    const double floor = -1e-12;
    report.ok = report.re_inv_z_margin >= 0.0 && report.z_abs_margin >= 0.0 &&
                report.rough_bound_margin >= floor;
    for (double margin : report.f_bound_margins) report.ok = report.ok && margin >= floor;
    return report;
}

}  // namespace etaq
