#include "etaq/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace etaq {

namespace detail {

// Defining series sum_j (x/2)^{2j+nu} / (j! Gamma(j+nu+1)). Terms are
// positive for nu >= -1/2; for lower half-integer orders the first few terms
// alternate, so convergence is judged against the largest magnitude seen.
double bessel_i_series(double nu, double x) {
    const double q = 0.25 * x * x;
    double term = std::pow(0.5 * x, nu) / std::tgamma(nu + 1.0);
    double sum = term;
    double scale = std::fabs(term);
    for (int j = 1; j < 600; ++j) {
        term *= q / (j * (j + nu));
        sum += term;
        scale = std::max(scale, std::fabs(term));
        if (std::fabs(term) < 1e-19 * scale && j > 0.5 * x) break;
    }
    return sum;
}

// e^x/sqrt(2 pi x) sum_j (-1)^j a_j(nu)/x^j, truncated at the smallest term.
// For half-integer nu the series terminates and is exact.
double bessel_i_asymptotic(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j < 200; ++j) {
        double factor = -(mu - (2.0 * j - 1.0) * (2.0 * j - 1.0)) / (8.0 * j * x);
        double next = term * factor;
        if (next == 0.0) break;
        if (std::fabs(next) >= std::fabs(term)) break;  // divergence point
        term = next;
        sum += term;
        if (std::fabs(term) < 1e-20 * std::fabs(sum)) break;
    }
    return std::exp(x) / std::sqrt(2.0 * 3.14159265358979323846 * x) * sum;
}

}  // namespace detail

double bessel_i(BesselOrder nu, double x) {
    if (x < 0.0) throw std::domain_error("bessel_i: x must be >= 0");
    int t = nu.twice_nu;
    if (t % 2 == 0 && t < 0) t = -t;  // I_{-n} = I_n
    if (x == 0.0) {
        if (t == 0) return 1.0;
        if (t > 0) return 0.0;
        throw std::domain_error("bessel_i: pole at x = 0 for negative order");
    }
    const double v = 0.5 * t;
    return (x <= 30.0) ? detail::bessel_i_series(v, x) : detail::bessel_i_asymptotic(v, x);
}

double zeta(double s) {
    if (s <= 1.0) throw std::domain_error("zeta: s must be > 1");
    // Partial sum to M-1, then the Euler-Maclaurin tail: integral term,
    // half-term, and Bernoulli corrections B_2..B_12.
    constexpr int kM = 24;
    static constexpr double kBernoulli[] = {1.0 / 6,   -1.0 / 30,    1.0 / 42,
                                            -1.0 / 30, 5.0 / 66,     -691.0 / 2730};
    double sum = 0.0;
    for (int n = 1; n < kM; ++n) sum += std::pow(n, -s);
    const double m = kM;
    sum += std::pow(m, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(m, -s);
    double poch = s;              // s (s+1) ... (s+2j-2)
    double mpow = std::pow(m, -s - 1.0);
    double fact = 2.0;            // (2j)!
    for (int j = 1; j <= 6; ++j) {
        sum += kBernoulli[j - 1] * poch * mpow / fact;
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        mpow /= m * m;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return sum;
}

double xi(HalfInt delta1, double x) {
    if (delta1.twice > 0) throw std::invalid_argument("xi: requires delta1 <= 0");
    if (x < 1.0) throw std::invalid_argument("xi: requires x >= 1");
    switch (delta1.twice) {
        case 0: return 1.0;
        case -1: return 2.0 * std::sqrt(x);
        case -2: return x * (std::log(x) + 1.0);
        default:
            return zeta(-delta1.value()) * std::pow(x, -2.0 * delta1.value() - 1.0);
    }
}

}  // namespace etaq
