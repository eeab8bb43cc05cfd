#pragma once

// Test-only oracles, kept independent of the library paths they check.

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "etaq/numeric.hpp"
#include "etaq/quotient.hpp"

namespace oracles {

// p(0..upto) by dynamic programming over parts (coin-counting order).
inline std::vector<etaq::BigInt> partition_dp(long upto) {
    std::vector<etaq::BigInt> p(static_cast<std::size_t>(upto) + 1);
    p[0] = 1;
    for (long part = 1; part <= upto; ++part)
        for (long s = part; s <= upto; ++s)
            p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
    return p;
}

// p(0..upto) by the pentagonal-number recurrence
// p(n) = sum_k (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
inline std::vector<etaq::BigInt> partition_pentagonal(long upto) {
    std::vector<etaq::BigInt> p(static_cast<std::size_t>(upto) + 1);
    p[0] = 1;
    for (long n = 1; n <= upto; ++n) {
        etaq::BigInt acc = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            long g2 = k * (3 * k + 1) / 2;
            if (k % 2 == 1) {
                acc += p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) acc += p[static_cast<std::size_t>(n - g2)];
            } else {
                acc -= p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) acc -= p[static_cast<std::size_t>(n - g2)];
            }
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

// Coefficient of q^n in sum_{k in Z} (-1)^k q^{k^2}: 1 at n=0, 2(-1)^k at
// n = k^2 (k >= 1), 0 elsewhere.
inline long gauss_theta_coeff(long n) {
    if (n == 0) return 1;
    long root = std::lround(std::sqrt(static_cast<double>(n)));
    while (root * root > n) --root;
    while ((root + 1) * (root + 1) <= n) ++root;
    if (root * root != n) return 0;
    return root % 2 == 0 ? 2 : -2;
}

// Truncated product of coefficient vectors (plain quadratic convolution).
inline std::vector<etaq::BigInt> convolve(const std::vector<etaq::BigInt>& a,
                                          const std::vector<etaq::BigInt>& b) {
    std::vector<etaq::BigInt> out(std::min(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) out[i] += a[j] * b[i - j];
    return out;
}

// I_nu(x) by the defining series in long double with libm's Gamma. Negative
// integer orders reflect through I_{-n} = I_n (1/Gamma at the poles).
inline long double bessel_series_ld(long double nu, long double x) {
    if (nu < 0.0L && nu == std::rint(nu)) nu = -nu;
    long double term = std::pow(0.5L * x, nu) / std::tgamma(nu + 1.0L);
    long double sum = term;
    long double scale = std::fabs(term);
    const long double q = 0.25L * x * x;
    for (int j = 1; j < 3000; ++j) {
        term *= q / (j * (j + nu));
        sum += term;
        scale = std::max(scale, std::fabs(term));
        if (std::fabs(term) < 1e-24L * scale && j > 0.5L * x) break;
    }
    return sum;
}

// Half-integer closed forms (exact identities, independent of any series).
inline double bessel_half_closed(int twice_nu, double x) {
    double c = std::sqrt(2.0 / (3.14159265358979323846 * x));
    switch (twice_nu) {
        case 1: return c * std::sinh(x);
        case -1: return c * std::cosh(x);
        case 3: return c * (std::cosh(x) - std::sinh(x) / x);
        case -3: return c * (std::sinh(x) - std::cosh(x) / x);
        default: throw std::invalid_argument("bessel_half_closed: unsupported order");
    }
}

// zeta(s) by direct summation with the integral tail M^{1-s}/(s-1) + M^{-s}/2;
// error O(s M^{-s-1}), ~4e-14 at M = 1e5 for s = 3/2.
inline double zeta_direct(double s, long big_m = 100000) {
    double sum = 0.0;
    for (long n = 1; n < big_m; ++n) sum += std::pow(static_cast<double>(n), -s);
    double m = static_cast<double>(big_m);
    return sum + std::pow(m, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(m, -s);
}

// Small random quotients: R <= 3, distinct m_r <= 10, 1 <= |delta_r| <= 3.
inline etaq::EtaQuotient random_quotient(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick_r(1, 3);
    std::uniform_int_distribution<long> pick_m(1, 10);
    std::uniform_int_distribution<long> pick_d(1, 3);
    for (;;) {
        int R = pick_r(rng);
        std::vector<long> m, d;
        for (int i = 0; i < R; ++i) {
            long mv = pick_m(rng);
            if (std::find(m.begin(), m.end(), mv) != m.end()) continue;
            m.push_back(mv);
            long dv = pick_d(rng);
            d.push_back(rng() % 2 == 0 ? dv : -dv);
        }
        if (m.empty()) continue;
        return etaq::EtaQuotient(m, d);
    }
}

// Random quotient satisfying the main-theorem hypotheses over n <= 2000:
// delta1 <= 0, admissible, delta2 >= -18 (keeps N >= 1 from n = 1 on),
// max delta3 <= 20 (keeps e^{pi sqrt(delta3(24n+delta2))/6} in double range)
// and a nonempty positive class, so the main term is actually exercised
// (the vanishing-main-term case is covered separately).
inline etaq::EtaQuotient random_main_branch_quotient(std::mt19937& rng) {
    for (;;) {
        etaq::EtaQuotient eq = random_quotient(rng);
        auto inv = etaq::invariants(eq);
        if (inv.delta1.twice > 0) continue;
        if (inv.delta2 < -18) continue;
        if (inv.l_pos.empty()) continue;
        bool small_d3 = true;
        for (const auto& d3 : inv.delta3) small_d3 = small_d3 && d3 <= 20;
        if (!small_d3) continue;
        if (!etaq::check_admissible(eq).ok) continue;
        return eq;
    }
}

}  // namespace oracles
