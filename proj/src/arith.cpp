#include "etaq/arith.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "etaq/errors.hpp"

namespace etaq {

namespace {

constexpr double kPi = 3.14159265358979323846;

long positive_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// x^{-1} mod m for gcd(x, m) = 1, m >= 1, by the extended Euclidean descent.
long mod_inverse(long x, long m) {
    long a = positive_mod(x, m), b = m;
    long u = 1, v = 0;
    while (b != 0) {
        long q = a / b;
        a -= q * b;
        std::swap(a, b);
        u -= q * v;
        std::swap(u, v);
    }
    if (a != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return positive_mod(u, m);
}

}  // namespace

DedekindRational dedekind_sum_direct(long d, long c) {
    if (c < 1) throw std::invalid_argument("dedekind_sum: c must be >= 1");
    d = positive_mod(d, c);
    // ((dn/c))((n/c)) = (2(dn mod c) - c)(2n - c) / (4c^2) except where the
    // first sawtooth hits an integer.
    BigInt num = 0;
    for (long n = 1; n < c; ++n) {
        long dn = positive_mod(d % c * (n % c), c);
        if (dn == 0) continue;
        num += BigInt(2 * dn - c) * BigInt(2 * n - c);
    }
    Rational value(num, BigInt(4) * c * c);
    value.canonicalize();
    return DedekindRational{value};
}

DedekindRational dedekind_sum(long d, long c) {
    if (c < 1) throw std::invalid_argument("dedekind_sum: c must be >= 1");
    d = positive_mod(d, c);
    if (d == 0) return DedekindRational{Rational(0)};
    if (std::gcd(d, c) != 1) return dedekind_sum_direct(d, c);
    // Reciprocity descent: s(a, b) = (a^2 + b^2 + 1)/(12ab) - 1/4 - s(b mod a, a),
    // terminating at s(0, 1) = 0 along the Euclidean chain.
    Rational s(0);
    long a = d, b = c;
    int sign = 1;
    while (a > 0) {
        Rational term(BigInt(a) * a + BigInt(b) * b + 1, BigInt(12) * a * b);
        term.canonicalize();
        term -= Rational(1, 4);
        if (sign > 0)
            s += term;
        else
            s -= term;
        long next = b % a;
        b = a;
        a = next;
        sign = -sign;
    }
    s.canonicalize();
    return DedekindRational{s};
}

std::complex<double> OmegaExponent::value() const {
    double t = theta.get_d();
    return {std::cos(kPi * t), -std::sin(kPi * t)};
}

namespace {

// theta_{h,k} = sum_r delta_r s(m_r h / g_r, k / g_r) mod 2, exact.
Rational omega_theta(const EtaQuotient& eq, long h, long k) {
    Rational theta(0);
    for (std::size_t r = 0; r < eq.size(); ++r) {
        long m = eq.m()[r];
        long g = std::gcd(m, k);
        long kp = k / g;
        long a = positive_mod((m / g) % kp * (h % kp), kp);
        theta += eq.delta()[r] * dedekind_sum(a, kp).value;
    }
    return mod_two(theta);
}

}  // namespace

OmegaExponent omega(const EtaQuotient& eq, long h, long k) {
    if (k < 1) throw std::invalid_argument("omega: k must be >= 1");
    if (h < 0 || h >= k) throw std::invalid_argument("omega: need 0 <= h < k");
    if (std::gcd(h, k) != 1) throw std::invalid_argument("omega: gcd(h, k) must be 1");
    return OmegaExponent{omega_theta(eq, h, k)};
}

PhaseTable PhaseTable::build(const EtaQuotient& eq, long k) {
    if (k < 1) throw std::invalid_argument("PhaseTable: k must be >= 1");
    PhaseTable table;
    table.k = k;
    for (long h = 0; h < k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        Rational theta = omega_theta(eq, h, k);
        // 6k theta is an integer because every s(a, k') has 6k' s in Z and
        // k' | k; store it in [0, 12k).
        BigInt num = theta.get_num() * (6 * k);
        if (num % theta.get_den() != 0)
            throw std::logic_error("PhaseTable: 6k*theta not integral");
        BigInt p = num / theta.get_den();
        table.entries.emplace_back(h, p.get_si());
    }
    return table;
}

std::complex<double> PhaseTable::exp_sum(long n) const {
    const long twelve_k = 12 * k;
    const long n_mod = positive_mod(n, k);
    std::complex<double> sum{0.0, 0.0};
    for (const auto& [h, p] : entries) {
        long u = (p + 12 * positive_mod(n_mod * h, k)) % twelve_k;
        double angle = kPi * static_cast<double>(u) / static_cast<double>(6 * k);
        sum += std::complex<double>(std::cos(angle), -std::sin(angle));
    }
    return sum;
}

std::complex<double> exp_sum(const EtaQuotient& eq, long n, long k) {
    if (n < 0) throw std::invalid_argument("exp_sum: n must be >= 0");
    return PhaseTable::build(eq, k).exp_sum(n);
}

std::complex<double> GammaMatrix::apply(std::complex<double> tau) const {
    return (static_cast<double>(a) * tau + static_cast<double>(b)) /
           (static_cast<double>(c) * tau + static_cast<double>(d));
}

GammaMatrix gamma_matrix(long m, long k, long h) {
    if (m < 1 || k < 1) throw std::invalid_argument("gamma_matrix: m, k must be >= 1");
    if (std::gcd(h, k) != 1) throw std::invalid_argument("gamma_matrix: gcd(h, k) must be 1");
    long g = std::gcd(m, k);
    long mp = m / g;
    long kp = k / g;
    // gcd(m' h, k') = 1 since gcd(m', k') = 1 by construction and gcd(h, k) = 1.
    long t = positive_mod(mp % kp * (h % kp), kp);
    long h_tilde = (kp == 1) ? 0 : positive_mod(-mod_inverse(t, kp), kp);
    long numer = h_tilde * mp * h + 1;
    if (numer % kp != 0) throw std::logic_error("gamma_matrix: congruence failed");
    long b_mp = numer / kp;
    GammaMatrix gamma{h_tilde, -b_mp, kp, -mp * h};
    if (gamma.det() != 1) throw std::logic_error("gamma_matrix: determinant is not 1");
    return gamma;
}

}  // namespace etaq
