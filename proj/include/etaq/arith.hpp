#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "etaq/numeric.hpp"
#include "etaq/quotient.hpp"

namespace etaq {

// Exact rational value of the Dedekind sum s(d, c).
struct DedekindRational {
    Rational value;
};

// s(d, c) = sum_{n mod c} ((dn/c))((n/c)), computed by the reciprocity
// descent in O(log c) exact rational steps. The first argument is reduced
// mod c up front (the sum is c-periodic in d). Callers in this library
// always pass coprime pairs; when gcd(d mod c, c) > 1 the direct O(c)
// definition is evaluated instead, since reciprocity needs coprimality.
DedekindRational dedekind_sum(long d, long c);

// Direct O(c) summation of the defining sum. Kept permanently as the oracle
// for the reciprocity-based implementation.
DedekindRational dedekind_sum_direct(long d, long c);

// omega_{h,k} = exp(-pi i theta) with theta kept as an exact rational in
// [0, 2); the complex value is materialized only on request.
struct OmegaExponent {
    Rational theta;
    std::complex<double> value() const;
};

// theta = sum_r delta_r s(m_r h / gcd(m_r,k), k / gcd(m_r,k)) mod 2.
// Requires 0 <= h < k and gcd(h, k) = 1.
OmegaExponent omega(const EtaQuotient& eq, long h, long k);

// The exact phases of one k-shell: omega_{h,k} e(-n h/k) =
// exp(-pi i (P_h + 12 n h) / (6k)), with P_h = 6k theta_{h,k} an integer in
// [0, 12k) because 6k' s(a, k') is integral for every k' | k.
struct PhaseTable {
    long k = 1;
    std::vector<std::pair<long, long>> entries;  // (h, P_h), ascending h

    static PhaseTable build(const EtaQuotient& eq, long k);
    std::complex<double> exp_sum(long n) const;
};

// sum over 0 <= h < k, gcd(h,k)=1 of omega_{h,k} e(-nh/k).
std::complex<double> exp_sum(const EtaQuotient& eq, long n, long k);

// Integer matrix (a b; c d) with det 1; entries are (h~, -b_{m'}; k', -m'h).
struct GammaMatrix {
    long a = 0, b = 0, c = 0, d = 0;

    long det() const { return a * d - b * c; }
    std::complex<double> apply(std::complex<double> tau) const;
};

// The SL2(Z) element attached to the cusp h/k and dilation m: with
// d = gcd(m,k), m' = m/d, k' = k/d, h~ is the least non-negative solution of
// h~ m' h == -1 (mod k') and b_{m'} = (h~ m' h + 1)/k'. Requires gcd(h,k)=1.
GammaMatrix gamma_matrix(long m, long k, long h);

}  // namespace etaq
