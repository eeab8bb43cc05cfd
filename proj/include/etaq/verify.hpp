#pragma once

#include <complex>
#include <vector>

#include "etaq/numeric.hpp"
#include "etaq/quotient.hpp"

namespace etaq {

// A point tau = (h + i z)/k with gcd(h, k) = 1 and Re(z) > 0 (equivalently
// Im(tau) > 0). In the circle-method parametrization z = k(rho - i phi).
struct SamplePoint {
    long h = 0;
    long k = 1;
    std::complex<double> z{1.0, 0.0};

    SamplePoint(long h, long k, std::complex<double> z);  // validates

    std::complex<double> tau() const;
    double rho() const { return z.real() / static_cast<double>(k); }
    double phi() const { return -z.imag() / static_cast<double>(k); }
};

// Farey fraction h/k of order N with the exact distances to the mediants
// with its neighbors (wrapped cyclically across 0/1 <-> (N-1)/N + 1).
struct FareyArc {
    long h = 0;
    long k = 1;
    Rational theta_left;   // theta'
    Rational theta_right;  // theta''
};

// All arcs of order N covering one period; the arc lengths sum to 1 exactly.
std::vector<FareyArc> farey_arcs(long order_n);

// F(e(y)) = 1/(q; q)_inf at q = e^{2 pi i y}, Im(y) > 0. trunc <= 0 picks the
// truncation from |q| so the dropped factors are below 1e-16; throws
// std::overflow_error when Im(y) is too small for that to be possible.
std::complex<double> eta_f(std::complex<double> y, long trunc = 0);

// Relative residual |LHS - RHS| / |LHS| of the transformation identity
//   G(e(tau)) = e^{pi (Delta3(k)/z + Delta2 z)/(12k)} z^{Delta1} omega_{h,k}
//               Delta4(k) prod_r F(e(gamma_{(m_r,k)}(m_r tau)))^{-delta_r},
// principal branch for z^{Delta1}. Safe sampling region: Re(z) in [0.05, 1].
double check_transform(const EtaQuotient& eq, const SamplePoint& pt);

struct BoundsReport {
    bool ok = true;
    double re_inv_z_margin = 0.0;  // Re(1/z) - k/2
    double z_abs_margin = 0.0;     // |z| - k/N^2
    // Per factor r: bound-1/bound-2 slack, min over |F| and 1/|F|.
    std::vector<double> f_bound_margins;
    double rough_bound_margin = 0.0;  // RHS - LHS of the product lemma
};

// Requires pt to sit on the order-N arc geometry: rho = 1/N^2, |phi| <=
// 1/(kN), k <= N. Evaluates every bound lemma at the point and reports the
// margins; ok iff all are nonnegative.
BoundsReport check_bounds(const EtaQuotient& eq, long order_n, const SamplePoint& pt);

}  // namespace etaq
