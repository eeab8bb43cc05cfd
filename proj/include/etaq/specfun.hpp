#pragma once

#include "etaq/numeric.hpp"

namespace etaq {

// Bessel order nu = twice_nu / 2; only integers and half-integers arise here
// (nu = -delta1 - 1 on the main branch, delta1 + 1 on the Sussman branch).
struct BesselOrder {
    int twice_nu = 0;

    static BesselOrder from_twice(int t) { return BesselOrder{t}; }
    double value() const { return 0.5 * static_cast<double>(twice_nu); }
};

// Modified Bessel function of the first kind. Negative integer orders are
// reflected (I_{-n} = I_n); the defining power series is summed for x <= 30
// and the asymptotic expansion e^x/sqrt(2 pi x) (1 - (4 nu^2-1)/(8x) + ...),
// truncated at its smallest term, is used beyond. x = 0 is allowed only for
// nu >= 0; x < 0 raises std::domain_error.
double bessel_i(BesselOrder nu, double x);

// Xi_Delta(x) for Delta in (1/2)Z_{<=0} and x >= 1: the four-case bound
// 1; 2 x^{1/2}; x (log x + 1); zeta(-Delta) x^{-2 Delta - 1}.
double xi(HalfInt delta1, double x);

// Riemann zeta for real s > 1: partial sum plus integral tail with
// Euler-Maclaurin corrections, absolute accuracy ~1e-13 for s >= 3/2.
double zeta(double s);

namespace detail {
// Both evaluation paths, exposed so the crossover band can be cross-checked.
double bessel_i_series(double nu, double x);
double bessel_i_asymptotic(double nu, double x);
}  // namespace detail

}  // namespace etaq
