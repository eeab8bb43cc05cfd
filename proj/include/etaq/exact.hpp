#pragma once

#include <vector>

#include "etaq/numeric.hpp"
#include "etaq/quotient.hpp"

namespace etaq {

// Truncated Fourier expansion of G(q) with exact integer coefficients.
// g(0) is always 1 (every factor has unit constant term).
struct ExactSeries {
    EtaQuotient source;
    long upto = 0;
    std::vector<BigInt> coeffs;  // g(0..upto)

    const BigInt& at(long n) const;
};

// Expands the quotient to order `upto`. Each factor (q^m; q^m)_inf^{+-1} is
// applied through Euler's pentagonal series, which has O(sqrt(upto/m))
// nonzero terms, so one application costs O(upto^{3/2}/sqrt(m)) big-integer
// additions; exponents |delta_r| > 1 are applied by repetition. Negative
// exponents are exact series divisions against the unit constant term.
ExactSeries expand(const EtaQuotient& eq, long upto);

// coefficient(eq, n) == expand(eq, n).coeffs[n].
BigInt coefficient(const EtaQuotient& eq, long n);

}  // namespace etaq
