#include "etaq/exact.hpp"

#include <stdexcept>
#include <utility>

namespace etaq {

namespace {

// Nonzero terms of (q^m; q^m)_inf = 1 + sum_j (-1)^j q^{m j(3j-1)/2} +
// (-1)^j q^{m j(3j+1)/2} up to the truncation order, ascending exponent.
// Exponents are positive; the leading 1 is implicit.
std::vector<std::pair<long, int>> pentagonal_terms(long m, long upto) {
    std::vector<std::pair<long, int>> terms;
    for (long j = 1;; ++j) {
        long e1 = m * (j * (3 * j - 1) / 2);
        if (e1 > upto) break;
        int sign = (j % 2 == 0) ? 1 : -1;
        terms.emplace_back(e1, sign);
        long e2 = m * (j * (3 * j + 1) / 2);
        if (e2 <= upto) terms.emplace_back(e2, sign);
    }
    return terms;
}

// In-place c *= (1 + sum_e sign_e q^e). Descending index so only old values
// are read.
void multiply_by(std::vector<BigInt>& c, const std::vector<std::pair<long, int>>& terms) {
    const long upto = static_cast<long>(c.size()) - 1;
    for (long i = upto; i >= 0; --i) {
        for (const auto& [e, sign] : terms) {
            if (e > i) break;
            if (sign > 0)
                c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - e)];
            else
                c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - e)];
        }
    }
}

// In-place c /= (1 + sum_e sign_e q^e), exact long division against the unit
// constant term: b_n = a_n - sum_e sign_e b_{n-e}, ascending.
void divide_by(std::vector<BigInt>& c, const std::vector<std::pair<long, int>>& terms) {
    const long upto = static_cast<long>(c.size()) - 1;
    for (long i = 0; i <= upto; ++i) {
        for (const auto& [e, sign] : terms) {
            if (e > i) break;
            if (sign > 0)
                c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - e)];
            else
                c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - e)];
        }
    }
}

}  // namespace

const BigInt& ExactSeries::at(long n) const {
    if (n < 0 || n > upto) throw std::out_of_range("ExactSeries::at: index out of range");
    return coeffs[static_cast<std::size_t>(n)];
}

ExactSeries expand(const EtaQuotient& eq, long upto) {
    if (upto < 0) throw std::invalid_argument("expand: upto must be >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(upto) + 1);
    c[0] = 1;
    for (std::size_t r = 0; r < eq.size(); ++r) {
        const auto terms = pentagonal_terms(eq.m()[r], upto);
        long d = eq.delta()[r];
        for (long i = 0; i < (d < 0 ? -d : d); ++i) {
            if (d > 0)
                multiply_by(c, terms);
            else
                divide_by(c, terms);
        }
    }
    return ExactSeries{eq, upto, std::move(c)};
}

BigInt coefficient(const EtaQuotient& eq, long n) {
    if (n < 0) throw std::invalid_argument("coefficient: n must be >= 0");
    return expand(eq, n).coeffs[static_cast<std::size_t>(n)];
}

}  // namespace etaq
