#include "etaq/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace etaq {

EtaQuotient::EtaQuotient(std::vector<long> m, std::vector<long> delta)
    : m_(std::move(m)), delta_(std::move(delta)) {
    if (m_.empty()) throw std::invalid_argument("eta-quotient needs at least one factor");
    if (m_.size() != delta_.size())
        throw std::invalid_argument("m and delta must have the same length");
    std::set<long> seen;
    for (long v : m_) {
        if (v < 1) throw std::invalid_argument("m_r must be positive, got " + std::to_string(v));
        if (!seen.insert(v).second)
            throw std::invalid_argument("m_r must be pairwise distinct, got " + std::to_string(v) + " twice");
    }
    for (long d : delta_)
        if (d == 0) throw std::invalid_argument("delta_r must be nonzero");
}

const Rational& QuotientInvariants::delta3_at(long k) const {
    return delta3[static_cast<std::size_t>(residue_class(k) - 1)];
}

const Rational& QuotientInvariants::delta4_sq_at(long k) const {
    return delta4_sq[static_cast<std::size_t>(residue_class(k) - 1)];
}

double QuotientInvariants::delta4_at(long k) const {
    return std::sqrt(delta4_sq_at(k).get_d());
}

QuotientInvariants invariants(const EtaQuotient& eq) {
    QuotientInvariants inv;
    long sum_delta = 0;
    long big_l = 1;
    for (std::size_t r = 0; r < eq.size(); ++r) {
        sum_delta += eq.delta()[r];
        long g = std::gcd(big_l, eq.m()[r]);
        if (big_l / g > 1000000000L / eq.m()[r])
            throw std::invalid_argument("lcm of the m_r is too large");
        big_l = big_l / g * eq.m()[r];
        inv.delta2 += eq.m()[r] * eq.delta()[r];
    }
    inv.delta1 = HalfInt::from_twice(-sum_delta);
    inv.big_l = big_l;

    inv.delta3.reserve(static_cast<std::size_t>(big_l));
    inv.delta4_sq.reserve(static_cast<std::size_t>(big_l));
    for (long l = 1; l <= big_l; ++l) {
        Rational d3(0);
        Rational d4sq(1);
        for (std::size_t r = 0; r < eq.size(); ++r) {
            long m = eq.m()[r];
            long d = eq.delta()[r];
            long g = std::gcd(m, l);
            d3 -= make_rational(d * g * g, m);
            // (m/g)^{-delta_r}, exact
            Rational base(m / g);
            Rational p(1);
            for (long i = 0; i < (d < 0 ? -d : d); ++i) p *= base;
            if (d < 0)
                d4sq *= p;
            else
                d4sq /= p;
        }
        d3.canonicalize();
        d4sq.canonicalize();
        inv.delta3.push_back(d3);
        inv.delta4_sq.push_back(d4sq);
        if (d3 > 0)
            inv.l_pos.push_back(l);
        else
            inv.l_nonpos.push_back(l);
    }
    return inv;
}

AdmissibilityReport check_admissible(const EtaQuotient& eq) {
    QuotientInvariants inv = invariants(eq);
    AdmissibilityReport report;
    for (long l = 1; l <= inv.big_l; ++l) {
        Rational min_ratio;
        std::size_t min_r = 0;
        for (std::size_t r = 0; r < eq.size(); ++r) {
            long g = std::gcd(eq.m()[r], l);
            Rational ratio(g * g, eq.m()[r]);
            ratio.canonicalize();
            if (r == 0 || ratio < min_ratio) {
                min_ratio = ratio;
                min_r = r;
            }
        }
        if (min_ratio < inv.delta3[static_cast<std::size_t>(l - 1)] / 24) {
            report.ok = false;
            report.violations.emplace_back(l, min_r + 1);
        }
    }
    return report;
}

std::pair<std::vector<long>, std::vector<long>> classify(const EtaQuotient& eq) {
    QuotientInvariants inv = invariants(eq);
    return {std::move(inv.l_pos), std::move(inv.l_nonpos)};
}

}  // namespace etaq
