#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "etaq/numeric.hpp"

namespace etaq {

// A finite product prod_r (q^{m_r}; q^{m_r})_inf^{delta_r} with pairwise
// distinct positive m_r and nonzero integer exponents delta_r, R >= 1.
class EtaQuotient {
public:
    // Validates the structural invariants; throws std::invalid_argument.
    EtaQuotient(std::vector<long> m, std::vector<long> delta);

    const std::vector<long>& m() const { return m_; }
    const std::vector<long>& delta() const { return delta_; }
    std::size_t size() const { return m_.size(); }

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    std::vector<long> m_;
    std::vector<long> delta_;
};

// The structural data of Theorem-type main terms. delta3/delta4_sq are
// indexed by residue class l in 1..L (slot l-1); both depend on k only
// through gcd(m_r, k), hence only through k mod L.
struct QuotientInvariants {
    HalfInt delta1;                    // -(1/2) sum delta_r
    long delta2 = 0;                   // sum m_r delta_r
    long big_l = 1;                    // lcm(m_1, ..., m_R)
    std::vector<Rational> delta3;      // -sum delta_r gcd^2(m_r,l)/m_r
    std::vector<Rational> delta4_sq;   // prod (m_r/gcd(m_r,l))^{-delta_r}
    std::vector<long> l_pos;           // residues with delta3 > 0, ascending
    std::vector<long> l_nonpos;        // complement in {1..L}, ascending

    long residue_class(long k) const { return residue_in_1_to_l(k, big_l); }
    const Rational& delta3_at(long k) const;
    const Rational& delta4_sq_at(long k) const;
    // The positive square root, materialized only at evaluation time.
    double delta4_at(long k) const;
};

QuotientInvariants invariants(const EtaQuotient& eq);

struct AdmissibilityReport {
    bool ok = true;
    // Failing (residue l, 1-based factor index r minimizing gcd^2(m_r,l)/m_r).
    std::vector<std::pair<long, std::size_t>> violations;
};

// Checks min_r gcd^2(m_r, l)/m_r >= delta3(l)/24 for every l in 1..L,
// in exact rational arithmetic.
AdmissibilityReport check_admissible(const EtaQuotient& eq);

// Partition of {1..L} by the sign of delta3: (l_pos, l_nonpos).
std::pair<std::vector<long>, std::vector<long>> classify(const EtaQuotient& eq);

}  // namespace etaq
