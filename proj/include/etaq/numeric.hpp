#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace etaq {

using BigInt = mpz_class;
using Rational = mpq_class;

// Exact half-integer stored as twice its value, so that branch decisions
// (delta1 = 0 vs -1/2 vs -1 vs <= -3/2) never compare floating point.
struct HalfInt {
    long twice = 0;

    static HalfInt from_twice(long t) { return HalfInt{t}; }
    static HalfInt whole(long v) { return HalfInt{2 * v}; }

    bool is_integer() const { return twice % 2 == 0; }
    double value() const { return 0.5 * static_cast<double>(twice); }
    HalfInt operator-() const { return HalfInt{-twice}; }
    friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

// Canonicalized p/q.
Rational make_rational(long num, long den);

// Reduces r into [0, 2) modulo 2. Used for root-of-unity exponents.
Rational mod_two(const Rational& r);

// Canonical residue of k >= 1 in {1, ..., big_l}; residue classes are
// indexed 1..L, with L itself standing for the class of multiples of L.
long residue_in_1_to_l(long k, long big_l);

std::string to_string(const Rational& r);  // "p/q", or "p" when q == 1
std::string to_string(const BigInt& z);
std::string to_string(HalfInt h);          // "p/2" unreduced only when odd

}  // namespace etaq
