#pragma once

#include <mpfr.h>

#include "etaq/numeric.hpp"

namespace etaq {

// Minimal arbitrary-precision real on top of MPFR, round-to-nearest
// throughout. Used where a quantity of size e^{c sqrt n} must be resolved to
// absolute accuracy O(1): Rademacher-style rounding to the nearest integer
// and measurement of the error term against the exact coefficient. Binary
// operations round into the wider of the two operand precisions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat pi(mpfr_prec_t prec);
    static BigFloat of(long v, mpfr_prec_t prec);
    static BigFloat of(double v, mpfr_prec_t prec);
    static BigFloat of(const BigInt& v, mpfr_prec_t prec);
    static BigFloat of(const Rational& v, mpfr_prec_t prec);

    mpfr_prec_t precision() const;
    double to_double() const;
    BigInt round_to_integer() const;  // nearest, ties to even
    bool is_zero() const;
    int sign() const;
    // Floor of log2 |x| + 1; LONG_MIN-ish sentinel when zero.
    long exponent() const;

    mpfr_ptr raw() { return value_; }
    mpfr_srcptr raw() const { return value_; }

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);
    BigFloat& operator*=(long rhs);
    BigFloat& operator/=(long rhs);

    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs);
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs);
    friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs);
    friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs);
    friend BigFloat operator*(BigFloat lhs, long rhs);
    friend BigFloat operator/(BigFloat lhs, long rhs);
    friend BigFloat operator-(BigFloat x);

    friend int compare(const BigFloat& a, const BigFloat& b);

private:
    mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& expo);
BigFloat gamma_fn(const BigFloat& x);
// pi * q, exact rational multiplication before the final rounding.
BigFloat pi_times(const Rational& q, mpfr_prec_t prec);

}  // namespace etaq
