#include "etaq/bigfloat.hpp"

#include <algorithm>
#include <utility>

namespace etaq {

namespace {
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;
}

BigFloat::BigFloat(mpfr_prec_t prec) { mpfr_init2(value_, prec); mpfr_set_zero(value_, 1); }

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, kRnd);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.value_, kRnd);
    return r;
}

BigFloat BigFloat::of(long v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.value_, v, kRnd);
    return r;
}

BigFloat BigFloat::of(double v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.value_, v, kRnd);
    return r;
}

BigFloat BigFloat::of(const BigInt& v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_z(r.value_, v.get_mpz_t(), kRnd);
    return r;
}

BigFloat BigFloat::of(const Rational& v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.value_, v.get_mpq_t(), kRnd);
    return r;
}

mpfr_prec_t BigFloat::precision() const { return mpfr_get_prec(value_); }

double BigFloat::to_double() const { return mpfr_get_d(value_, kRnd); }

BigInt BigFloat::round_to_integer() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), value_, kRnd);
    return z;
}

bool BigFloat::is_zero() const { return mpfr_zero_p(value_) != 0; }

int BigFloat::sign() const { return mpfr_sgn(value_); }

long BigFloat::exponent() const {
    if (is_zero()) return mpfr_get_emin();
    return static_cast<long>(mpfr_get_exp(value_));
}

namespace {
// Widen the accumulator so a binary op never loses the wider operand.
void ensure_prec(mpfr_t x, mpfr_prec_t prec) {
    if (mpfr_get_prec(x) < prec) mpfr_prec_round(x, prec, kRnd);
}
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    ensure_prec(value_, mpfr_get_prec(rhs.value_));
    mpfr_add(value_, value_, rhs.value_, kRnd);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    ensure_prec(value_, mpfr_get_prec(rhs.value_));
    mpfr_sub(value_, value_, rhs.value_, kRnd);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    ensure_prec(value_, mpfr_get_prec(rhs.value_));
    mpfr_mul(value_, value_, rhs.value_, kRnd);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    ensure_prec(value_, mpfr_get_prec(rhs.value_));
    mpfr_div(value_, value_, rhs.value_, kRnd);
    return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
    mpfr_mul_si(value_, value_, rhs, kRnd);
    return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
    mpfr_div_si(value_, value_, rhs, kRnd);
    return *this;
}

BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
BigFloat operator*(BigFloat lhs, long rhs) { return lhs *= rhs; }
BigFloat operator/(BigFloat lhs, long rhs) { return lhs /= rhs; }

BigFloat operator-(BigFloat x) {
    mpfr_neg(x.value_, x.value_, kRnd);
    return x;
}

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()); }

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_abs(r.raw(), x.raw(), kRnd);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sqrt(r.raw(), x.raw(), kRnd);
    return r;
}

BigFloat exp(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_exp(r.raw(), x.raw(), kRnd);
    return r;
}

BigFloat cos(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_cos(r.raw(), x.raw(), kRnd);
    return r;
}

BigFloat pow(const BigFloat& base, const BigFloat& expo) {
    BigFloat r(std::max(base.precision(), expo.precision()));
    mpfr_pow(r.raw(), base.raw(), expo.raw(), kRnd);
    return r;
}

BigFloat gamma_fn(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_gamma(r.raw(), x.raw(), kRnd);
    return r;
}

BigFloat pi_times(const Rational& q, mpfr_prec_t prec) {
    BigFloat r = BigFloat::pi(prec);
    mpfr_mul_q(r.raw(), r.raw(), q.get_mpq_t(), kRnd);
    return r;
}

}  // namespace etaq
