#include "etaq/numeric.hpp"

#include <stdexcept>

namespace etaq {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational mod_two(const Rational& r) {
    // r - 2*floor(r/2); floor(p/(2q)) via GMP's floored division.
    BigInt fl;
    BigInt two_den = 2 * r.get_den();
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), two_den.get_mpz_t());
    Rational out = r - 2 * Rational(fl);
    out.canonicalize();
    return out;
}

long residue_in_1_to_l(long k, long big_l) {
    if (k < 1 || big_l < 1) throw std::invalid_argument("residue_in_1_to_l: k, L >= 1");
    return (k - 1) % big_l + 1;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(HalfInt h) {
    if (h.is_integer()) return std::to_string(h.twice / 2);
    return std::to_string(h.twice) + "/2";
}

}  // namespace etaq
