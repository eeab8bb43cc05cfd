#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "etaq/quotient.hpp"
#include "oracles.hpp"

using etaq::EtaQuotient;
using etaq::HalfInt;
using etaq::Rational;

namespace {
const EtaQuotient kG1({1, 2, 10}, {-2, 3, -1});
const EtaQuotient kGauss({1, 2}, {2, -1});
const EtaQuotient kPartition({1}, {-1});
}  // namespace

TEST_CASE("construction rejects invalid data") {
    CHECK_THROWS_AS(EtaQuotient({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(EtaQuotient({1, 1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(EtaQuotient({1, 2}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(EtaQuotient({0}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(EtaQuotient({1, 2}, {1}), std::invalid_argument);
}

TEST_CASE("G1 invariants match the worked example") {
    auto inv = etaq::invariants(kG1);
    CHECK(inv.delta1 == HalfInt::from_twice(0));
    CHECK(inv.delta2 == -6);
    CHECK(inv.big_l == 10);
    CHECK(inv.delta3_at(5) == Rational(3));
    CHECK(inv.delta4_sq_at(5) == Rational(1, 4));
    CHECK(inv.delta3_at(2) == etaq::make_rational(-18, 5));
    CHECK(inv.delta4_sq_at(2) == Rational(5));
    CHECK(inv.delta3_at(10) == Rational(6));
    CHECK(inv.delta4_sq_at(10) == Rational(1));
    CHECK(inv.l_pos == std::vector<long>{1, 3, 5, 7, 9, 10});
}

TEST_CASE("Gauss quotient has an empty positive class") {
    auto inv = etaq::invariants(kGauss);
    CHECK(inv.delta1 == HalfInt::from_twice(-1));
    CHECK(inv.delta3_at(1) == etaq::make_rational(-3, 2));
    CHECK(inv.delta3_at(2) == Rational(0));
    CHECK(inv.l_pos.empty());
    CHECK(inv.l_nonpos == std::vector<long>{1, 2});
}

TEST_CASE("single-factor partition quotient") {
    auto inv = etaq::invariants(kPartition);
    CHECK(inv.delta1 == HalfInt::from_twice(1));  // +1/2
    CHECK(inv.delta2 == -1);
    CHECK(inv.big_l == 1);
    CHECK(inv.delta3_at(1) == Rational(1));
    CHECK(inv.delta4_sq_at(1) == Rational(1));
    CHECK(inv.l_pos == std::vector<long>{1});
}

TEST_CASE("admissibility of the corpus quotients") {
    CHECK(etaq::check_admissible(kG1).ok);
    CHECK(etaq::check_admissible(kPartition).ok);
    // hand oracle for l in {1,2}: min gcd^2/m = 1/2 resp. 1, delta3/24 < 0.
    CHECK(etaq::check_admissible(kGauss).ok);
}

TEST_CASE("a violating quotient reports the residue and the minimizing r") {
    // m=(1,6), delta=(-6,1): delta3(1) = 6 - 1/6 = 35/6, min gcd^2/m = 1/6
    // at r=2, and 1/6 < (35/6)/24.
    EtaQuotient eq({1, 6}, {-6, 1});
    auto report = etaq::check_admissible(eq);
    CHECK_FALSE(report.ok);
    REQUIRE_FALSE(report.violations.empty());
    bool found = false;
    for (const auto& [l, r] : report.violations) found = found || (l == 1 && r == 2);
    CHECK(found);
}

TEST_CASE("classify partitions {1..L}") {
    auto [pos, nonpos] = etaq::classify(kG1);
    CHECK(pos == std::vector<long>{1, 3, 5, 7, 9, 10});
    CHECK(nonpos == std::vector<long>{2, 4, 6, 8});
    auto [gpos, gnonpos] = etaq::classify(kGauss);
    CHECK(gpos.empty());
    CHECK(gnonpos.size() == 2);
}

TEST_CASE("delta3 depends on k only through k mod L") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 10; ++trial) {
        EtaQuotient eq = oracles::random_quotient(rng);
        auto inv = etaq::invariants(eq);
        for (long k = 1; k <= 10 * inv.big_l; ++k) {
            Rational direct(0);
            for (std::size_t r = 0; r < eq.size(); ++r) {
                long g = std::gcd(eq.m()[r], k);
                direct -= etaq::make_rational(eq.delta()[r] * g * g, eq.m()[r]);
            }
            CHECK(direct == inv.delta3_at(k));
        }
    }
}

TEST_CASE("delta4 square times the defining product is exactly 1") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        EtaQuotient eq = oracles::random_quotient(rng);
        auto inv = etaq::invariants(eq);
        for (long l = 1; l <= inv.big_l; ++l) {
            Rational prod(1);
            for (std::size_t r = 0; r < eq.size(); ++r) {
                long g = std::gcd(eq.m()[r], l);
                Rational base(eq.m()[r], g);
                base.canonicalize();
                long d = eq.delta()[r];
                for (long i = 0; i < std::abs(d); ++i)
                    d > 0 ? prod *= base : prod /= base;
            }
            CHECK(inv.delta4_sq_at(l) * prod == 1);
        }
    }
}

TEST_CASE("all-negative exponents give L_pos = {1..L}") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        EtaQuotient base = oracles::random_quotient(rng);
        std::vector<long> neg;
        for (long d : base.delta()) neg.push_back(-std::abs(d));
        EtaQuotient eq(base.m(), neg);
        auto inv = etaq::invariants(eq);
        CHECK(inv.l_pos.size() == static_cast<std::size_t>(inv.big_l));
        CHECK(inv.l_nonpos.empty());
    }
}

TEST_CASE("invariants are stable under index permutation") {
    EtaQuotient perm({10, 1, 2}, {-1, -2, 3});
    auto a = etaq::invariants(kG1);
    auto b = etaq::invariants(perm);
    CHECK(a.delta1 == b.delta1);
    CHECK(a.delta2 == b.delta2);
    CHECK(a.big_l == b.big_l);
    CHECK(a.delta3 == b.delta3);
    CHECK(a.delta4_sq == b.delta4_sq);
    CHECK(a.l_pos == b.l_pos);
}
