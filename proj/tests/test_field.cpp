#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mhecke/number_theory.hpp"
#include "mhecke/quad_tower.hpp"

using namespace mhecke;

namespace {

// Independent Kronecker oracle for odd prime modulus: count solutions of
// x^2 = a (mod p) and map {0,1,2} solutions to {-1, 0(+shared factor), 1}.
int kronecker_prime_oracle(long long a, long long p) {
    long long am = ((a % p) + p) % p;
    if (am == 0) return 0;
    int count = 0;
    for (long long x = 0; x < p; ++x)
        if ((x * x - am) % p == 0) ++count;
    return count - 1;
}

QuadTowerNumber random_tower_value(std::mt19937_64& rng, long long s1, long long s2) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    QuadTowerNumber v(Rational(num(rng), den(rng)));
    v += QuadTowerNumber::root_term(Rational(num(rng), den(rng)), s1);
    v += QuadTowerNumber::root_term(Rational(num(rng), den(rng)), s2);
    if (s1 != 1 && s2 != 1)
        v += QuadTowerNumber::root_term(Rational(num(rng), den(rng)), squarefree_part(s1 * s2));
    return v;
}

} // namespace

TEST_CASE("kronecker symbol on the worked values") {
    CHECK(kronecker(8, 1) == 1);
    CHECK(kronecker(8, 3) == -1);
    CHECK(kronecker(8, 5) == -1);
    CHECK(kronecker(8, 7) == 1);
    CHECK(kronecker(8, 2) == 0);
    CHECK(kronecker(13, 3) == kronecker_prime_oracle(13, 3));
    CHECK(kronecker(13, 3) == 1);
    // n = 0 convention
    CHECK(kronecker(1, 0) == 1);
    CHECK(kronecker(-1, 0) == 1);
    CHECK(kronecker(8, 0) == 0);
    // negative entries
    CHECK(kronecker(-4, 3) == -1);
    CHECK(kronecker(5, -1) == 1);
    CHECK(kronecker(-3, -1) == -1);
}

TEST_CASE("kronecker symbol against prime oracle") {
    for (long long p : {3, 5, 7, 11, 13, 17, 19}) {
        for (long long a = -30; a <= 30; ++a) {
            CAPTURE(a, p);
            CHECK(kronecker(a, p) == kronecker_prime_oracle(a, p));
        }
    }
}

TEST_CASE("kronecker periodicity and complete multiplicativity") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long long> pick(1, 10000);
    for (long long D : {5, 8, 12, 13, 17, 21, 24, 1}) {
        if (!is_fundamental(D)) continue;
        for (long long n = 1; n <= 10000; ++n)
            REQUIRE(kronecker(D, n) == kronecker(D, n + D));
        for (int trial = 0; trial < 2000; ++trial) {
            long long m = pick(rng), n = pick(rng);
            REQUIRE(kronecker(D, m * n) == kronecker(D, m) * kronecker(D, n));
        }
    }
}

TEST_CASE("divisors and sigma") {
    CHECK(divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
    CHECK(sigma(12) == 28);
    CHECK(sigma(1) == 1);
    CHECK(sigma(2) == 3);
    // brute-force oracle
    for (long long n = 1; n <= 200; ++n) {
        Integer s = 0;
        std::vector<long long> ds;
        for (long long d = 1; d <= n; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                s += d;
            }
        REQUIRE(divisors(n) == ds);
        REQUIRE(sigma(n) == s);
    }
}

TEST_CASE("fundamental discriminants") {
    CHECK(is_fundamental(1));
    CHECK(is_fundamental(8));
    CHECK_FALSE(is_fundamental(12));
    CHECK(is_fundamental(5));
    CHECK(is_fundamental(13));
    CHECK(is_fundamental(-3));
    CHECK(is_fundamental(-4));
    CHECK_FALSE(is_fundamental(-9));
    CHECK_FALSE(is_fundamental(9));
    CHECK_FALSE(is_fundamental(0));
    // definition-check oracle: d fundamental iff it is the discriminant of
    // the quadratic field Q(sqrt(d)), i.e. sf = squarefree part of d and
    // d = sf (sf = 1 mod 4) or d = 4 sf.
    for (long long d = -50; d <= 50; ++d) {
        if (d == 0) continue;
        long long sf = squarefree_part(d);
        bool expect = (d == sf && ((sf % 4 + 4) % 4 == 1)) ||
                      (d == 4 * sf && ((sf % 4 + 4) % 4 == 2 || (sf % 4 + 4) % 4 == 3));
        if (d == 1) expect = true;
        CAPTURE(d);
        CHECK(is_fundamental(d) == expect);
    }
    CHECK_THROWS_AS(Discriminant(12), BadInput);
    CHECK_THROWS_AS(Discriminant(-4), BadInput);
    CHECK(Discriminant(8).value == 8);
}

TEST_CASE("sqrt_of fundamental discriminants") {
    CHECK(sqrt_of(Discriminant(8)) == QuadTowerNumber::root_term(Rational(2), 2));
    CHECK(sqrt_of(Discriminant(1)) == QuadTowerNumber(1));
    CHECK(sqrt_of(Discriminant(13)) == QuadTowerNumber::root_term(Rational(1), 13));
}

TEST_CASE("quad tower basics") {
    QuadTowerNumber r2 = QuadTowerNumber::sqrt_of_integer(2);
    QuadTowerNumber one(1);
    CHECK((one + r2) * (one - r2) == QuadTowerNumber(-1));
    CHECK(QuadTowerNumber::sqrt_of_integer(8) == r2.scaled(Rational(2)));
    CHECK(one / r2 == r2.scaled(Rational(1, 2)));
    // embedding sign for negative radicands: sqrt(-3)^2 = -3
    QuadTowerNumber rm3 = QuadTowerNumber::root_term(Rational(1), -3);
    CHECK(rm3 * rm3 == QuadTowerNumber(-3));
    // mixed products close into the tower
    QuadTowerNumber r5 = QuadTowerNumber::root_term(Rational(1), 5);
    CHECK(rm3 * r5 == QuadTowerNumber::root_term(Rational(1), -15));
    QuadTowerNumber rm5 = QuadTowerNumber::root_term(Rational(1), -5);
    CHECK(rm3 * rm5 == QuadTowerNumber::root_term(Rational(-1), 15));
}

TEST_CASE("quad tower rejects three independent radicands") {
    QuadTowerNumber v = QuadTowerNumber::root_term(Rational(1), 2) +
                        QuadTowerNumber::root_term(Rational(1), 3);
    CHECK_THROWS_AS(v + QuadTowerNumber::root_term(Rational(1), 5), IncompatibleTower);
    // sqrt(6) is fine: it is the product radicand of (2,3)
    CHECK_NOTHROW(v + QuadTowerNumber::root_term(Rational(1), 6));
}

TEST_CASE("quad tower field axioms on random samples") {
    std::mt19937_64 rng(987654321);
    const std::pair<long long, long long> towers[] = {
        {1, 1}, {2, 1}, {-3, 1}, {5, 1}, {-3, 5}, {2, 13}, {-3, -5}, {-15, -3}};
    for (auto [s1, s2] : towers) {
        for (int trial = 0; trial < 40; ++trial) {
            QuadTowerNumber a = random_tower_value(rng, s1, s2);
            QuadTowerNumber b = random_tower_value(rng, s1, s2);
            QuadTowerNumber c = random_tower_value(rng, s1, s2);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!b.is_zero()) CHECK((a / b) * b == a);
            CHECK(a - a == QuadTowerNumber(0));
        }
    }
    CHECK_THROWS_AS(QuadTowerNumber(1) / QuadTowerNumber(0), DivisionByZero);
}

TEST_CASE("quad tower rendering and parsing") {
    QuadTowerNumber v = QuadTowerNumber(Rational(-9, 2)) +
                        QuadTowerNumber::root_term(Rational(-3, 2), -3);
    CHECK(v.str() == "-9/2 - 3/2*sqrt(-3)");
    CHECK(QuadTowerNumber::parse("-9/2 - 3/2*sqrt(-3)") == v);
    CHECK(QuadTowerNumber::parse("-1/10") == QuadTowerNumber(Rational(-1, 10)));
    CHECK(QuadTowerNumber::parse("sqrt(8)") == QuadTowerNumber::sqrt_of_integer(8));
    CHECK(QuadTowerNumber::parse("3 + 2*sqrt(2) - sqrt(2)") ==
          QuadTowerNumber(3) + QuadTowerNumber::sqrt_of_integer(2));
    CHECK(QuadTowerNumber(0).str() == "0");
    CHECK_THROWS_AS(QuadTowerNumber::parse("1 + + 2"), BadInput);
}

TEST_CASE("character-sum lemma: sums over shifted classes vanish") {
    // For fundamental D <= 120, prime p | D, p | m, 0 < m < D:
    //   sum_{i=0}^{p-1} (D / (m/p + i D/p)) = 0.
    for (long long D = 2; D <= 120; ++D) {
        if (!is_fundamental(D)) continue;
        for (auto [p, e] : factorize(D)) {
            (void)e;
            for (long long m = p; m < D; m += p) {
                long long s = 0;
                for (long long i = 0; i < p; ++i) s += kronecker(D, m / p + i * (D / p));
                CAPTURE(D, p, m);
                REQUIRE(s == 0);
            }
        }
    }
}
