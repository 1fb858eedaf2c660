#include <random>

#include "doctest.h"

#include "corings/scalar.hpp"

using namespace corings;

TEST_CASE("prime field validation") {
    CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(91), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(1ull << 31), std::invalid_argument);
    CHECK(Field::prime(2147483647).characteristic() == 2147483647u);
    CHECK(Field::prime(7).name() == "F7");
    CHECK(Field::rationals().is_rational());
}

TEST_CASE("F_p arithmetic agrees with integer arithmetic") {
    const std::uint64_t p = 2147483629;
    Field f = Field::prime(p);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t a = rng() % p, b = rng() % p;
        Scalar x = Scalar::residue(p, a), y = Scalar::residue(p, b);
        CHECK((x + y).value() == (a + b) % p);
        CHECK((x - y).value() == (a + p - b) % p);
        CHECK((x * y).value() == static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p));
        if (b != 0) CHECK(((x / y) * y) == x);
    }
    CHECK_THROWS_AS(f.zero().inverse(), ArithmeticError);
    CHECK((Scalar(-1).in(f)).value() == p - 1);
    CHECK((f.from_fraction(1, 2) * Scalar(2)) == f.one());
}

TEST_CASE("mixing two prime fields is an error") {
    Scalar a = Scalar::residue(3, 1), b = Scalar::residue(5, 1);
    CHECK_THROWS_AS(a + b, ArithmeticError);
}

TEST_CASE("rational arithmetic agrees with GMP, including overflow") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> big(-(std::int64_t{1} << 62), std::int64_t{1} << 62);
    for (int i = 0; i < 500; ++i) {
        std::int64_t n1 = big(rng), d1 = big(rng), n2 = big(rng), d2 = big(rng);
        if (d1 == 0 || d2 == 0) continue;
        mpq_class q1(mpz_class(std::to_string(n1)), mpz_class(std::to_string(d1)));
        mpq_class q2(mpz_class(std::to_string(n2)), mpz_class(std::to_string(d2)));
        q1.canonicalize();
        q2.canonicalize();
        Scalar a = Scalar::rational(n1, d1), b = Scalar::rational(n2, d2);
        CHECK((a + b).to_mpq() == q1 + q2);
        CHECK((a - b).to_mpq() == q1 - q2);
        CHECK((a * b).to_mpq() == q1 * q2);
        if (n2 != 0) CHECK((a / b).to_mpq() == q1 / q2);
    }
}

TEST_CASE("big rationals demote back to machine words") {
    Scalar big = Scalar::rational(std::int64_t{1} << 62, 1) * Scalar(8);
    CHECK(big.to_string() == "36893488147419103232");
    Scalar back = big / Scalar(16);
    CHECK(back == Scalar(std::int64_t{1} << 61));
    CHECK(Scalar::rational(2, -4).to_string() == "-1/2");
    CHECK(Scalar::rational(3, 6) == Scalar::rational(1, 2));
}
