#include <catch2/catch_amalgamated.hpp>

#include "advrisk/rational.hpp"

#include <cmath>
#include <random>

using advrisk::BigInt;
using advrisk::Rational;

TEST_CASE("construction normalizes sign and gcd") {
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    REQUIRE(Rational(1, -2) == Rational(-1, 2));
    REQUIRE(Rational(-2, -4) == Rational(1, 2));
    REQUIRE(Rational(0, 7) == Rational(0));
    REQUIRE(Rational(6, 3).den() == 1);
    REQUIRE(Rational(6, 3).num() == 2);
    REQUIRE_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    REQUIRE(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    REQUIRE(Rational(1, 3) * Rational(3, 4) == Rational(1, 4));
    REQUIRE(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    REQUIRE(Rational(7, 9) / Rational(7, 3) == Rational(1, 3));
    REQUIRE_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);

    // a classic float failure case, exact here
    Rational tenth(1, 10);
    Rational sum(0);
    for (int i = 0; i < 10; ++i) sum += tenth;
    REQUIRE(sum == Rational(1));
}

TEST_CASE("comparisons") {
    REQUIRE(Rational(1, 3) < Rational(1, 2));
    REQUIRE(Rational(-1, 2) < Rational(-1, 3));
    REQUIRE(Rational(5, 10) <= Rational(1, 2));
    REQUIRE(Rational(2, 3) > Rational(3, 5));
}

TEST_CASE("parse and str round-trip") {
    REQUIRE(Rational::parse("3/4") == Rational(3, 4));
    REQUIRE(Rational::parse("-3/4") == Rational(-3, 4));
    REQUIRE(Rational::parse("+2/6") == Rational(1, 3));
    REQUIRE(Rational::parse("7") == Rational(7));
    REQUIRE(Rational::parse("0") == Rational(0));
    REQUIRE(Rational(22, 7).str() == "22/7");
    REQUIRE(Rational(-22, 7).str() == "-22/7");
    REQUIRE(Rational(4, 2).str() == "2");

    for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "1 /2", "--1", "1/-2"})
        REQUIRE_THROWS_AS(Rational::parse(bad), std::invalid_argument);

    Rational r(-1234567, 891);
    REQUIRE(Rational::parse(r.str()) == r);
}

TEST_CASE("to_double matches IEEE division on representable operands") {
    // num/den with both below 2^53 are exact doubles, and hardware division of
    // exact operands is correctly rounded, so it is an independent oracle.
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 20000; ++trial) {
        long long num = static_cast<long long>(rng() % (1ULL << 50));
        long long den = static_cast<long long>(rng() % ((1ULL << 50) - 1)) + 1;
        if (rng() & 1) num = -num;
        const double expected = static_cast<double>(num) / static_cast<double>(den);
        REQUIRE(Rational(num, den).to_double() == expected);
    }
    REQUIRE(Rational(0).to_double() == 0.0);
    REQUIRE(Rational(1, 3).to_double() == 1.0 / 3.0);
}

TEST_CASE("to_double ties round to even beyond 53 bits") {
    const BigInt two53 = BigInt(1) << 53;
    // 1 + 2^-53 is halfway between 1 and 1+2^-52: even mantissa wins -> 1.0
    REQUIRE(Rational(two53 + 1, two53).to_double() == 1.0);
    // 1 + 3*2^-53 is halfway between 1+2^-52 (odd) and 1+2*2^-52 (even)
    const double up2 = std::nextafter(std::nextafter(1.0, 2.0), 2.0);
    REQUIRE(Rational(two53 + 3, two53).to_double() == up2);
    // huge denominator, non-tie
    REQUIRE(Rational(1, two53 * 3).to_double() == std::ldexp(1.0 / 3.0, -53));
}

TEST_CASE("pow and binomial coefficients") {
    REQUIRE(advrisk::pow(Rational(2, 3), 3) == Rational(8, 27));
    REQUIRE(advrisk::pow(Rational(0), 0) == Rational(1));
    REQUIRE(advrisk::pow(Rational(-1, 2), 2) == Rational(1, 4));
    REQUIRE(advrisk::binomial_coefficient(8, 3) == 56);
    REQUIRE(advrisk::binomial_coefficient(5, 0) == 1);
    REQUIRE(advrisk::binomial_coefficient(4, 7) == 0);
    REQUIRE(advrisk::binomial_coefficient(40, 20) == BigInt("137846528820"));
}
