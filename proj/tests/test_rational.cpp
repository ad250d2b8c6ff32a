#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "jacksep/rational.hpp"

using namespace jacksep;

TEST_CASE("parse accepts p and p/q and canonicalizes") {
    CHECK(rational::parse("7").str() == "7");
    CHECK(rational::parse("-7").str() == "-7");
    CHECK(rational::parse("3/6").str() == "1/2");
    CHECK(rational::parse("-4/2").str() == "-2");
    CHECK(rational::parse("2/-4").str() == "-1/2");
    CHECK(rational::parse("0/5").str() == "0");
}

TEST_CASE("parse rejects malformed input and zero denominators") {
    CHECK_THROWS_AS(rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(rational::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact and canonical") {
    const rational a(1, 3), b(1, 6);
    CHECK(a + b == rational(1, 2));
    CHECK(a - b == rational(1, 6));
    CHECK(a * b == rational(1, 18));
    CHECK(a / b == rational(2));
    CHECK(-a == rational(-1, 3));
    CHECK(a > b);
    CHECK(b < a);
    CHECK(a != b);
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK_THROWS_AS(a / rational(0), std::domain_error);
}

TEST_CASE("integer predicates") {
    CHECK(rational(4, 2).is_integer());
    CHECK(rational(0).is_nonpositive_integer());
    CHECK(rational(-3).is_nonpositive_integer());
    CHECK_FALSE(rational(2).is_nonpositive_integer());
    CHECK_FALSE(rational(-1, 2).is_nonpositive_integer());
    CHECK(rational(-6, 2).to_long() == -3);
    CHECK_THROWS_AS(rational(1, 2).to_long(), std::domain_error);
}

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(rational(5, 7), 0) == rational(1));
    CHECK(pochhammer(rational(2), 3) == rational(24));  // 2*3*4
    CHECK(pochhammer(rational(-2), 3) == rational(0));  // hits zero
    CHECK(pochhammer(rational(1, 2), 2) == rational(3, 4));
    CHECK_THROWS_AS(pochhammer(rational(1), -1), std::invalid_argument);
}

TEST_CASE("pochhammer additivity (a)_{m+n} = (a)_m (a+m)_n") {
    for (long num = -5; num <= 5; ++num) {
        const rational a(num, 3);
        for (long m = 0; m <= 20; m += 5) {
            for (long n = 0; n <= 20; n += 4) {
                CHECK(pochhammer(a, m + n) ==
                      pochhammer(a, m) * pochhammer(a + rational(m), n));
            }
        }
    }
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == rational(1));
    CHECK(factorial(5) == rational(120));
    CHECK(factorial(12) == rational(479001600L));
    CHECK(binomial(10, 3) == integer(120));
    CHECK(binomial(7, 0) == integer(1));
    CHECK(binomial(7, 7) == integer(1));
    CHECK_THROWS_AS(binomial(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("factorial as a pochhammer value") {
    for (long n = 0; n <= 15; ++n) CHECK(factorial(n) == pochhammer(rational(1), n));
}

TEST_CASE("coupling construction enforces positivity") {
    CHECK(coupling(rational(1, 3)).value() == rational(1, 3));
    CHECK(coupling(rational(7, 3)).value() == rational(7, 3));
    CHECK_THROWS_AS(coupling(rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(coupling(rational(-1, 2)), std::invalid_argument);
}
