#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "liecert/rational.hpp"

using liecert::Rational;

TEST_CASE("canonical form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(4, 2).to_fraction_string() == "2/1");
  CHECK(Rational(0, 5).to_fraction_string() == "0/1");
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(7, 3).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("123456789012345678901234567890/10").to_string() == "12345678901234567890123456789");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("overflow promotes to big and demotes back") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  const Rational sum = big + big;
  CHECK(sum.to_string() == "18446744073709551614");
  CHECK_THROWS_AS((void)sum.to_int64(), std::range_error);
  const Rational back = sum - big;
  CHECK(back == big);
  CHECK(back.to_int64() == std::numeric_limits<std::int64_t>::max());

  const Rational m(std::numeric_limits<std::int64_t>::min());
  CHECK((-m).to_string() == "9223372036854775808");
  CHECK(-(-m) == m);

  Rational p = 1;
  for (int i = 0; i < 100; ++i) p *= 3;
  for (int i = 0; i < 100; ++i) p /= 3;
  CHECK(p == Rational(1));
  CHECK(p.to_int64() == 1);
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(-2).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
  const Rational huge = Rational::parse("100000000000000000000000");
  CHECK(huge > Rational(std::numeric_limits<std::int64_t>::max()));
  CHECK(-huge < Rational(std::numeric_limits<std::int64_t>::min()));
}

TEST_CASE("division by zero throws") {
  Rational a(3);
  CHECK_THROWS_AS(a /= Rational(0), std::domain_error);
}

TEST_CASE("field axioms against GMP on random values") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> wide(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
  std::uniform_int_distribution<std::int64_t> den(1, std::int64_t{1} << 30);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a(wide(rng), den(rng));
    const Rational b(wide(rng), den(rng));
    const mpq_class qa = a.to_mpq(), qb = b.to_mpq();
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a - b).to_mpq() == qa - qb);
    CHECK((a * b).to_mpq() == qa * qb);
    if (!b.is_zero()) CHECK((a / b).to_mpq() == qa / qb);
    CHECK((a < b) == (qa < qb));
  }
}
