#include <doctest.h>

#include "../oracles.hpp"
#include "pierce/certified.hpp"
#include "pierce/error.hpp"
#include "pierce/random.hpp"
#include "pierce/rational.hpp"

using namespace pierce;

namespace {
Rational q(const char* s) { return parse_rational(s); }
}

TEST_CASE("parse and format rationals") {
  CHECK(parse_rational("97/400") == Rational(97, 400));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("0.242189") == Rational(242189, 1000000));
  CHECK(parse_rational(" 1/2 ") == Rational(1, 2));
  CHECK(format_rational(Rational(3, 4)) == "3/4");
  CHECK(format_rational(Rational(2)) == "2/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(parse_integer("123456789012345678901234567890").get_str() == "123456789012345678901234567890");
  CHECK_THROWS_AS(parse_integer("12x"), Error);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(to_decimal(Rational(97, 400), 4) == "0.2425");
  CHECK(to_decimal(Rational(2, 3), 3) == "0.667");
  CHECK(to_decimal(Rational(-2, 3), 3) == "-0.667");
  CHECK(to_decimal(Rational(1, 8), 2) == "0.13");
  CHECK(to_decimal(Rational(5), 2) == "5.00");
}

TEST_CASE("floor ceil pow2") {
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(ceil(Rational(4)) == 4);
  CHECK(pow2(3) == 8);
  CHECK(pow2(-2) == Rational(1, 4));
}

TEST_CASE("u64 conversions") {
  const std::uint64_t big = 0xfedcba9876543210ULL;
  CHECK(fits_u64(from_u64(big)));
  CHECK(to_u64(from_u64(big)) == big);
  Integer over = from_u64(~std::uint64_t{0});
  over += 1;
  CHECK_FALSE(fits_u64(over));
  CHECK_FALSE(fits_u64(Integer(-1)));
}

TEST_CASE("enclosure basics") {
  CHECK_THROWS_AS(Enclosure(Rational(1), Rational(0)), Error);
  Enclosure e(Rational(1, 3), Rational(1, 2));
  CHECK(e.contains(Rational(2, 5)));
  CHECK_FALSE(e.contains(Rational(3, 5)));
  CHECK(e.width() == Rational(1, 6));
  CHECK(hull(Rational(1, 2), Rational(1, 3)) == e);
  CHECK(e.overlaps(Enclosure(Rational(1, 2), Rational(1))));
  CHECK_FALSE(e.overlaps(Enclosure(Rational(3, 5), Rational(1))));
}

TEST_CASE("certified log encloses known constants") {
  // ln 2 to 30 significant digits
  Enclosure ln2 = certified::log(Rational(2), 128);
  CHECK(ln2.lo >= q("0.693147180559945309417232121457"));
  CHECK(ln2.hi <= q("0.693147180559945309417232121459"));
  CHECK(ln2.width() < pow2(-120));
  CHECK(certified::log(Rational(1), 64) == Enclosure::point(0));
  CHECK_THROWS_AS(certified::log(Rational(0), 64), Error);
  CHECK_THROWS_AS(certified::log(Rational(-1), 64), Error);
}

TEST_CASE("certified exp brackets e from the factorial series") {
  // Σ_{m<25} 1/m! < e < Σ_{m<25} 1/m! + 2/25!
  Rational partial = 0;
  Integer fact = 1;
  for (unsigned m = 0; m < 25; ++m) {
    if (m > 0) fact *= m;
    partial += Rational(Integer(1), fact);
  }
  fact *= 25;
  Enclosure e = certified::exp(Rational(1), 128);
  CHECK(e.hi > partial);
  CHECK(e.lo < partial + Rational(Integer(2), fact));
  CHECK(e.width() < pow2(-120));
  CHECK(certified::exp(Rational(0), 64) == Enclosure::point(1));
  Enclosure big = certified::exp(Rational(400), 128);
  CHECK(big.width() / big.lo < pow2(-120));
}

TEST_CASE("certified sqrt and divide round outward") {
  Enclosure r = certified::sqrt(Enclosure::point(2), 128);
  CHECK(r.lo * r.lo <= 2);
  CHECK(r.hi * r.hi >= 2);
  CHECK(r.width() < pow2(-120));
  CHECK(certified::sqrt(Enclosure::point(Rational(9, 4)), 64) == Enclosure::point(Rational(3, 2)));
  Enclosure d = certified::divide(Enclosure::point(1), Enclosure::point(3), 64);
  CHECK(d.contains(Rational(1, 3)));
  CHECK(d.width() < pow2(-60));
  CHECK_THROWS_AS(certified::divide(Enclosure::point(1), Enclosure(Rational(-1), Rational(1)), 64), Error);
  Enclosure neg = certified::divide(Enclosure(Rational(-2), Rational(-1)), Enclosure::point(3), 64);
  CHECK(neg.contains(Rational(-2, 3)));
  CHECK(neg.contains(Rational(-1, 3)));
}

TEST_CASE("rounding helpers are directed") {
  Rational third(1, 3);
  CHECK(certified::round_down(third, 20) <= third);
  CHECK(certified::round_up(third, 20) >= third);
  CHECK(certified::round_up(third, 20) - certified::round_down(third, 20) <= pow2(-20));
}

TEST_CASE("precision from environment") {
  setenv("PIERCE_PRECISION", "256", 1);
  CHECK(Precision::from_env().bits == 256);
  setenv("PIERCE_PRECISION", "3", 1);
  CHECK(Precision::from_env().bits == 128);
  unsetenv("PIERCE_PRECISION");
  CHECK(Precision::from_env().bits == 128);
}

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng() == 0xe220a8397b1dcdafULL);
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a() == b());
  SplitMix64 c(7);
  for (int i = 0; i < 1000; ++i) {
    auto v = c.uniform(3, 9);
    CHECK(v >= 3);
    CHECK(v <= 9);
  }
  SplitMix64 d(7);
  for (int i = 0; i < 50; ++i) CHECK(d.uniform_bits(128) < Integer(1) << 128);
}
