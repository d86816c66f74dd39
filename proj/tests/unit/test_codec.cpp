#include <doctest.h>

#include "../oracles.hpp"
#include "pierce/codec.hpp"
#include "pierce/error.hpp"
#include "pierce/random.hpp"

using namespace pierce;

namespace {
DigitSeq term(std::vector<Integer> v) { return DigitSeq::terminated(std::move(v)); }
DigitSeq ext(std::vector<Integer> v) { return DigitSeq::extendable(std::move(v)); }
}  // namespace

TEST_CASE("step") {
  StepResult a = step(Rational(1, 2));
  CHECK(*a.digit == 2);
  CHECK(a.remainder == 0);
  StepResult z = step(Rational(0));
  CHECK_FALSE(z.digit.has_value());
  CHECK(z.remainder == 0);
  StepResult b = step(Rational(2, 3));
  CHECK(*b.digit == 1);
  CHECK(b.remainder == Rational(1, 3));
  StepResult one = step(Rational(1));
  CHECK(*one.digit == 1);
  CHECK(one.remainder == 0);
  CHECK_THROWS_AS(step(Rational(3, 2)), Error);
  CHECK_THROWS_AS(step(Rational(-1, 2)), Error);
}

TEST_CASE("encode") {
  CHECK(encode(Rational(5, 7)) == term({1, 3, 7}));
  CHECK(encode(Rational(0)) == DigitSeq::zero());
  CHECK(encode(Rational(97, 400)) == term({4, 33, 100}));
  CHECK(encode(Rational(1)) == term({1}));
  CHECK(encode(Rational(3, 8)) == term({2, 4}));
}

TEST_CASE("decode") {
  CHECK(decode(term({1})) == 1);
  CHECK(decode(term({1, 3, 7})) == Rational(5, 7));
  CHECK(decode(term({2, 3, 4})) == Rational(3, 8));
  CHECK(decode(DigitSeq::zero()) == 0);
  CHECK_THROWS_AS(decode(ext({2, 3})), Error);
}

TEST_CASE("round trip against the term-by-term oracle") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    std::uint64_t den = rng.uniform(1, 5000);
    std::uint64_t num = rng.uniform(0, den);
    Rational x(Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den)));
    x.canonicalize();
    DigitSeq s = encode(x);
    CHECK(s.is_terminated());
    CHECK(oracle::alternating_sum(s.prefix(), s.size()) == x);
    CHECK(decode(s) == x);
    if (s.size() >= 2) CHECK(s[s.size() - 1] != s[s.size() - 2] + 1);
  }
}

TEST_CASE("partial sums match the oracle on every prefix") {
  DigitSeq s = ext({2, 3, 5, 9, 14, 30, 31, 77});
  for (std::size_t n = 0; n <= s.size(); ++n)
    CHECK(partial_sum(s, n) == oracle::alternating_sum(s.prefix(), n));
  CHECK_THROWS_AS(partial_sum(s, 9), Error);
}

TEST_CASE("tail bound") {
  CHECK(tail_bound(ext({2, 3, 4, 5, 6}), 4) == Rational(1, 720));
  CHECK(tail_bound(ext({2, 3, 4, 5}), 3) == Rational(1, 120));
  CHECK(tail_bound(term({3, 8, 21}), 2) == Rational(1, 504));
  CHECK(tail_bound(term({3, 8, 21}), 3) == 0);
  CHECK_THROWS_AS(tail_bound(ext({2, 3, 4}), 3), Error);
  CHECK(digit_product(term({3, 8, 21}), 3) == 504);
}

TEST_CASE("enclose") {
  Enclosure e = enclose(ext({2, 3, 4, 5}), 3);
  CHECK(e == Enclosure(Rational(11, 30), Rational(3, 8)));
  // e^{-1} lies inside, bracketed by the factorial series
  CHECK(e.lo < oracle::inverse_e_partial(12));
  CHECK(e.hi > oracle::inverse_e_partial(13));

  CHECK(enclose(term({3, 8, 21}), 3) == Enclosure::point(Rational(37, 126)));
  CHECK(enclose(term({3, 8, 21}), 5) == Enclosure::point(Rational(37, 126)));

  Enclosure f = enclose(ext({4, 9}), 1);
  CHECK(f == Enclosure(Rational(1, 4) - Rational(1, 36), Rational(1, 4)));
  CHECK_THROWS_AS(enclose(ext({4}), 1), Error);
  CHECK_THROWS_AS(enclose(ext({4, 9}), 0), Error);

  std::vector<Integer> fac;
  for (int k = 2; k <= 14; ++k) fac.push_back(k);
  Enclosure g = enclose(DigitSeq::extendable(fac), 12);
  CHECK(g.lo == Rational(63633137, 172972800));
  CHECK(g.hi == Rational(Integer("2467007773"), Integer("6706022400")));
}
