#include <doctest.h>

#include "../oracles.hpp"
#include "pierce/codec.hpp"
#include "pierce/error.hpp"
#include "pierce/intervals.hpp"
#include "pierce/random.hpp"

using namespace pierce;

namespace {
DigitSeq term(std::vector<Integer> v) { return DigitSeq::terminated(std::move(v)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}
}  // namespace

TEST_CASE("golden fundamental intervals") {
  auto a = fundamental_interval(term({1}));
  CHECK(a.left == Rational(1, 2));
  CHECK(a.right == 1);
  CHECK(a.left_open);
  CHECK_FALSE(a.right_open);

  auto b = fundamental_interval(term({2, 3}));
  CHECK(b.left == Rational(1, 3));
  CHECK(b.right == Rational(3, 8));
  CHECK(b.left_open);
  CHECK(b.right_open);

  auto c = fundamental_interval(term({1, 4}));
  CHECK(c.left == Rational(3, 4));
  CHECK(c.right == Rational(4, 5));
  CHECK_FALSE(c.left_open);
  CHECK(c.right_open);
  CHECK(format_interval(c) == "[3/4, 4/5)");
  CHECK(to_json(c) == R"({"generator":"1,4","left":"3/4","right":"4/5","leftOpen":false,"rightOpen":true})");

  CHECK(code_of([] { fundamental_interval(DigitSeq::zero()); }) == ErrorCode::EmptyGenerator);
}

TEST_CASE("membership") {
  CHECK(contains(term({1, 4}), Rational(39, 50)));
  CHECK_FALSE(contains(term({1}), Rational(1, 2)));
  CHECK_FALSE(contains(term({2, 3}), Rational(1, 3)));
  CHECK(contains(term({1}), Rational(1)));
}

TEST_CASE("membership agrees with the digits of the point") {
  // x ∈ I_σ exactly when the expansion of x starts with σ
  SplitMix64 rng(11);
  const DigitSeq sigmas[] = {term({1}), term({2}), term({2, 3}), term({2, 5}), term({1, 4}), term({3, 4, 9})};
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t den = rng.uniform(1, 400);
    Rational x(Integer(static_cast<unsigned long>(rng.uniform(0, den))), Integer(static_cast<unsigned long>(den)));
    x.canonicalize();
    DigitSeq e = encode(x);
    for (const auto& s : sigmas) CHECK(contains(s, x) == e.starts_with(s));
  }
}

TEST_CASE("children") {
  auto kids = children(term({2}), Integer(5));
  REQUIRE(kids.size() == 3);
  CHECK(kids[0].generator == term({2, 3}));
  CHECK(kids[1].generator == term({2, 4}));
  CHECK(kids[2].generator == term({2, 5}));

  auto ones = children(term({1}), Integer(3));
  REQUIRE(ones.size() == 2);
  CHECK(ones[0].generator == term({1, 2}));
  CHECK(ones[1].generator == term({1, 3}));

  CHECK(code_of([] { children(term({4}), Integer(4)); }) == ErrorCode::BadRange);
  CHECK(code_of([] { children(DigitSeq::zero(), Integer(4)); }) == ErrorCode::EmptyGenerator);
}

TEST_CASE("affine maps") {
  CHECK(affine_apply(term({2}), Rational(1, 4)) == Rational(3, 8));
  CHECK(affine_apply(term({2}), Rational(0)) == Rational(1, 2));
  CHECK(affine_apply(term({1, 3}), Rational(1, 7)) == Rational(5, 7));
  CHECK(affine_invert(term({2}), Rational(3, 8)) == Rational(1, 4));
  CHECK(affine_invert(term({1, 3}), Rational(5, 7)) == Rational(1, 7));
  CHECK(code_of([] { affine_invert(term({2}), Rational(1)); }) == ErrorCode::NotInImage);
  CHECK(code_of([] { affine_apply(term({2}), Rational(2)); }) == ErrorCode::OutOfDomain);

  // g_σ(⟨τ⟩) = ⟨σ, τ⟩ whenever the concatenation stays increasing
  CHECK(affine_apply(term({2}), decode(term({4}))) == decode(term({2, 4})));
  CHECK(affine_apply(term({1, 3}), decode(term({5, 11, 40}))) == decode(term({1, 3, 5, 11, 40})));
}

TEST_CASE("find_interval_within") {
  DigitSeq s = find_interval_within(Rational(7, 10), Rational(4, 5));
  CHECK(fundamental_interval(s).inside_open(Rational(7, 10), Rational(4, 5)));
  CHECK(s == term({1, 4}));

  DigitSeq u = find_interval_within(Rational(0), Rational(1));
  CHECK(fundamental_interval(u).inside_open(Rational(0), Rational(1)));

  CHECK(code_of([] { find_interval_within(Rational(1, 2), Rational(1, 2)); }) == ErrorCode::DegenerateInput);
  CHECK(code_of([] { find_interval_within(Rational(-1, 2), Rational(1, 2)); }) == ErrorCode::OutOfDomain);

  SplitMix64 rng(5);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t den = rng.uniform(2, 100000);
    std::uint64_t p = rng.uniform(0, den - 1);
    std::uint64_t q = rng.uniform(p + 1, den);
    Rational a(Integer(static_cast<unsigned long>(p)), Integer(static_cast<unsigned long>(den)));
    Rational b(Integer(static_cast<unsigned long>(q)), Integer(static_cast<unsigned long>(den)));
    a.canonicalize();
    b.canonicalize();
    auto iv = fundamental_interval(find_interval_within(a, b));
    CHECK(iv.left >= a);
    CHECK(iv.right <= b);
    CHECK(iv.inside_open(a, b));
  }
}
