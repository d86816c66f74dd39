#include "pierce/intervals.hpp"

#include <json.hpp>

#include "pierce/codec.hpp"
#include "pierce/error.hpp"

namespace pierce {

namespace {

DigitSeq generator_of(const DigitSeq& sigma) {
  if (sigma.empty()) fail(ErrorCode::EmptyGenerator, "fundamental intervals need a non-empty generator");
  return sigma.first(sigma.size());
}

DigitSeq with_last(const DigitSeq& sigma, const Integer& last) {
  std::vector<Integer> digits = sigma.prefix();
  digits.back() = last;
  return DigitSeq::terminated(std::move(digits));
}

DigitSeq appended(const DigitSeq& sigma, const Integer& next) {
  std::vector<Integer> digits = sigma.prefix();
  digits.push_back(next);
  return DigitSeq::terminated(std::move(digits));
}

}  // namespace

bool FundamentalInterval::contains(const Rational& x) const {
  bool after_left = left_open ? x > left : x >= left;
  bool before_right = right_open ? x < right : x <= right;
  return after_left && before_right;
}

bool FundamentalInterval::inside_open(const Rational& a, const Rational& b) const {
  bool left_ok = left_open ? left >= a : left > a;
  bool right_ok = right_open ? right <= b : right < b;
  return left_ok && right_ok;
}

FundamentalInterval fundamental_interval(const DigitSeq& sigma) {
  DigitSeq gen = generator_of(sigma);
  const bool odd = gen.size() % 2 == 1;
  const bool canonical = is_canonical(gen.prefix());
  Rational at_sigma = decode(gen);
  Rational at_next = decode(with_last(gen, gen.prefix().back() + 1));

  FundamentalInterval out{gen, {}, {}, true, true};
  if (odd) {
    out.left = at_next;
    out.right = at_sigma;
    out.right_open = !canonical;
  } else {
    out.left = at_sigma;
    out.right = at_next;
    out.left_open = !canonical;
  }
  return out;
}

bool contains(const DigitSeq& sigma, const Rational& x) {
  return fundamental_interval(sigma).contains(x);
}

std::vector<FundamentalInterval> children(const DigitSeq& sigma, const Integer& j_max) {
  DigitSeq gen = generator_of(sigma);
  const Integer& last = gen.prefix().back();
  if (j_max <= last)
    fail(ErrorCode::BadRange, "j_max " + j_max.get_str() + " must exceed the last digit " + last.get_str());
  std::vector<FundamentalInterval> out;
  for (Integer j = last + 1; j <= j_max; ++j) out.push_back(fundamental_interval(appended(gen, j)));
  return out;
}

Rational AffineMap::apply(const Rational& x) const {
  if (sgn(x) < 0 || x > 1) fail(ErrorCode::OutOfDomain, format_rational(x) + " is outside [0, 1]");
  return offset + slope * x;
}

Rational AffineMap::invert(const Rational& y) const {
  Rational end = offset + slope;
  const Rational& lo = offset < end ? offset : end;
  const Rational& hi = offset < end ? end : offset;
  if (y < lo || y > hi)
    fail(ErrorCode::NotInImage, format_rational(y) + " is outside the image [" + format_rational(lo) + ", " +
                                    format_rational(hi) + "]");
  return (y - offset) / slope;
}

AffineMap affine_map(const DigitSeq& sigma) {
  DigitSeq gen = generator_of(sigma);
  Rational slope(Integer(gen.size() % 2 == 0 ? 1 : -1), digit_product(gen, gen.size()));
  slope.canonicalize();
  Rational offset = decode(gen);
  return AffineMap{std::move(gen), std::move(offset), std::move(slope)};
}

Rational affine_apply(const DigitSeq& sigma, const Rational& x) { return affine_map(sigma).apply(x); }

Rational affine_invert(const DigitSeq& sigma, const Rational& y) { return affine_map(sigma).invert(y); }

DigitSeq find_interval_within(const Rational& a, const Rational& b) {
  if (a >= b)
    fail(ErrorCode::DegenerateInput, "(" + format_rational(a) + ", " + format_rational(b) + ") is empty");
  if (sgn(a) < 0 || b > 1) fail(ErrorCode::OutOfDomain, "interval must lie in [0, 1]");

  const Rational mid = (a + b) / 2;
  const DigitSeq expansion = encode(mid);
  for (std::size_t k = 1; k <= expansion.size(); ++k) {
    DigitSeq sigma = expansion.first(k);
    if (fundamental_interval(sigma).inside_open(a, b)) return sigma;
  }

  // I_{(σ, j)} shrinks toward φ(σ) = mid as j grows and stays inside once it
  // fits, so double to find a fit and bisect down to the smallest j.
  auto fits = [&](const Integer& j) { return fundamental_interval(appended(expansion, j)).inside_open(a, b); };
  Integer lo = expansion.prefix().back() + 1;
  if (fits(lo)) return appended(expansion, lo);
  Integer hi = lo * 2;
  while (!fits(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    Integer m = (lo + hi) / 2;
    if (fits(m)) hi = m;
    else lo = m;
  }
  DigitSeq sigma = appended(expansion, hi);
  if (!fundamental_interval(sigma).inside_open(a, b))
    fail(ErrorCode::DegenerateInput, "no fundamental interval found inside the range");
  return sigma;
}

std::string to_json(const FundamentalInterval& interval) {
  nlohmann::ordered_json j;
  j["generator"] = format_digits(interval.generator);
  j["left"] = format_rational(interval.left);
  j["right"] = format_rational(interval.right);
  j["leftOpen"] = interval.left_open;
  j["rightOpen"] = interval.right_open;
  return j.dump();
}

std::string format_interval(const FundamentalInterval& interval) {
  return std::string(interval.left_open ? "(" : "[") + format_rational(interval.left) + ", " +
         format_rational(interval.right) + (interval.right_open ? ")" : "]");
}

}  // namespace pierce
