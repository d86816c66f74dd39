#include "pierce/rational.hpp"

#include <cctype>

#include "pierce/error.hpp"

namespace pierce {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::MalformedTail: return "MalformedTail";
    case ErrorCode::IllFormedReplacement: return "IllFormedReplacement";
    case ErrorCode::ThetaViolation: return "ThetaViolation";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::InsufficientPrefix: return "InsufficientPrefix";
    case ErrorCode::EmptyGenerator: return "EmptyGenerator";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InvalidRule: return "InvalidRule";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) fail(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (negative || (!whole.empty() && whole.front() == '+')) whole.remove_prefix(1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      fail(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
    std::string digits = std::string(whole) + std::string(frac);
    Integer num(digits.empty() ? std::string("0") : digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    if (negative) num = -num;
    return make_rational(num, den);
  }
  return Rational(parse_integer(text));
}

std::string format_rational(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_decimal(const Rational& x, int digits) {
  if (digits < 0) digits = 0;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(x) * scale;
  // round half away from zero
  Integer n = floor(scaled + Rational(1, 2));
  std::string s = n.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sgn(x) < 0 && n != 0) s.insert(0, "-");
  return s;
}

Integer floor(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

bool fits_u64(const Integer& z) {
  return sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& z) {
  if (!fits_u64(z)) fail(ErrorCode::OutOfDomain, "integer does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, z.get_mpz_t());
  return out;
}

Integer from_u64(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return z;
}

}  // namespace pierce
