#include "pierce/codec.hpp"

#include "pierce/error.hpp"

namespace pierce {

namespace {

constexpr std::size_t kMaxEncodeSteps = 1'000'000;

void check_unit(const Rational& x) {
  if (sgn(x) < 0 || x > 1) fail(ErrorCode::OutOfDomain, format_rational(x) + " is outside [0, 1]");
}

void require_digits(const DigitSeq& s, std::size_t n) {
  if (n > s.size())
    fail(ErrorCode::InsufficientPrefix, "need " + std::to_string(n) + " digits, only " +
                                            std::to_string(s.size()) + " known");
}

}  // namespace

StepResult step(const Rational& x) {
  check_unit(x);
  if (sgn(x) == 0) return {std::nullopt, Rational(0)};
  // ⌊1/x⌋ for x = p/q is ⌊q/p⌋.
  Integer d;
  mpz_fdiv_q(d.get_mpz_t(), x.get_den_mpz_t(), x.get_num_mpz_t());
  Rational remainder = 1 - d * x;
  return {d, remainder};
}

DigitSeq encode(const Rational& x) {
  check_unit(x);
  std::vector<Integer> digits;
  Rational current = x;
  for (std::size_t i = 0; sgn(current) != 0; ++i) {
    if (i >= kMaxEncodeSteps) fail(ErrorCode::NonTermination, "expansion did not terminate");
    StepResult r = step(current);
    digits.push_back(*r.digit);
    current = std::move(r.remainder);
  }
  return DigitSeq::terminated(std::move(digits));
}

Rational partial_sum(const DigitSeq& s, std::size_t n) {
  require_digits(s, n);
  // S_n = A_n / (σ_1⋯σ_n) with A_k = A_{k-1}·σ_k + (-1)^{k+1}; no gcd until the end.
  Integer numerator = 0;
  Integer product = 1;
  for (std::size_t k = 0; k < n; ++k) {
    numerator *= s[k];
    numerator += (k % 2 == 0) ? 1 : -1;
    product *= s[k];
  }
  return make_rational(numerator, product);
}

Rational decode(const DigitSeq& s) {
  if (!s.is_terminated()) fail(ErrorCode::InsufficientPrefix, "cannot decode an extendable sequence exactly");
  return partial_sum(s, s.size());
}

Integer digit_product(const DigitSeq& s, std::size_t n) {
  require_digits(s, n);
  Integer p = 1;
  for (std::size_t k = 0; k < n; ++k) p *= s[k];
  return p;
}

Rational tail_bound(const DigitSeq& s, std::size_t n) {
  if (s.is_terminated() && n >= s.size()) return Rational(0);
  require_digits(s, n + 1);
  return Rational(Integer(1), digit_product(s, n + 1));
}

Enclosure enclose(const DigitSeq& s, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "enclosure index must be positive");
  if (s.is_terminated() && n >= s.size()) return Enclosure::point(decode(s));
  require_digits(s, n + 1);
  Rational sn = partial_sum(s, n);
  Integer next = digit_product(s, n + 1);
  Rational sn1 = sn + Rational(Integer(n % 2 == 0 ? 1 : -1), next);
  return hull(sn, sn1);
}

}  // namespace pierce
