#include "pierce/calendar.hpp"

#include "pierce/error.hpp"

namespace pierce {

IntercalationRule::IntercalationRule(std::vector<Integer> terms, Tail tail, RuleKind kind)
    : terms_(std::move(terms)), tail_(tail), kind_(kind) {
  if (terms_.empty()) fail(ErrorCode::InvalidRule, "an intercalation rule needs at least one term");
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (sgn(terms_[k]) <= 0) fail(ErrorCode::InvalidRule, "rule terms must be positive integers");
    if (k > 0 && terms_[k] < 2)
      fail(ErrorCode::InvalidRule, "rule term " + std::to_string(k + 1) + " must be at least 2");
  }
  products_.reserve(terms_.size());
  Integer p = 1;
  for (const auto& t : terms_) {
    p *= t;
    products_.push_back(p);
  }
}

IntercalationRule IntercalationRule::from_digits(const DigitSeq& digits) {
  return IntercalationRule(digits.prefix(), digits.tail(), RuleKind::pierce_derived);
}

std::size_t IntercalationRule::active_terms(const Integer& year) const {
  std::size_t k = 0;
  while (k < products_.size() && products_[k] <= year) ++k;
  if (k == products_.size() && tail_ == Tail::extendable)
    fail(ErrorCode::InsufficientPrefix, "all " + std::to_string(k) + " known rule products are <= " +
                                            year.get_str() + "; more terms are needed");
  return k;
}

IntercalationRule parse_rule(std::string_view text) {
  if (text == "julian") return IntercalationRule::julian();
  if (text == "gregorian") return IntercalationRule::gregorian();
  bool extendable = false;
  auto entries = parse_extended(text, extendable);
  std::vector<Integer> terms;
  for (auto& e : entries) {
    if (!e) fail(ErrorCode::InvalidRule, "rule terms must be finite");
    terms.push_back(*e);
  }
  return IntercalationRule(std::move(terms), extendable ? Tail::extendable : Tail::terminated);
}

std::string format_rule(const IntercalationRule& rule) {
  std::string out;
  for (std::size_t i = 0; i < rule.terms().size(); ++i) {
    if (i) out += ',';
    out += rule.terms()[i].get_str();
  }
  if (!rule.is_finite()) out += ",...";
  return out;
}

Rational tropical_year_fraction() { return Rational(242189, 1000000); }

int mul(const Integer& m, const Integer& n) {
  if (sgn(m) <= 0 || sgn(n) <= 0) fail(ErrorCode::OutOfDomain, "mul is defined on positive integers");
  return mpz_divisible_p(m.get_mpz_t(), n.get_mpz_t()) ? 1 : 0;
}

bool is_leap(const IntercalationRule& rule, const Integer& year) {
  if (sgn(year) <= 0) fail(ErrorCode::OutOfDomain, "years start at 1");
  std::size_t active = rule.active_terms(year);
  int sum = 0;
  for (std::size_t k = 0; k < active; ++k) sum += (k % 2 == 0 ? 1 : -1) * mul(year, rule.products()[k]);
  return sum == 1;
}

std::uint64_t count_leaps_in_range(const IntercalationRule& rule, std::uint64_t first, std::uint64_t last) {
  if (first == 0) fail(ErrorCode::OutOfDomain, "years start at 1");
  if (last < first) return 0;
  std::size_t active = rule.active_terms(from_u64(last));
  std::vector<std::uint64_t> products;
  for (std::size_t k = 0; k < active; ++k) products.push_back(to_u64(rule.products()[k]));

  std::uint64_t count = 0;
  for (std::uint64_t m = first; m <= last; ++m) {
    int sum = 0;
    for (std::size_t k = 0; k < products.size() && products[k] <= m; ++k) {
      // products[k+1] is a multiple of products[k], so later terms vanish too
      if (m % products[k] != 0) break;
      sum += (k % 2 == 0) ? 1 : -1;
    }
    if (sum == 1) ++count;
    if (m == last) break;
  }
  return count;
}

std::uint64_t count_leaps_direct(const IntercalationRule& rule, std::uint64_t through) {
  if (through == 0) fail(ErrorCode::OutOfDomain, "N must be at least 1");
  return count_leaps_in_range(rule, 1, through);
}

Integer count_leaps_formula(const IntercalationRule& rule, const Integer& through) {
  if (sgn(through) <= 0) fail(ErrorCode::OutOfDomain, "N must be at least 1");
  std::size_t active = rule.active_terms(through);
  Integer total = 0;
  Integer q;
  for (std::size_t k = 0; k < active; ++k) {
    mpz_fdiv_q(q.get_mpz_t(), through.get_mpz_t(), rule.products()[k].get_mpz_t());
    if (k % 2 == 0) total += q;
    else total -= q;
  }
  return total;
}

Enclosure series_value(const IntercalationRule& rule, std::size_t n) {
  const auto& products = rule.products();
  auto partial = [&](std::size_t terms) {
    Rational s = 0;
    for (std::size_t k = 0; k < terms; ++k) s += Rational(Integer(k % 2 == 0 ? 1 : -1), products[k]);
    s.canonicalize();
    return s;
  };
  if (rule.is_finite()) return Enclosure::point(partial(products.size()));
  if (n == 0) fail(ErrorCode::InvalidArgument, "an extendable rule needs a positive term count");
  if (n + 1 > products.size())
    fail(ErrorCode::InsufficientPrefix, "need " + std::to_string(n + 1) + " rule terms, only " +
                                            std::to_string(products.size()) + " known");
  Rational sn = partial(n);
  Rational sn1 = sn + Rational(Integer(n % 2 == 0 ? 1 : -1), products[n]);
  return hull(sn, sn1);
}

DriftRecord drift(const Enclosure& x, const IntercalationRule& rule, const Integer& year) {
  if (sgn(x.lo) < 0 || x.hi > 1) fail(ErrorCode::OutOfDomain, "x must lie in [0, 1]");
  Integer leaps = count_leaps_formula(rule, year);
  Rational n(year);
  Enclosure d(n * x.lo - leaps, n * x.hi - leaps);
  return DriftRecord{year, std::move(leaps), std::move(d)};
}

}  // namespace pierce
