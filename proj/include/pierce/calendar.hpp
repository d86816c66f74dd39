#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pierce/certified.hpp"
#include "pierce/digits.hpp"

namespace pierce {

enum class RuleKind { explicit_terms, pierce_derived };

/// An intercalation sequence: positive integers with σ_k >= 2 for k >= 2.
/// Terms may repeat (Gregorian is (4, 25, 4)). An extendable rule only knows
/// a prefix of an infinite sequence.
class IntercalationRule {
 public:
  IntercalationRule(std::vector<Integer> terms, Tail tail = Tail::terminated,
                    RuleKind kind = RuleKind::explicit_terms);

  /// Uses a Pierce digit sequence as the intercalation sequence.
  static IntercalationRule from_digits(const DigitSeq& digits);

  static IntercalationRule julian() { return IntercalationRule({4}); }
  static IntercalationRule gregorian() { return IntercalationRule({4, 25, 4}); }

  const std::vector<Integer>& terms() const noexcept { return terms_; }
  /// products()[k] = σ_1⋯σ_{k+1}
  const std::vector<Integer>& products() const noexcept { return products_; }
  bool is_finite() const noexcept { return tail_ == Tail::terminated; }
  Tail tail() const noexcept { return tail_; }
  RuleKind kind() const noexcept { return kind_; }

  /// Number of leading cumulative products that are <= year. Raises
  /// InsufficientPrefix when an extendable rule runs out of known terms
  /// before a product exceeds `year`.
  std::size_t active_terms(const Integer& year) const;

 private:
  std::vector<Integer> terms_;
  std::vector<Integer> products_;
  Tail tail_;
  RuleKind kind_;
};

/// "julian", "gregorian", or comma-separated terms with an optional ",...".
IntercalationRule parse_rule(std::string_view text);
std::string format_rule(const IntercalationRule& rule);

/// Fractional part of the mean tropical year, 0.242189 days.
Rational tropical_year_fraction();

/// 1 iff n divides m.
int mul(const Integer& m, const Integer& n);

bool is_leap(const IntercalationRule& rule, const Integer& year);

/// L(σ, N) by testing every year 1..N.
std::uint64_t count_leaps_direct(const IntercalationRule& rule, std::uint64_t through);

/// Leap years in [first, last]; chunks over a partition of 1..N add up to
/// count_leaps_direct.
std::uint64_t count_leaps_in_range(const IntercalationRule& rule, std::uint64_t first, std::uint64_t last);

/// L(σ, N) = Σ_k (-1)^{k+1} ⌊N / (σ_1⋯σ_k)⌋.
Integer count_leaps_formula(const IntercalationRule& rule, const Integer& through);

/// Average fractional day per year, Σ_k (-1)^{k+1} / (σ_1⋯σ_k). Exact for
/// finite rules; for extendable rules the bracket of the n-th and (n+1)-th
/// partial sums.
Enclosure series_value(const IntercalationRule& rule, std::size_t n = 0);

struct DriftRecord {
  Integer year;
  Integer leap_count;
  Enclosure drift;  // N·x - L(σ, N)
};

DriftRecord drift(const Enclosure& x, const IntercalationRule& rule, const Integer& year);

}  // namespace pierce
