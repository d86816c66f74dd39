#pragma once

#include <optional>

#include "pierce/certified.hpp"
#include "pierce/digits.hpp"

namespace pierce {

/// One application of the digit map and the shift T(x) = 1 - ⌊1/x⌋x.
struct StepResult {
  std::optional<Integer> digit;  // nullopt is ∞ (x == 0)
  Rational remainder;
};

StepResult step(const Rational& x);

/// Finite Pierce expansion of a rational in [0, 1].
DigitSeq encode(const Rational& x);

/// Σ_{k<=n} (-1)^{k+1} / (σ_1⋯σ_k) for the first n known digits.
Rational partial_sum(const DigitSeq& s, std::size_t n);

/// Exact value of a terminated sequence.
Rational decode(const DigitSeq& s);

/// Product σ_1⋯σ_n of the first n digits (1 for n == 0).
Integer digit_product(const DigitSeq& s, std::size_t n);

/// Magnitude 1/(σ_1⋯σ_{n+1}) of the first omitted term; 0 once a terminated
/// series has ended.
Rational tail_bound(const DigitSeq& s, std::size_t n);

/// [min(S_n, S_{n+1}), max(S_n, S_{n+1})], or the exact value for a
/// terminated sequence with n >= its length.
Enclosure enclose(const DigitSeq& s, std::size_t n);

}  // namespace pierce
