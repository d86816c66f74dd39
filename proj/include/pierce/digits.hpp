#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pierce/rational.hpp"

namespace pierce {

enum class Tail { terminated, extendable };

/// A finite strictly increasing run of positive digits plus a tail marker.
///
/// A terminated sequence stands for (σ_1, …, σ_n, ∞, ∞, …); the empty
/// terminated sequence is the all-∞ expansion of 0. An extendable sequence is
/// a known prefix of an infinite strictly increasing sequence; operations that
/// would read past the known prefix raise InsufficientPrefix.
class DigitSeq {
 public:
  DigitSeq() = default;
  DigitSeq(std::vector<Integer> prefix, Tail tail);

  static DigitSeq terminated(std::vector<Integer> prefix) {
    return DigitSeq(std::move(prefix), Tail::terminated);
  }
  static DigitSeq extendable(std::vector<Integer> prefix) {
    return DigitSeq(std::move(prefix), Tail::extendable);
  }
  static DigitSeq zero() { return DigitSeq(); }

  const std::vector<Integer>& prefix() const noexcept { return prefix_; }
  Tail tail() const noexcept { return tail_; }
  bool is_terminated() const noexcept { return tail_ == Tail::terminated; }
  bool is_extendable() const noexcept { return tail_ == Tail::extendable; }
  std::size_t size() const noexcept { return prefix_.size(); }
  bool empty() const noexcept { return prefix_.empty(); }

  /// 1-based digit access. For terminated sequences positions past the end
  /// are ∞ (nullopt); for extendable ones they raise InsufficientPrefix.
  std::optional<Integer> digit(std::size_t k) const;
  const Integer& operator[](std::size_t i) const { return prefix_[i]; }

  /// Terminated sequence made of the first n digits (n <= size()).
  DigitSeq first(std::size_t n) const;

  /// Whether this sequence's known digits start with `head`'s digits.
  bool starts_with(const DigitSeq& head) const;

  friend bool operator==(const DigitSeq&, const DigitSeq&) = default;

 private:
  std::vector<Integer> prefix_;
  Tail tail_ = Tail::terminated;
};

/// "3,8,21" (terminated), "3,8,21,..." (extendable), "0" (the expansion of 0).
DigitSeq parse_digits(std::string_view text);
std::string format_digits(const DigitSeq& s);

/// Digit of an (ℕ ∪ {∞})-valued sequence; nullopt is ∞.
using ExtendedDigit = std::optional<Integer>;

/// Parses entries that may include "inf"; "..." marks an extendable tail and
/// is reported through `extendable`.
std::vector<ExtendedDigit> parse_extended(std::string_view text, bool& extendable);

enum class SequenceClass { sigma0, sigmaN, sigmaInfinityPrefix };

struct CanonicityReport {
  SequenceClass cls = SequenceClass::sigma0;
  std::size_t length = 0;  // n for sigmaN, known prefix length otherwise
  bool canonical = true;

  friend bool operator==(const CanonicityReport&, const CanonicityReport&) = default;
};

/// Classifies a sequence given as explicit entries. A list that ends in ∞
/// markers is finite (Σ_0 or Σ_n); a list with no ∞ is a prefix of Σ_∞ unless
/// `extendable` is false, in which case trailing ∞'s are implied.
CanonicityReport classify(std::span<const ExtendedDigit> seq, bool extendable = false);
CanonicityReport classify(const DigitSeq& seq);

/// True when the terminated sequence belongs to Σ′.
bool is_canonical(std::span<const Integer> digits);

/// ⟨τ_1, …, τ_m, d_{m+1}(x), …⟩: swaps in `tau` for the first m digits.
DigitSeq replace_prefix(const DigitSeq& x, std::span<const Integer> tau);

struct ZcPrefix {
  DigitSeq prefix;
  Rational c;
  std::size_t start_index = 1;
};

/// All strictly increasing prefixes of length `depth` with σ_n <= n + c for
/// every n >= start_index, in lexicographic order.
std::vector<ZcPrefix> enumerate_zc(const Rational& c, std::size_t start_index, std::size_t depth);

/// Jump tuple of θ(σ, n) = σ_n - n: each position n at which θ increases is
/// listed once per unit of increase (θ(σ, 0) is taken as 0), so the result is
/// the non-decreasing tuple (n_1, n_2, …).
std::vector<std::size_t> jump_positions(const ZcPrefix& p);

}  // namespace pierce
