#pragma once

#include <string>
#include <vector>

#include "pierce/digits.hpp"

namespace pierce {

/// The set I_σ of numbers whose expansion begins with σ, as an interval with
/// exact endpoints. For n = |σ| odd the right endpoint is φ(σ); for n even the
/// left one is. That endpoint is closed iff σ ∈ Σ′, the other is always open.
struct FundamentalInterval {
  DigitSeq generator;
  Rational left;
  Rational right;
  bool left_open = true;
  bool right_open = true;

  bool contains(const Rational& x) const;
  /// Whether every point of this interval lies in the open interval (a, b).
  bool inside_open(const Rational& a, const Rational& b) const;
  Rational width() const { return right - left; }
};

FundamentalInterval fundamental_interval(const DigitSeq& sigma);

/// Geometric membership test x ∈ I_σ.
bool contains(const DigitSeq& sigma, const Rational& x);

/// I_{(σ, j)} for j = σ_n + 1, …, j_max.
std::vector<FundamentalInterval> children(const DigitSeq& sigma, const Integer& j_max);

/// g_σ(x) = φ(σ) + (-1)^n x / (σ_1⋯σ_n).
struct AffineMap {
  DigitSeq generator;
  Rational offset;
  Rational slope;

  Rational apply(const Rational& x) const;
  Rational invert(const Rational& y) const;
};

AffineMap affine_map(const DigitSeq& sigma);
Rational affine_apply(const DigitSeq& sigma, const Rational& x);
Rational affine_invert(const DigitSeq& sigma, const Rational& y);

/// A σ with I_σ ⊆ (a, b), found by refining the expansion of the midpoint.
/// The containment is checked exactly before returning.
DigitSeq find_interval_within(const Rational& a, const Rational& b);

/// {"generator": "1,4", "left": "3/4", "right": "4/5", "leftOpen": false, "rightOpen": true}
std::string to_json(const FundamentalInterval& interval);
/// "[3/4, 4/5)"
std::string format_interval(const FundamentalInterval& interval);

}  // namespace pierce
