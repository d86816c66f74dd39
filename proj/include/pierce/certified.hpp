#pragma once

#include <string>

#include "pierce/rational.hpp"

namespace pierce {

/// A closed interval [lo, hi] with exact rational endpoints that is known to
/// contain some real quantity.
struct Enclosure {
  Rational lo;
  Rational hi;

  Enclosure() = default;
  Enclosure(Rational lo_, Rational hi_);  // throws InvalidArgument if lo > hi
  static Enclosure point(const Rational& x) { return Enclosure(x, x); }

  Rational width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Enclosure& inner) const { return lo <= inner.lo && inner.hi <= hi; }
  bool overlaps(const Enclosure& other) const { return lo <= other.hi && other.lo <= hi; }
  Rational midpoint() const { return (lo + hi) / 2; }

  friend bool operator==(const Enclosure&, const Enclosure&) = default;
};

/// Hull of {a, b}.
Enclosure hull(const Rational& a, const Rational& b);

/// Working precision for transcendental enclosures, in significand bits.
/// Operations start at `bits` and double on ambiguity up to `max_bits`.
struct Precision {
  unsigned bits = 128;
  unsigned max_bits = 1024;

  /// Default precision, overridden by the PIERCE_PRECISION environment
  /// variable when it holds a positive integer.
  static Precision from_env();
};

/// Outward-rounded elementary functions. Results are dyadic rationals; the
/// true value always lies inside the returned enclosure.
namespace certified {

Enclosure log(const Rational& x, unsigned bits);          // x > 0
Enclosure log(const Enclosure& x, unsigned bits);         // x.lo > 0
Enclosure exp(const Rational& x, unsigned bits);          // bits of relative accuracy
Enclosure sqrt(const Enclosure& x, unsigned bits);        // x.lo >= 0
Enclosure divide(const Enclosure& num, const Enclosure& den, unsigned bits);  // den.lo > 0

/// Round x down / up to a dyadic with `bits` significant bits.
Rational round_down(const Rational& x, unsigned bits);
Rational round_up(const Rational& x, unsigned bits);

}  // namespace certified

std::string format_enclosure(const Enclosure& e, int decimals);

}  // namespace pierce
