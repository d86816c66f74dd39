#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pierce/calendar.hpp"
#include "pierce/certified.hpp"
#include "pierce/digits.hpp"

namespace pierce {

/// Target digit growth α in lim (log d_n)/n = α; nullopt is α = ∞.
struct GrowthSpec {
  std::optional<Rational> alpha;

  static GrowthSpec finite(Rational a);
  static GrowthSpec infinite() { return GrowthSpec{}; }
  bool is_infinite() const noexcept { return !alpha.has_value(); }
};

/// "1", "3/2", "0.5", "inf".
GrowthSpec parse_growth(std::string_view text);
std::string format_growth(const GrowthSpec& spec);

/// First n digits of a sequence with (log d_k)/k → α:
///   α = 0:        d_k = k + 1
///   0 < α < ∞:    d_k = max(d_{k-1} + 1, ⌈e^{αk}⌉)
///   α = ∞:        d_k = max(d_{k-1} + 1, ⌈e^{k²}⌉)
/// Ceilings are certified; the precision doubles on ambiguity and
/// PrecisionExhausted is raised past prec.max_bits.
DigitSeq construct_digits(const GrowthSpec& spec, std::size_t n, const Precision& prec = Precision::from_env());

/// (log d_n)/n
Enclosure growth_rate(const DigitSeq& s, std::size_t n, const Precision& prec = Precision::from_env());

/// log(d_1⋯d_n) / (n²/2)
Enclosure log_product_rate(const DigitSeq& s, std::size_t n, const Precision& prec = Precision::from_env());

/// Σ_{k<=n} 1/d_k, exact.
Rational reciprocal_partial_sum(const DigitSeq& s, std::size_t n);

/// N_j = -1 + d_1 - d_1 d_2 + ⋯ + (-1)^{j+1} d_1⋯d_j.
Integer extremal_year(const DigitSeq& s, std::size_t j);

struct ExtremalYears {
  Integer n;  // N_{2r+1}
  Integer m;  // M_{2r} = -N_{2r}
};

ExtremalYears extremal_years(const DigitSeq& s, std::size_t r);

/// (N x - L(σ(x), N)) / sqrt(log N) where x is the point with digits s and
/// the rule is s itself. x is bracketed using `guard` digits beyond the last
/// cumulative product <= N.
struct QuotientEnclosure {
  Integer year;
  Integer leap_count;
  Enclosure drift;
  Enclosure log_year;
  Enclosure quotient;
};

QuotientEnclosure quotient_enclosure(const DigitSeq& s, const Integer& year, std::size_t guard,
                                     const Precision& prec = Precision::from_env());

/// Certified enclosure of (r/4) / sqrt(log N_{2r+1}), the quotient lower
/// bound implied by N_{2r+1} x - L >= r/4.
Enclosure drift_bound_quotient(const DigitSeq& s, std::size_t r, const Precision& prec = Precision::from_env());

enum class Branch { upper, lower };  // N_{2r+1} rows, M_{2r} rows

struct TrajectoryRow {
  Branch branch = Branch::upper;
  std::size_t r = 0;
  Integer year;
  Integer leap_count;
  Enclosure drift;
  Enclosure log_year;
  Enclosure quotient;
  std::optional<bool> thm2_satisfied;  // drift.lo >= r/4, upper branch only
};

/// Rows for r = 1..r_max on the upper branch followed by the lower branch.
std::vector<TrajectoryRow> trajectory(const GrowthSpec& spec, std::size_t r_max, std::size_t guard,
                                      const Precision& prec = Precision::from_env());
std::vector<TrajectoryRow> trajectory(const DigitSeq& digits, std::size_t r_max, std::size_t guard,
                                      const Precision& prec = Precision::from_env());

std::string_view branch_name(Branch b);
inline constexpr const char* kTrajectoryCsvHeader =
    "branch,r,N,L,drift_lo,drift_hi,quotient_lo,quotient_hi,thm2";
std::string trajectory_csv_row(const TrajectoryRow& row);

/// Growth rates of uniformly drawn dyadic rationals k/2^bits, k in [1, 2^bits].
struct GrowthSample {
  Rational x;
  std::optional<Enclosure> rate;  // nullopt when the expansion ends before digit n
};

struct GrowthSampleSummary {
  std::vector<GrowthSample> samples;
  std::size_t terminated_early = 0;
  Enclosure mean;  // certified mean over samples that reach digit n
};

GrowthSampleSummary sample_growth_rates(std::size_t count, unsigned bits, std::size_t n, std::uint64_t seed,
                                        const Precision& prec = Precision::from_env());

}  // namespace pierce
