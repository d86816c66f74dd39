#include "pierce/law.hpp"

#include "pierce/codec.hpp"
#include "pierce/error.hpp"
#include "pierce/random.hpp"

namespace pierce {

Integer SplitMix64::uniform_bits(unsigned bits) {
  Integer out = 0;
  for (unsigned filled = 0; filled < bits; filled += 64) {
    out <<= 64;
    out += from_u64((*this)());
  }
  mpz_fdiv_r_2exp(out.get_mpz_t(), out.get_mpz_t(), bits);
  return out;
}

std::uint64_t SplitMix64::uniform(std::uint64_t lo, std::uint64_t hi) noexcept {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return (*this)();
  // rejection keeps the draw unbiased
  const std::uint64_t limit = max() - max() % span;
  std::uint64_t v;
  do v = (*this)();
  while (v >= limit);
  return lo + v % span;
}

GrowthSpec GrowthSpec::finite(Rational a) {
  if (sgn(a) < 0) fail(ErrorCode::OutOfDomain, "α must be non-negative");
  return GrowthSpec{std::move(a)};
}

GrowthSpec parse_growth(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "∞") return GrowthSpec::infinite();
  return GrowthSpec::finite(parse_rational(text));
}

std::string format_growth(const GrowthSpec& spec) {
  return spec.is_infinite() ? "inf" : format_rational(*spec.alpha);
}

namespace {

void require_digits(const DigitSeq& s, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "digit index must be positive");
  if (n > s.size())
    fail(ErrorCode::InsufficientPrefix, "need " + std::to_string(n) + " digits, only " +
                                            std::to_string(s.size()) + " known");
}

// ⌈e^t⌉ for rational t > 0. e^t is irrational, so a tight enough enclosure
// (lo, hi] with lo > ⌈hi⌉ - 1 pins the ceiling.
Integer certified_ceil_exp(const Rational& t, const Precision& prec) {
  for (unsigned bits = prec.bits; bits <= prec.max_bits; bits *= 2) {
    Enclosure e = certified::exp(t, bits);
    Integer c = ceil(e.hi);
    if (e.lo > c - 1) return c;
  }
  fail(ErrorCode::PrecisionExhausted,
       "cannot certify ⌈exp(" + format_rational(t) + ")⌉ within " + std::to_string(prec.max_bits) + " bits");
}

Enclosure scale(const Enclosure& e, const Rational& factor) {
  return Enclosure(e.lo * factor, e.hi * factor);
}

}  // namespace

DigitSeq construct_digits(const GrowthSpec& spec, std::size_t n, const Precision& prec) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "length must be positive");
  std::vector<Integer> digits;
  digits.reserve(n);
  const bool zero_rate = !spec.is_infinite() && sgn(*spec.alpha) == 0;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer kk = static_cast<unsigned long>(k);
    Integer d;
    if (zero_rate) {
      d = kk + 1;
    } else {
      Rational t = spec.is_infinite() ? Rational(kk * kk) : Rational(*spec.alpha * kk);
      d = certified_ceil_exp(t, prec);
      if (!digits.empty() && d <= digits.back()) d = digits.back() + 1;
    }
    digits.push_back(std::move(d));
  }
  return DigitSeq::extendable(std::move(digits));
}

Enclosure growth_rate(const DigitSeq& s, std::size_t n, const Precision& prec) {
  require_digits(s, n);
  Enclosure log_d = certified::log(Rational(s[n - 1]), prec.bits);
  return scale(log_d, Rational(1, static_cast<unsigned long>(n)));
}

Enclosure log_product_rate(const DigitSeq& s, std::size_t n, const Precision& prec) {
  require_digits(s, n);
  Enclosure log_p = certified::log(Rational(digit_product(s, n)), prec.bits);
  Integer nn = static_cast<unsigned long>(n);
  return scale(log_p, make_rational(2, nn * nn));
}

Rational reciprocal_partial_sum(const DigitSeq& s, std::size_t n) {
  if (n > s.size())
    fail(ErrorCode::InsufficientPrefix, "need " + std::to_string(n) + " digits, only " +
                                            std::to_string(s.size()) + " known");
  Rational sum = 0;
  for (std::size_t k = 0; k < n; ++k) sum += Rational(Integer(1), s[k]);
  return sum;
}

Integer extremal_year(const DigitSeq& s, std::size_t j) {
  require_digits(s, j);
  Integer total = -1;
  Integer product = 1;
  for (std::size_t i = 0; i < j; ++i) {
    product *= s[i];
    if (i % 2 == 0) total += product;
    else total -= product;
  }
  return total;
}

ExtremalYears extremal_years(const DigitSeq& s, std::size_t r) {
  if (r == 0) fail(ErrorCode::InvalidArgument, "r must be positive");
  require_digits(s, 2 * r + 1);
  return ExtremalYears{extremal_year(s, 2 * r + 1), -extremal_year(s, 2 * r)};
}

QuotientEnclosure quotient_enclosure(const DigitSeq& s, const Integer& year, std::size_t guard,
                                     const Precision& prec) {
  if (year < 2) fail(ErrorCode::OutOfDomain, "the quotient needs N >= 2 so that log N > 0");
  if (guard == 0) fail(ErrorCode::InvalidArgument, "guard must be positive");
  IntercalationRule rule = IntercalationRule::from_digits(s);
  const std::size_t active = rule.active_terms(year);

  Enclosure x;
  if (s.is_terminated()) {
    x = Enclosure::point(decode(s));
  } else {
    std::size_t n = std::max<std::size_t>(1, active + guard - 1);
    x = enclose(s, n);
  }
  DriftRecord d = drift(x, rule, year);
  Enclosure log_year = certified::log(Rational(year), prec.bits);
  Enclosure root = certified::sqrt(log_year, prec.bits);
  Enclosure q = certified::divide(d.drift, root, prec.bits);
  return QuotientEnclosure{year, std::move(d.leap_count), std::move(d.drift), std::move(log_year), std::move(q)};
}

Enclosure drift_bound_quotient(const DigitSeq& s, std::size_t r, const Precision& prec) {
  if (r == 0) fail(ErrorCode::InvalidArgument, "r must be positive");
  Integer year = extremal_year(s, 2 * r + 1);
  Enclosure root = certified::sqrt(certified::log(Rational(year), prec.bits), prec.bits);
  Rational bound(static_cast<unsigned long>(r), 4ul);
  bound.canonicalize();
  return certified::divide(Enclosure::point(bound), root, prec.bits);
}

std::vector<TrajectoryRow> trajectory(const DigitSeq& digits, std::size_t r_max, std::size_t guard,
                                      const Precision& prec) {
  if (r_max == 0) fail(ErrorCode::InvalidArgument, "rmax must be positive");
  std::vector<TrajectoryRow> upper, lower;
  for (std::size_t r = 1; r <= r_max; ++r) {
    ExtremalYears years = extremal_years(digits, r);

    QuotientEnclosure qn = quotient_enclosure(digits, years.n, guard, prec);
    Rational bound(static_cast<unsigned long>(r), 4ul);
    bound.canonicalize();
    bool thm2 = qn.drift.lo >= bound;
    upper.push_back(TrajectoryRow{Branch::upper, r, std::move(qn.year), std::move(qn.leap_count),
                                  std::move(qn.drift), std::move(qn.log_year), std::move(qn.quotient), thm2});

    QuotientEnclosure qm = quotient_enclosure(digits, years.m, guard, prec);
    lower.push_back(TrajectoryRow{Branch::lower, r, std::move(qm.year), std::move(qm.leap_count),
                                  std::move(qm.drift), std::move(qm.log_year), std::move(qm.quotient),
                                  std::nullopt});
  }
  upper.insert(upper.end(), std::make_move_iterator(lower.begin()), std::make_move_iterator(lower.end()));
  return upper;
}

std::vector<TrajectoryRow> trajectory(const GrowthSpec& spec, std::size_t r_max, std::size_t guard,
                                      const Precision& prec) {
  if (r_max == 0) fail(ErrorCode::InvalidArgument, "rmax must be positive");
  return trajectory(construct_digits(spec, 2 * r_max + 1 + guard, prec), r_max, guard, prec);
}

std::string_view branch_name(Branch b) { return b == Branch::upper ? "N" : "M"; }

std::string trajectory_csv_row(const TrajectoryRow& row) {
  std::string out;
  out += branch_name(row.branch);
  out += ',' + std::to_string(row.r);
  out += ',' + row.year.get_str();
  out += ',' + row.leap_count.get_str();
  out += ',' + format_rational(row.drift.lo);
  out += ',' + format_rational(row.drift.hi);
  out += ',' + format_rational(row.quotient.lo);
  out += ',' + format_rational(row.quotient.hi);
  out += ',';
  out += row.thm2_satisfied ? (*row.thm2_satisfied ? "true" : "false") : "na";
  return out;
}

GrowthSampleSummary sample_growth_rates(std::size_t count, unsigned bits, std::size_t n, std::uint64_t seed,
                                        const Precision& prec) {
  if (count == 0 || bits == 0 || n == 0) fail(ErrorCode::InvalidArgument, "count, bits and n must be positive");
  SplitMix64 rng(seed);
  const Rational unit = pow2(-static_cast<long>(bits));
  GrowthSampleSummary out;
  Rational lo_sum = 0, hi_sum = 0;
  std::size_t reached = 0;
  for (std::size_t i = 0; i < count; ++i) {
    Rational x = Rational(rng.uniform_bits(bits) + 1) * unit;
    DigitSeq digits = encode(x);
    GrowthSample sample{x, std::nullopt};
    if (digits.size() >= n) {
      sample.rate = growth_rate(digits, n, prec);
      lo_sum += sample.rate->lo;
      hi_sum += sample.rate->hi;
      ++reached;
    } else {
      ++out.terminated_early;
    }
    out.samples.push_back(std::move(sample));
  }
  if (reached == 0) fail(ErrorCode::InsufficientPrefix, "no sampled expansion reaches digit " + std::to_string(n));
  Rational k(static_cast<unsigned long>(reached));
  out.mean = Enclosure(lo_sum / k, hi_sum / k);
  return out;
}

}  // namespace pierce
