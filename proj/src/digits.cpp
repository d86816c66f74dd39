#include "pierce/digits.hpp"

#include <algorithm>

#include "pierce/error.hpp"

namespace pierce {

namespace {

void check_increasing(std::span<const Integer> digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (sgn(digits[i]) <= 0)
      fail(ErrorCode::NotMonotone, "digit " + std::to_string(i + 1) + " is not a positive integer");
    if (i > 0 && digits[i] <= digits[i - 1])
      fail(ErrorCode::NotMonotone, "digits are not strictly increasing at position " + std::to_string(i + 1));
  }
}

std::vector<std::string_view> split_csv(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(text.substr(0, comma));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  for (auto& f : out) {
    while (!f.empty() && f.front() == ' ') f.remove_prefix(1);
    while (!f.empty() && f.back() == ' ') f.remove_suffix(1);
  }
  return out;
}

}  // namespace

DigitSeq::DigitSeq(std::vector<Integer> prefix, Tail tail) : prefix_(std::move(prefix)), tail_(tail) {
  check_increasing(prefix_);
}

std::optional<Integer> DigitSeq::digit(std::size_t k) const {
  if (k == 0) fail(ErrorCode::InvalidArgument, "digit positions start at 1");
  if (k <= prefix_.size()) return prefix_[k - 1];
  if (is_terminated()) return std::nullopt;
  fail(ErrorCode::InsufficientPrefix,
       "digit " + std::to_string(k) + " lies past the known prefix of length " + std::to_string(prefix_.size()));
}

DigitSeq DigitSeq::first(std::size_t n) const {
  if (n > prefix_.size())
    fail(ErrorCode::InsufficientPrefix, "requested " + std::to_string(n) + " digits, only " +
                                            std::to_string(prefix_.size()) + " known");
  return terminated(std::vector<Integer>(prefix_.begin(), prefix_.begin() + static_cast<std::ptrdiff_t>(n)));
}

bool DigitSeq::starts_with(const DigitSeq& head) const {
  if (head.size() > prefix_.size()) return false;
  return std::equal(head.prefix_.begin(), head.prefix_.end(), prefix_.begin());
}

DigitSeq parse_digits(std::string_view text) {
  bool extendable = false;
  auto entries = parse_extended(text, extendable);
  if (entries.size() == 1 && entries[0] && *entries[0] == 0 && !extendable) return DigitSeq::zero();
  std::vector<Integer> finite;
  bool seen_inf = false;
  for (auto& e : entries) {
    if (!e) {
      seen_inf = true;
      continue;
    }
    if (seen_inf) fail(ErrorCode::MalformedTail, "finite digit after an infinity marker");
    finite.push_back(*e);
  }
  if (seen_inf && extendable) fail(ErrorCode::MalformedTail, "an infinity marker cannot be followed by '...'");
  return DigitSeq(std::move(finite), extendable ? Tail::extendable : Tail::terminated);
}

std::string format_digits(const DigitSeq& s) {
  if (s.empty()) return s.is_terminated() ? "0" : "...";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s[i].get_str();
  }
  if (s.is_extendable()) out += ",...";
  return out;
}

std::vector<ExtendedDigit> parse_extended(std::string_view text, bool& extendable) {
  extendable = false;
  std::vector<ExtendedDigit> out;
  auto fields = split_csv(text);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    auto f = fields[i];
    if (f == "...") {
      if (i + 1 != fields.size()) fail(ErrorCode::ParseError, "'...' may only appear last");
      extendable = true;
    } else if (f == "inf" || f == "∞") {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(parse_integer(f));
    }
  }
  return out;
}

bool is_canonical(std::span<const Integer> digits) {
  std::size_t n = digits.size();
  return n < 2 || digits[n - 1] != digits[n - 2] + 1;
}

CanonicityReport classify(std::span<const ExtendedDigit> seq, bool extendable) {
  std::vector<Integer> finite;
  bool seen_inf = false;
  for (const auto& e : seq) {
    if (!e) {
      seen_inf = true;
    } else if (seen_inf) {
      fail(ErrorCode::MalformedTail, "finite digit after an infinity marker");
    } else {
      finite.push_back(*e);
    }
  }
  check_increasing(finite);
  CanonicityReport report;
  report.length = finite.size();
  if (seen_inf || !extendable) {
    report.cls = finite.empty() ? SequenceClass::sigma0 : SequenceClass::sigmaN;
    report.canonical = is_canonical(finite);
  } else {
    report.cls = SequenceClass::sigmaInfinityPrefix;
    report.canonical = true;
  }
  return report;
}

CanonicityReport classify(const DigitSeq& seq) {
  std::vector<ExtendedDigit> entries(seq.prefix().begin(), seq.prefix().end());
  return classify(entries, seq.is_extendable());
}

DigitSeq replace_prefix(const DigitSeq& x, std::span<const Integer> tau) {
  check_increasing(tau);
  const std::size_t m = tau.size();
  std::vector<Integer> out(tau.begin(), tau.end());
  if (x.size() > m) {
    if (m > 0 && tau.back() >= x[m])
      fail(ErrorCode::IllFormedReplacement,
           "replacement digit " + tau.back().get_str() + " is not below d_" + std::to_string(m + 1) + " = " +
               x[m].get_str());
    out.insert(out.end(), x.prefix().begin() + static_cast<std::ptrdiff_t>(m), x.prefix().end());
  } else if (x.is_extendable()) {
    fail(ErrorCode::InsufficientPrefix, "digit " + std::to_string(m + 1) + " of the sequence is not known");
  }
  if (x.is_terminated() && !is_canonical(out))
    fail(ErrorCode::IllFormedReplacement, "replacement yields a finite sequence that expands no number");
  return DigitSeq(std::move(out), x.tail());
}

std::vector<ZcPrefix> enumerate_zc(const Rational& c, std::size_t start_index, std::size_t depth) {
  if (sgn(c) < 0) fail(ErrorCode::InvalidArgument, "c must be non-negative");
  if (start_index == 0) fail(ErrorCode::InvalidArgument, "start index must be positive");
  if (depth < start_index) fail(ErrorCode::InvalidArgument, "depth must be at least the start index");
  const Integer slack = floor(c);

  std::vector<ZcPrefix> out;
  std::vector<Integer> current;
  current.reserve(depth);
  // Position n is only bounded directly when n >= start_index; earlier digits
  // inherit a bound from the first constrained position through strict
  // increase: σ_n <= σ_m - (m - n) <= n + c with m = start_index.
  auto upper_bound = [&](std::size_t n) -> Integer {
    std::size_t m = std::max(n, start_index);
    return Integer(static_cast<unsigned long>(m)) + slack - Integer(static_cast<unsigned long>(m - n));
  };
  auto recurse = [&](auto&& self, std::size_t n) -> void {
    if (n > depth) {
      out.push_back(ZcPrefix{DigitSeq::extendable(current), c, start_index});
      return;
    }
    Integer lo = current.empty() ? Integer(1) : Integer(current.back() + 1);
    Integer hi = upper_bound(n);
    for (Integer v = lo; v <= hi; ++v) {
      current.push_back(v);
      self(self, n + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

std::vector<std::size_t> jump_positions(const ZcPrefix& p) {
  const Integer slack = floor(p.c);
  std::vector<std::size_t> jumps;
  Integer prev_theta = 0;
  for (std::size_t n = 1; n <= p.prefix.size(); ++n) {
    Integer theta = p.prefix[n - 1] - static_cast<unsigned long>(n);
    if (theta < prev_theta)
      fail(ErrorCode::ThetaViolation, "θ decreases at position " + std::to_string(n));
    if (theta > slack)
      fail(ErrorCode::ThetaViolation, "θ exceeds ⌊c⌋ at position " + std::to_string(n));
    for (Integer step = theta - prev_theta; step > 0; --step) jumps.push_back(n);
    prev_theta = theta;
  }
  return jumps;
}

}  // namespace pierce
