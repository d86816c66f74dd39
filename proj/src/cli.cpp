#include "pierce/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "pierce/calendar.hpp"
#include "pierce/codec.hpp"
#include "pierce/error.hpp"
#include "pierce/intervals.hpp"
#include "pierce/law.hpp"

namespace pierce::cli {

namespace {

using json = nlohmann::ordered_json;

struct HelpRequested {
  std::string text;
};

void add_common(CLI::App* sub, Command& cmd) {
  static const std::map<std::string, OutputFormat> formats = {
      {"plain", OutputFormat::plain}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
  sub->add_option("--output", cmd.output, "Output format: plain, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--precision", cmd.precision, "Working precision in bits (default 128)")
      ->check(CLI::Range(16u, 1u << 20));
  sub->add_option("--decimals", cmd.decimals, "Decimal places in display output")->check(CLI::Range(0, 1000));
}

void build(CLI::App& app, Command& cmd) {
  auto positional = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("args", cmd.positional, what);
  };
  auto rule = [&](CLI::App* sub) {
    sub->add_option("--rule", cmd.rule, "Rule: julian, gregorian, or comma-separated terms (',...' = extendable)");
  };
  auto sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    add_common(s, cmd);
    s->callback([&cmd, name] { cmd.name = name; });
    return s;
  };

  auto* expand = sub("expand", "Pierce expansion of a rational in [0,1]");
  positional(expand, "x");
  expand->add_option("--x", cmd.x, "Rational p/q");

  auto* decode = sub("decode", "Exact value (or enclosure) of a digit sequence");
  positional(decode, "digits");
  decode->add_option("--n", cmd.n, "Partial-sum index for extendable sequences");

  auto* step = sub("step", "One digit and remainder");
  positional(step, "x");
  step->add_option("--x", cmd.x, "Rational p/q");

  auto* interval = sub("interval", "Fundamental interval of a digit prefix");
  positional(interval, "digits");

  auto* children = sub("children", "Child intervals I_(σ,j)");
  positional(children, "digits [jmax]");
  children->add_option("--jmax", cmd.jmax, "Largest appended digit");

  auto* find = sub("find-interval", "A fundamental interval inside (a, b)");
  positional(find, "a b");

  auto* leap = sub("leap", "Leap-year test under a rule");
  positional(leap, "[rule] [year]");
  rule(leap);
  leap->add_option("--year", cmd.year, "Year (>= 1)");

  auto* count = sub("count", "Leap years in 1..N");
  rule(count);
  count->add_option("--through", cmd.through, "N")->required();
  count->add_option("--method", cmd.method, "direct, formula or both")
      ->check(CLI::IsMember({"direct", "formula", "both"}));

  auto* series = sub("series", "Average fractional day per year of a rule");
  rule(series);
  series->add_option("--n", cmd.n, "Partial-sum index for extendable rules");

  auto* drift = sub("drift", "Calendar drift N·x - L(σ, N)");
  rule(drift);
  drift->add_option("--x", cmd.x, "Year fraction p/q (defaults to the value of the rule's digits)");
  drift->add_option("--through", cmd.through, "Tabulate N = 1..through");
  drift->add_option("--year", cmd.year, "Single year N");

  auto* construct = sub("construct", "Digits with growth rate α");
  construct->add_option("--alpha", cmd.alpha, "α: rational or inf")->required();
  construct->add_option("--n", cmd.n, "Number of digits")->required()->check(CLI::PositiveNumber);

  auto* diagnose = sub("diagnose", "Growth diagnostics of a digit sequence");
  rule(diagnose);
  diagnose->add_option("--alpha", cmd.alpha, "Construct the digits from α instead of --rule");
  diagnose->add_option("--n", cmd.n, "Digit index")->required()->check(CLI::PositiveNumber);

  auto* traj = sub("trajectory", "Certified quotients along N_{2r+1} and M_{2r}");
  traj->add_option("--alpha", cmd.alpha, "α: rational or inf")->required();
  traj->add_option("--rmax", cmd.rmax, "Largest r")->required()->check(CLI::PositiveNumber);
  traj->add_option("--guard", cmd.guard, "Extra digits bracketing x")->check(CLI::PositiveNumber);

  auto* zc = sub("zc", "Enumerate Z_c prefixes");
  zc->add_option("--c", cmd.c, "c >= 0, rational")->required();
  zc->add_option("--start-index", cmd.start_index, "M")->check(CLI::PositiveNumber);
  zc->add_option("--depth", cmd.depth, "Prefix length")->required()->check(CLI::PositiveNumber);

  auto* lln = sub("lln-sample", "Digit growth of random dyadic rationals");
  lln->add_option("--count", cmd.count, "Number of samples")->required()->check(CLI::PositiveNumber);
  lln->add_option("--bits", cmd.bits, "Denominator 2^bits")->check(CLI::Range(1u, 1u << 16));
  lln->add_option("--n", cmd.n, "Digit index")->required()->check(CLI::PositiveNumber);
  lln->add_option("--seed", cmd.seed, "SplitMix64 seed");

  app.require_subcommand(1, 1);
}

void require(bool ok, const std::string& hint) {
  if (!ok) throw UsageError(hint);
}

// Post-parse checks that CLI11 cannot express: positional fallbacks and
// cross-flag requirements.
void validate(Command& cmd) {
  auto& pos = cmd.positional;
  auto take = [&](std::optional<std::string>& slot) {
    if (!slot && !pos.empty()) {
      slot = pos.front();
      pos.erase(pos.begin());
    }
  };
  const std::string& name = cmd.name;
  if (name == "expand" || name == "step") {
    take(cmd.x);
    require(cmd.x.has_value(), name + ": missing rational x (e.g. '" + name + " 5/7')");
  } else if (name == "decode" || name == "interval") {
    require(pos.size() == 1, name + ": expects exactly one digit sequence (e.g. '" + name + " 1,3,7')");
  } else if (name == "children") {
    require(!pos.empty(), "children: missing digit sequence (e.g. 'children 2 --jmax 5')");
    if (!cmd.jmax && pos.size() == 2) {
      cmd.jmax = pos[1];
      pos.pop_back();
    }
    require(pos.size() == 1 && cmd.jmax.has_value(), "children: expects a digit sequence and --jmax");
  } else if (name == "find-interval") {
    require(pos.size() == 2, "find-interval: expects two rationals a b");
  } else if (name == "leap") {
    take(cmd.rule);
    take(cmd.year);
    require(cmd.rule.has_value(), "leap: missing --rule (e.g. 'leap --rule gregorian --year 2028')");
    require(cmd.year.has_value(), "leap: missing --year");
  } else if (name == "count" || name == "series") {
    require(cmd.rule.has_value(), name + ": missing --rule");
  } else if (name == "drift") {
    require(cmd.rule.has_value(), "drift: missing --rule");
    require(cmd.through.has_value() != cmd.year.has_value(), "drift: give exactly one of --through or --year");
  } else if (name == "diagnose") {
    require(cmd.rule.has_value() != cmd.alpha.has_value(), "diagnose: give exactly one of --rule or --alpha");
  }
  if (name != "children" && name != "find-interval" && name != "decode" && name != "interval")
    require(pos.empty(), name + ": unexpected argument '" + (pos.empty() ? "" : pos.front()) + "'");

  // Syntax of every value is checked here; semantic problems surface later as
  // domain errors.
  try {
    if (cmd.rule) (void)parse_rule(*cmd.rule);
    for (const auto* v : {&cmd.year, &cmd.through, &cmd.jmax})
      if (*v) (void)parse_integer(**v);
    for (const auto* v : {&cmd.x, &cmd.c})
      if (*v) (void)parse_rational(**v);
    if (cmd.alpha) (void)parse_growth(*cmd.alpha);
    if (name == "find-interval")
      for (const auto& p : pos) (void)parse_rational(p);
    else if (name == "decode" || name == "interval" || name == "children")
      (void)parse_digits(pos.front());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw UsageError(name + ": " + e.what());
    throw;
  }
}

Precision precision_of(const Command& cmd) {
  Precision p = Precision::from_env();
  if (cmd.precision) {
    p.bits = *cmd.precision;
    p.max_bits = std::max(p.max_bits, p.bits);
  }
  return p;
}

// Decimal for display: trailing zeros trimmed.
std::string display(const Rational& x, int decimals) {
  std::string s = to_decimal(x, decimals);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

std::string display(const Enclosure& e, int decimals) {
  if (e.is_point()) return display(e.lo, decimals);
  return "[" + display(e.lo, decimals) + ", " + display(e.hi, decimals) + "]";
}

json enclosure_json(const Enclosure& e, int decimals) {
  return json{{"lo", format_rational(e.lo)},
              {"hi", format_rational(e.hi)},
              {"lo_decimal", to_decimal(e.lo, decimals)},
              {"hi_decimal", to_decimal(e.hi, decimals)}};
}

json interval_json(const FundamentalInterval& fi) { return json::parse(to_json(fi)); }

std::string csv_interval(const FundamentalInterval& fi) {
  return "\"" + format_digits(fi.generator) + "\"," + format_rational(fi.left) + "," + format_rational(fi.right) +
         "," + (fi.left_open ? "true" : "false") + "," + (fi.right_open ? "true" : "false");
}

DigitSeq digits_for(const Command& cmd, std::size_t n, const Precision& prec) {
  if (cmd.alpha) return construct_digits(parse_growth(*cmd.alpha), n, prec);
  return parse_digits(*cmd.rule);
}

int run_expand(const Command& cmd, std::ostream& out) {
  Rational x = parse_rational(*cmd.x);
  DigitSeq digits = encode(x);
  switch (cmd.output) {
    case OutputFormat::json:
      out << json{{"x", format_rational(x)},
                  {"digits", format_digits(digits)},
                  {"length", digits.size()},
                  {"canonical", classify(digits).canonical}}
                 .dump()
          << '\n';
      break;
    case OutputFormat::csv:
      out << "k,digit\n";
      for (std::size_t k = 0; k < digits.size(); ++k) out << k + 1 << ',' << digits[k].get_str() << '\n';
      break;
    case OutputFormat::plain: out << format_digits(digits) << '\n'; break;
  }
  return kExitOk;
}

int run_decode(const Command& cmd, std::ostream& out) {
  DigitSeq digits = parse_digits(cmd.positional.front());
  Enclosure value;
  if (digits.is_terminated()) {
    value = Enclosure::point(decode(digits));
  } else {
    std::size_t n = cmd.n.value_or(digits.size() > 1 ? digits.size() - 1 : 0);
    value = enclose(digits, n);
  }
  if (cmd.output == OutputFormat::json) {
    json j{{"digits", format_digits(digits)}};
    if (value.is_point()) j["value"] = format_rational(value.lo);
    else j["enclosure"] = enclosure_json(value, cmd.decimals);
    out << j.dump() << '\n';
  } else if (value.is_point()) {
    out << format_rational(value.lo) << " (" << display(value.lo, cmd.decimals) << ")\n";
  } else {
    out << "[" << format_rational(value.lo) << ", " << format_rational(value.hi) << "] ("
        << display(value, cmd.decimals) << ")\n";
  }
  return kExitOk;
}

int run_step(const Command& cmd, std::ostream& out) {
  StepResult r = step(parse_rational(*cmd.x));
  std::string digit = r.digit ? r.digit->get_str() : "inf";
  if (cmd.output == OutputFormat::json)
    out << json{{"digit", digit}, {"remainder", format_rational(r.remainder)}}.dump() << '\n';
  else if (cmd.output == OutputFormat::csv)
    out << "digit,remainder\n" << digit << ',' << format_rational(r.remainder) << '\n';
  else
    out << digit << ' ' << format_rational(r.remainder) << '\n';
  return kExitOk;
}

int run_interval(const Command& cmd, std::ostream& out) {
  FundamentalInterval fi = fundamental_interval(parse_digits(cmd.positional.front()));
  if (cmd.output == OutputFormat::json) out << to_json(fi) << '\n';
  else if (cmd.output == OutputFormat::csv)
    out << "generator,left,right,leftOpen,rightOpen\n" << csv_interval(fi) << '\n';
  else out << format_interval(fi) << '\n';
  return kExitOk;
}

int run_children(const Command& cmd, std::ostream& out) {
  auto kids = children(parse_digits(cmd.positional.front()), parse_integer(*cmd.jmax));
  if (cmd.output == OutputFormat::json) {
    json arr = json::array();
    for (const auto& k : kids) arr.push_back(interval_json(k));
    out << arr.dump() << '\n';
  } else if (cmd.output == OutputFormat::csv) {
    out << "generator,left,right,leftOpen,rightOpen\n";
    for (const auto& k : kids) out << csv_interval(k) << '\n';
  } else {
    for (const auto& k : kids) out << format_digits(k.generator) << ' ' << format_interval(k) << '\n';
  }
  return kExitOk;
}

int run_find_interval(const Command& cmd, std::ostream& out) {
  Rational a = parse_rational(cmd.positional[0]);
  Rational b = parse_rational(cmd.positional[1]);
  FundamentalInterval fi = fundamental_interval(find_interval_within(a, b));
  if (cmd.output == OutputFormat::json) out << to_json(fi) << '\n';
  else if (cmd.output == OutputFormat::csv)
    out << "generator,left,right,leftOpen,rightOpen\n" << csv_interval(fi) << '\n';
  else out << format_digits(fi.generator) << ' ' << format_interval(fi) << '\n';
  return kExitOk;
}

int run_leap(const Command& cmd, std::ostream& out) {
  IntercalationRule rule = parse_rule(*cmd.rule);
  Integer year = parse_integer(*cmd.year);
  bool leap = is_leap(rule, year);
  if (cmd.output == OutputFormat::json)
    out << json{{"rule", format_rule(rule)}, {"year", year.get_str()}, {"leap", leap}}.dump() << '\n';
  else if (cmd.output == OutputFormat::csv)
    out << "rule,year,leap\n\"" << format_rule(rule) << "\"," << year.get_str() << ',' << (leap ? "true" : "false")
        << '\n';
  else out << (leap ? "true" : "false") << '\n';
  return kExitOk;
}

int run_count(const Command& cmd, std::ostream& out, std::ostream& err) {
  IntercalationRule rule = parse_rule(*cmd.rule);
  Integer through = parse_integer(*cmd.through);
  std::optional<Integer> direct, formula;
  if (cmd.method != "formula") {
    if (!fits_u64(through)) fail(ErrorCode::OutOfDomain, "direct counting needs N < 2^64");
    direct = from_u64(count_leaps_direct(rule, to_u64(through)));
  }
  if (cmd.method != "direct") formula = count_leaps_formula(rule, through);

  if (cmd.output == OutputFormat::json) {
    json j{{"rule", format_rule(rule)}, {"through", through.get_str()}};
    if (direct) j["direct"] = direct->get_str();
    if (formula) j["formula"] = formula->get_str();
    out << j.dump() << '\n';
  } else if (cmd.output == OutputFormat::csv) {
    out << "N,direct,formula\n"
        << through.get_str() << ',' << (direct ? direct->get_str() : "") << ','
        << (formula ? formula->get_str() : "") << '\n';
  } else {
    std::string sep;
    if (direct) { out << direct->get_str(); sep = " "; }
    if (formula) out << sep << formula->get_str();
    out << '\n';
  }
  if (direct && formula && *direct != *formula) {
    err << json{{"error", "CountMismatch"},
                {"message", "direct " + direct->get_str() + " != formula " + formula->get_str()}}
               .dump()
        << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

int run_series(const Command& cmd, std::ostream& out) {
  IntercalationRule rule = parse_rule(*cmd.rule);
  std::size_t n = cmd.n.value_or(rule.is_finite() ? 0 : rule.terms().size() - 1);
  Enclosure v = series_value(rule, n);
  if (cmd.output == OutputFormat::json) {
    json j{{"rule", format_rule(rule)}};
    if (v.is_point()) j["value"] = format_rational(v.lo);
    else j["enclosure"] = enclosure_json(v, cmd.decimals);
    out << j.dump() << '\n';
  } else if (v.is_point()) {
    out << format_rational(v.lo) << " (" << display(v.lo, cmd.decimals) << ")\n";
  } else {
    out << "[" << format_rational(v.lo) << ", " << format_rational(v.hi) << "] (" << display(v, cmd.decimals)
        << ")\n";
  }
  return kExitOk;
}

int run_drift(const Command& cmd, std::ostream& out) {
  IntercalationRule rule = parse_rule(*cmd.rule);
  Integer first = 1, last;
  if (cmd.year) {
    first = last = parse_integer(*cmd.year);
  } else {
    last = parse_integer(*cmd.through);
  }
  if (first < 1) fail(ErrorCode::OutOfDomain, "years start at 1");

  // x defaults to the number whose Pierce digits are the rule, bracketed with
  // every known digit.
  Enclosure x;
  if (cmd.x) {
    x = Enclosure::point(parse_rational(*cmd.x));
  } else {
    DigitSeq digits(rule.terms(), rule.tail());
    x = digits.is_terminated() ? Enclosure::point(decode(digits))
                               : enclose(digits, digits.size() > 1 ? digits.size() - 1 : 1);
  }

  json rows = json::array();
  if (cmd.output == OutputFormat::csv) out << "N,L,drift_lo,drift_hi\n";
  for (Integer year = first; year <= last; ++year) {
    DriftRecord d = drift(x, rule, year);
    switch (cmd.output) {
      case OutputFormat::csv:
        out << year.get_str() << ',' << d.leap_count.get_str() << ',' << format_rational(d.drift.lo) << ','
            << format_rational(d.drift.hi) << '\n';
        break;
      case OutputFormat::json:
        rows.push_back(json{{"N", year.get_str()},
                            {"L", d.leap_count.get_str()},
                            {"drift", enclosure_json(d.drift, cmd.decimals)}});
        break;
      case OutputFormat::plain:
        out << year.get_str() << ' ' << d.leap_count.get_str() << ' ' << display(d.drift, cmd.decimals) << '\n';
        break;
    }
  }
  if (cmd.output == OutputFormat::json) out << rows.dump() << '\n';
  return kExitOk;
}

int run_construct(const Command& cmd, std::ostream& out) {
  GrowthSpec spec = parse_growth(*cmd.alpha);
  DigitSeq digits = construct_digits(spec, *cmd.n, precision_of(cmd));
  if (cmd.output == OutputFormat::json) {
    json arr = json::array();
    for (const auto& d : digits.prefix()) arr.push_back(d.get_str());
    out << json{{"alpha", format_growth(spec)}, {"digits", arr}}.dump() << '\n';
  } else if (cmd.output == OutputFormat::csv) {
    out << "k,digit\n";
    for (std::size_t k = 0; k < digits.size(); ++k) out << k + 1 << ',' << digits[k].get_str() << '\n';
  } else {
    out << format_digits(digits) << '\n';
  }
  return kExitOk;
}

int run_diagnose(const Command& cmd, std::ostream& out) {
  Precision prec = precision_of(cmd);
  DigitSeq digits = digits_for(cmd, *cmd.n, prec);
  const std::size_t n = *cmd.n;
  Enclosure growth = growth_rate(digits, n, prec);
  Enclosure logprod = log_product_rate(digits, n, prec);
  Rational recip = reciprocal_partial_sum(digits, n);
  if (cmd.output == OutputFormat::json) {
    out << json{{"digits", format_digits(digits)},
                {"n", n},
                {"growth_rate", enclosure_json(growth, cmd.decimals)},
                {"log_product_rate", enclosure_json(logprod, cmd.decimals)},
                {"reciprocal_sum", format_rational(recip)}}
               .dump()
        << '\n';
  } else if (cmd.output == OutputFormat::csv) {
    out << "n,growth_lo,growth_hi,log_product_lo,log_product_hi,reciprocal_sum\n"
        << n << ',' << format_rational(growth.lo) << ',' << format_rational(growth.hi) << ','
        << format_rational(logprod.lo) << ',' << format_rational(logprod.hi) << ',' << format_rational(recip)
        << '\n';
  } else {
    out << "growth_rate " << display(growth, cmd.decimals) << '\n'
        << "log_product_rate " << display(logprod, cmd.decimals) << '\n'
        << "reciprocal_sum " << format_rational(recip) << " (" << display(recip, cmd.decimals) << ")\n";
  }
  return kExitOk;
}

int run_trajectory(const Command& cmd, std::ostream& out) {
  GrowthSpec spec = parse_growth(*cmd.alpha);
  auto rows = trajectory(spec, *cmd.rmax, cmd.guard, precision_of(cmd));
  switch (cmd.output) {
    case OutputFormat::csv:
      out << kTrajectoryCsvHeader << '\n';
      for (const auto& row : rows) out << trajectory_csv_row(row) << '\n';
      break;
    case OutputFormat::json: {
      json arr = json::array();
      for (const auto& row : rows) {
        json j{{"branch", branch_name(row.branch)},
               {"r", row.r},
               {"N", row.year.get_str()},
               {"L", row.leap_count.get_str()},
               {"drift", enclosure_json(row.drift, cmd.decimals)},
               {"logN", enclosure_json(row.log_year, cmd.decimals)},
               {"quotient", enclosure_json(row.quotient, cmd.decimals)}};
        j["thm2"] = row.thm2_satisfied ? json(*row.thm2_satisfied) : json(nullptr);
        arr.push_back(std::move(j));
      }
      out << arr.dump() << '\n';
      break;
    }
    case OutputFormat::plain:
      for (const auto& row : rows) {
        out << branch_name(row.branch) << ' ' << row.r << " drift " << display(row.drift, cmd.decimals)
            << " quotient " << display(row.quotient, cmd.decimals);
        if (row.thm2_satisfied) out << " thm2 " << (*row.thm2_satisfied ? "true" : "false");
        out << '\n';
      }
      break;
  }
  return kExitOk;
}

int run_zc(const Command& cmd, std::ostream& out) {
  Rational c = parse_rational(*cmd.c);
  auto prefixes = enumerate_zc(c, cmd.start_index, *cmd.depth);
  auto joined = [](const auto& items, char sep) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) s += sep;
      if constexpr (std::is_same_v<std::decay_t<decltype(items[i])>, Integer>) s += items[i].get_str();
      else s += std::to_string(items[i]);
    }
    return s;
  };
  if (cmd.output == OutputFormat::json) {
    json arr = json::array();
    for (const auto& p : prefixes)
      arr.push_back(json{{"prefix", format_digits(p.prefix)}, {"jumps", jump_positions(p)}});
    out << json{{"c", format_rational(c)}, {"start_index", cmd.start_index}, {"depth", *cmd.depth},
                {"count", prefixes.size()}, {"prefixes", arr}}
               .dump()
        << '\n';
  } else if (cmd.output == OutputFormat::csv) {
    out << "index,prefix,jumps\n";
    for (std::size_t i = 0; i < prefixes.size(); ++i)
      out << i + 1 << ',' << joined(prefixes[i].prefix.prefix(), ' ') << ','
          << joined(jump_positions(prefixes[i]), ' ') << '\n';
  } else {
    for (const auto& p : prefixes)
      out << joined(p.prefix.prefix(), ',') << " jumps=" << joined(jump_positions(p), ',') << '\n';
  }
  return kExitOk;
}

int run_lln(const Command& cmd, std::ostream& out) {
  GrowthSampleSummary s = sample_growth_rates(*cmd.count, cmd.bits, *cmd.n, cmd.seed, precision_of(cmd));
  switch (cmd.output) {
    case OutputFormat::csv:
      out << "sample,x,rate_lo,rate_hi\n";
      for (std::size_t i = 0; i < s.samples.size(); ++i) {
        const auto& smp = s.samples[i];
        out << i + 1 << ',' << format_rational(smp.x) << ','
            << (smp.rate ? format_rational(smp.rate->lo) : "") << ','
            << (smp.rate ? format_rational(smp.rate->hi) : "") << '\n';
      }
      break;
    case OutputFormat::json: {
      json rates = json::array();
      for (const auto& smp : s.samples)
        rates.push_back(smp.rate ? json(to_decimal(smp.rate->midpoint(), cmd.decimals)) : json(nullptr));
      out << json{{"count", s.samples.size()},
                  {"bits", cmd.bits},
                  {"n", *cmd.n},
                  {"seed", cmd.seed},
                  {"terminated_early", s.terminated_early},
                  {"mean", enclosure_json(s.mean, cmd.decimals)},
                  {"rates", rates}}
                 .dump()
          << '\n';
      break;
    }
    case OutputFormat::plain: {
      std::vector<Rational> mids;
      for (const auto& smp : s.samples)
        if (smp.rate) mids.push_back(smp.rate->midpoint());
      std::sort(mids.begin(), mids.end());
      out << "samples " << s.samples.size() << '\n'
          << "terminated_early " << s.terminated_early << '\n'
          << "mean " << display(s.mean, cmd.decimals) << '\n'
          << "min " << display(mids.front(), 6) << '\n'
          << "median " << display(mids[mids.size() / 2], 6) << '\n'
          << "max " << display(mids.back(), 6) << '\n';
      break;
    }
  }
  return kExitOk;
}

}  // namespace

Command parse(const std::vector<std::string>& argv) {
  Command cmd;
  CLI::App app{"Pierce expansions and generalized leap-year rules", "pierce"};
  build(app, cmd);
  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = &app;
    for (auto* s : app.get_subcommands()) target = s;
    throw HelpRequested{target->help()};
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (argv.empty()) msg = "missing subcommand; one of: expand, decode, step, interval, children, ...";
    throw UsageError(msg + " (run with --help for usage)");
  }
  if (cmd.name.empty()) throw UsageError("missing subcommand");
  validate(cmd);
  return cmd;
}

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    const std::string& n = cmd.name;
    if (n == "expand") return run_expand(cmd, out);
    if (n == "decode") return run_decode(cmd, out);
    if (n == "step") return run_step(cmd, out);
    if (n == "interval") return run_interval(cmd, out);
    if (n == "children") return run_children(cmd, out);
    if (n == "find-interval") return run_find_interval(cmd, out);
    if (n == "leap") return run_leap(cmd, out);
    if (n == "count") return run_count(cmd, out, err);
    if (n == "series") return run_series(cmd, out);
    if (n == "drift") return run_drift(cmd, out);
    if (n == "construct") return run_construct(cmd, out);
    if (n == "diagnose") return run_diagnose(cmd, out);
    if (n == "trajectory") return run_trajectory(cmd, out);
    if (n == "zc") return run_zc(cmd, out);
    if (n == "lln-sample") return run_lln(cmd, out);
    throw UsageError("unknown command '" + n + "'");
  } catch (const Error& e) {
    err << json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << '\n';
    return kExitDomain;
  }
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse(argv);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << '\n';
    return kExitDomain;
  }
  return execute(cmd, out, err);
}

}  // namespace pierce::cli
