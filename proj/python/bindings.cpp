// Thin pybind11 layer. Integers and rationals cross the boundary as decimal
// strings; the Python package converts them to int and Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pierce/calendar.hpp"
#include "pierce/codec.hpp"
#include "pierce/digits.hpp"
#include "pierce/error.hpp"
#include "pierce/intervals.hpp"
#include "pierce/law.hpp"

namespace py = pybind11;
using namespace pierce;

namespace {

using Strings = std::vector<std::string>;
using Pair = std::pair<std::string, std::string>;

Strings digits_out(const DigitSeq& s) {
  Strings out;
  for (const auto& d : s.prefix()) out.push_back(d.get_str());
  return out;
}

DigitSeq digits_in(const Strings& digits, bool extendable) {
  std::vector<Integer> v;
  for (const auto& d : digits) v.push_back(parse_integer(d));
  return DigitSeq(std::move(v), extendable ? Tail::extendable : Tail::terminated);
}

Pair pair_of(const Enclosure& e) { return {format_rational(e.lo), format_rational(e.hi)}; }

Precision precision(unsigned bits) {
  Precision p = Precision::from_env();
  if (bits) {
    p.bits = bits;
    p.max_bits = std::max(p.max_bits, bits);
  }
  return p;
}

}  // namespace

PYBIND11_MODULE(_pierce, m) {
  m.doc() = "Pierce expansions, fundamental intervals and leap-year rules";

  static py::exception<Error> error_type(m, "PierceError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object cls = py::reinterpret_borrow<py::object>(error_type.ptr());
      py::object exc = cls(std::string(to_string(e.code())) + ": " + e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("step", [](const std::string& x) {
    StepResult r = step(parse_rational(x));
    std::optional<std::string> d;
    if (r.digit) d = r.digit->get_str();
    return std::make_pair(d, format_rational(r.remainder));
  });
  m.def("encode", [](const std::string& x) { return digits_out(encode(parse_rational(x))); });
  m.def(
      "decode",
      [](const Strings& digits, bool extendable, std::size_t n) {
        DigitSeq s = digits_in(digits, extendable);
        if (!extendable) return pair_of(Enclosure::point(decode(s)));
        return pair_of(enclose(s, n));
      },
      py::arg("digits"), py::arg("extendable") = false, py::arg("n") = 0);
  m.def("fundamental_interval", [](const Strings& digits) {
    FundamentalInterval fi = fundamental_interval(digits_in(digits, false));
    py::dict d;
    d["left"] = format_rational(fi.left);
    d["right"] = format_rational(fi.right);
    d["left_open"] = fi.left_open;
    d["right_open"] = fi.right_open;
    return d;
  });
  m.def("find_interval_within", [](const std::string& a, const std::string& b) {
    return digits_out(find_interval_within(parse_rational(a), parse_rational(b)));
  });
  m.def("is_leap", [](const std::string& rule, const std::string& year) {
    return is_leap(parse_rule(rule), parse_integer(year));
  });
  m.def(
      "count_leaps",
      [](const std::string& rule, const std::string& through, const std::string& method) {
        IntercalationRule r = parse_rule(rule);
        Integer n = parse_integer(through);
        if (method == "direct") return std::to_string(count_leaps_direct(r, to_u64(n)));
        if (method == "formula") return count_leaps_formula(r, n).get_str();
        fail(ErrorCode::InvalidArgument, "method must be direct or formula");
      },
      py::arg("rule"), py::arg("through"), py::arg("method") = "formula");
  m.def(
      "series_value", [](const std::string& rule, std::size_t n) { return pair_of(series_value(parse_rule(rule), n)); },
      py::arg("rule"), py::arg("n") = 0);
  m.def(
      "construct_digits",
      [](const std::string& alpha, std::size_t n, unsigned bits) {
        return digits_out(construct_digits(parse_growth(alpha), n, precision(bits)));
      },
      py::arg("alpha"), py::arg("n"), py::arg("bits") = 0);
  m.def(
      "growth_rate",
      [](const Strings& digits, std::size_t n, unsigned bits) {
        return pair_of(growth_rate(digits_in(digits, true), n, precision(bits)));
      },
      py::arg("digits"), py::arg("n"), py::arg("bits") = 0);
  m.def(
      "trajectory",
      [](const std::string& alpha, std::size_t rmax, std::size_t guard, unsigned bits) {
        py::list rows;
        for (const auto& row : trajectory(parse_growth(alpha), rmax, guard, precision(bits))) {
          py::dict d;
          d["branch"] = std::string(branch_name(row.branch));
          d["r"] = row.r;
          d["year"] = row.year.get_str();
          d["leap_count"] = row.leap_count.get_str();
          d["drift"] = pair_of(row.drift);
          d["quotient"] = pair_of(row.quotient);
          d["thm2"] = row.thm2_satisfied;
          rows.append(d);
        }
        return rows;
      },
      py::arg("alpha"), py::arg("rmax"), py::arg("guard") = 3, py::arg("bits") = 0);
  m.def(
      "enumerate_zc",
      [](const std::string& c, std::size_t start_index, std::size_t depth) {
        std::vector<std::pair<Strings, std::vector<std::size_t>>> out;
        for (const auto& p : enumerate_zc(parse_rational(c), start_index, depth))
          out.emplace_back(digits_out(p.prefix), jump_positions(p));
        return out;
      },
      py::arg("c"), py::arg("start_index"), py::arg("depth"));
}
