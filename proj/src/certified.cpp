#include "pierce/certified.hpp"

#include <mpfr.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include "pierce/error.hpp"

namespace pierce {

Enclosure::Enclosure(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) fail(ErrorCode::InvalidArgument, "enclosure with lo > hi");
}

Enclosure hull(const Rational& a, const Rational& b) {
  return a <= b ? Enclosure(a, b) : Enclosure(b, a);
}

Precision Precision::from_env() {
  Precision p;
  if (const char* env = std::getenv("PIERCE_PRECISION")) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
    if (ec == std::errc() && *ptr == '\0' && v >= 16) {
      p.bits = v;
      p.max_bits = std::max(p.max_bits, v);
    }
  }
  return p;
}

std::string format_enclosure(const Enclosure& e, int decimals) {
  if (e.is_point()) return to_decimal(e.lo, decimals);
  return "[" + to_decimal(e.lo, decimals) + ", " + to_decimal(e.hi, decimals) + "]";
}

namespace certified {
namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN)); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  Rational to_rational() const {
    if (mpfr_zero_p(v_)) return Rational(0);
    if (!mpfr_number_p(v_)) fail(ErrorCode::OutOfDomain, "non-finite intermediate value");
    Integer m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    return Rational(m) * pow2(static_cast<long>(e));
  }

 private:
  mpfr_t v_;
};

}  // namespace

Rational round_down(const Rational& x, unsigned bits) {
  Mpfr r(bits);
  mpfr_set_q(r.get(), x.get_mpq_t(), MPFR_RNDD);
  return r.to_rational();
}

Rational round_up(const Rational& x, unsigned bits) {
  Mpfr r(bits);
  mpfr_set_q(r.get(), x.get_mpq_t(), MPFR_RNDU);
  return r.to_rational();
}

Enclosure log(const Rational& x, unsigned bits) {
  return log(Enclosure::point(x), bits);
}

Enclosure log(const Enclosure& x, unsigned bits) {
  if (sgn(x.lo) <= 0) fail(ErrorCode::OutOfDomain, "log of a non-positive value");
  Mpfr lo(bits), hi(bits);
  mpfr_set_q(lo.get(), x.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.hi.get_mpq_t(), MPFR_RNDU);
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  return Enclosure(lo.to_rational(), hi.to_rational());
}

Enclosure exp(const Rational& x, unsigned bits) {
  // e^x has about x/ln 2 < 3x/2 integer bits; keep `bits` beyond them.
  long magnitude = 0;
  if (sgn(x) > 0) {
    Integer m = ceil(x * Rational(3, 2));
    if (m > Integer(1L << 24)) fail(ErrorCode::PrecisionExhausted, "exponent too large");
    magnitude = m.get_si();
  }
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + magnitude + 8;
  Mpfr lo(prec), hi(prec);
  mpfr_set_q(lo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.get_mpq_t(), MPFR_RNDU);
  mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  if (!mpfr_number_p(lo.get()) || !mpfr_number_p(hi.get()))
    fail(ErrorCode::PrecisionExhausted, "exponential overflows the working range");
  return Enclosure(lo.to_rational(), hi.to_rational());
}

Enclosure sqrt(const Enclosure& x, unsigned bits) {
  if (sgn(x.lo) < 0) fail(ErrorCode::OutOfDomain, "sqrt of a negative value");
  Mpfr lo(bits), hi(bits);
  mpfr_set_q(lo.get(), x.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.hi.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
  return Enclosure(lo.to_rational(), hi.to_rational());
}

Enclosure divide(const Enclosure& num, const Enclosure& den, unsigned bits) {
  if (sgn(den.lo) <= 0) fail(ErrorCode::OutOfDomain, "division by an enclosure touching zero");
  // Positive denominator: the extreme quotients pair each numerator endpoint
  // with the denominator endpoint that pushes it outward.
  Rational lo = sgn(num.lo) >= 0 ? Rational(num.lo / den.hi) : Rational(num.lo / den.lo);
  Rational hi = sgn(num.hi) >= 0 ? Rational(num.hi / den.lo) : Rational(num.hi / den.hi);
  return Enclosure(round_down(lo, bits), round_up(hi, bits));
}

}  // namespace certified
}  // namespace pierce
