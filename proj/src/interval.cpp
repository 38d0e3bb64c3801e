#include "ergodir/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

namespace ergodir {

Interval::Interval(mpfr_prec_t precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : Interval(other.precision()) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision()) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rational(const BigRat& value, mpfr_prec_t precision) {
  Interval out(precision);
  mpfr_set_q(out.lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, value.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::hull(const BigRat& a, const BigRat& b, mpfr_prec_t precision) {
  const BigRat& lo = a < b ? a : b;
  const BigRat& hi = a < b ? b : a;
  Interval out(precision);
  mpfr_set_q(out.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::from_scalar(const ExactScalar& value, mpfr_prec_t precision) {
  const Interval u = from_rational(BigRat(value.u()), precision);
  const Interval w = from_rational(BigRat(value.w()), precision);
  if (value.is_rational()) return u / w;
  const Interval v = from_rational(BigRat(value.v()), precision);
  const Interval d =
      from_rational(BigRat(BigInt(static_cast<unsigned long>(value.radicand()))), precision);
  return (u + v * d.sqrt()) / w;
}

double Interval::mid_double() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

Interval Interval::abs() const {
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  Interval out(precision());
  mpfr_set_zero(out.lo_, 1);
  if (mpfr_cmpabs(lo_, hi_) > 0) {
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  } else {
    mpfr_set(out.hi_, hi_, MPFR_RNDU);
  }
  return out;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw ArithmeticError("square root of an interval with negative part");
  Interval out(precision());
  mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
  return out;
}

std::string Interval::str() const {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "[%.20RDg, %.20RUg]", lo_, hi_);
  return buf;
}

Interval operator+(const Interval& x, const Interval& y) {
  Interval out(std::max(x.precision(), y.precision()));
  mpfr_add(out.lo_, x.lo_, y.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, x.hi_, y.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& x, const Interval& y) {
  Interval out(std::max(x.precision(), y.precision()));
  mpfr_sub(out.lo_, x.lo_, y.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, x.hi_, y.lo_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& x) {
  Interval out(x.precision());
  mpfr_neg(out.lo_, x.hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, x.lo_, MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& x, const Interval& y) {
  const mpfr_prec_t prec = std::max(x.precision(), y.precision());
  Interval out(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_t* xs[2] = {&x.lo_, &x.hi_};
  const mpfr_t* ys[2] = {&y.lo_, &y.hi_};
  bool first = true;
  for (const auto* a : xs) {
    for (const auto* b : ys) {
      mpfr_mul(t, *a, *b, MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, *a, *b, MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

Interval operator/(const Interval& x, const Interval& y) {
  if (y.contains_zero()) throw ArithmeticError("interval division by an interval containing 0");
  const mpfr_prec_t prec = std::max(x.precision(), y.precision());
  Interval out(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_t* xs[2] = {&x.lo_, &x.hi_};
  const mpfr_t* ys[2] = {&y.lo_, &y.hi_};
  bool first = true;
  for (const auto* a : xs) {
    for (const auto* b : ys) {
      mpfr_div(t, *a, *b, MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_div(t, *a, *b, MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

}  // namespace ergodir
