#pragma once

#include <string>

#include <mpfr.h>

#include "ergodir/exact_scalar.hpp"

namespace ergodir {

/// Closed interval [lo, hi] with MPFR endpoints.  Every operation rounds the
/// lower endpoint down and the upper endpoint up, so the true value of any
/// expression evaluated on enclosures stays enclosed.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision = 256);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval from_rational(const BigRat& value, mpfr_prec_t precision);
  static Interval hull(const BigRat& a, const BigRat& b, mpfr_prec_t precision);
  /// Encloses (u + v√D)/w.
  static Interval from_scalar(const ExactScalar& value, mpfr_prec_t precision);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const;
  /// hi − lo rounded up.
  double width() const;

  bool contains_zero() const;
  /// Certainly <= x (hi <= x) / certainly >= x (lo >= x).
  bool certainly_le(double x) const { return mpfr_cmp_d(hi_, x) <= 0; }
  bool certainly_lt(double x) const { return mpfr_cmp_d(hi_, x) < 0; }
  bool certainly_ge(double x) const { return mpfr_cmp_d(lo_, x) >= 0; }
  bool certainly_gt(double x) const { return mpfr_cmp_d(lo_, x) > 0; }

  Interval abs() const;
  Interval sqrt() const;

  /// "[lo, hi]" with 20 significant digits per endpoint.
  std::string str() const;

  friend Interval operator+(const Interval& x, const Interval& y);
  friend Interval operator-(const Interval& x, const Interval& y);
  friend Interval operator*(const Interval& x, const Interval& y);
  /// Throws ArithmeticError when the divisor interval contains zero.
  friend Interval operator/(const Interval& x, const Interval& y);
  friend Interval operator-(const Interval& x);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace ergodir
