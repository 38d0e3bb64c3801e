#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ergodir {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Raised when an arithmetic precondition is violated (division by zero,
/// operands from different quadratic fields, malformed literals).
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element (u + v·√D)/w of a real quadratic field Q(√D), or a rational
/// number when D = 0.
///
/// Values are kept normalized: w > 0, gcd(u, v, w) = 1, and v = 0 whenever
/// D = 0.  A rational value has D = 0 regardless of the field it came from,
/// so rationals mix freely with any field.  Sign, comparison and floor are
/// decided with integer arithmetic only.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value) : u_(value) {}  // NOLINT: implicit from integers
  ExactScalar(const BigInt& value) : u_(value) {}  // NOLINT

  static ExactScalar rational(const BigInt& num, const BigInt& den);
  static ExactScalar rational(const BigRat& value);
  /// (u + v·√d)/w.  d must be squarefree (d = 1 folds into the rational part).
  static ExactScalar quadratic(const BigInt& u, const BigInt& v, const BigInt& w,
                               std::uint64_t d);

  /// Parses "p", "p/q", or "u,v,w,D" meaning (u+v√D)/w.
  static ExactScalar parse(std::string_view text);

  const BigInt& u() const { return u_; }
  const BigInt& v() const { return v_; }
  const BigInt& w() const { return w_; }
  std::uint64_t radicand() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && sgn(u_) == 0; }
  /// The value as an exact rational; throws if the √D part is nonzero.
  BigRat to_rational() const;

  int sign() const;
  BigInt floor() const;
  ExactScalar abs() const { return sign() < 0 ? -*this : *this; }

  /// Diagnostic only; never used on the exact path.
  double to_double() const;

  /// "p/q" for rationals, "u,v,w,D" otherwise (the parse format).
  std::string str() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar& operator*=(const ExactScalar& rhs);
  ExactScalar& operator/=(const ExactScalar& rhs);

  friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
  friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
  friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
  friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }

  friend int compare(const ExactScalar& lhs, const ExactScalar& rhs);
  friend bool operator==(const ExactScalar& lhs, const ExactScalar& rhs);
  friend bool operator<(const ExactScalar& a, const ExactScalar& b) { return compare(a, b) < 0; }
  friend bool operator<=(const ExactScalar& a, const ExactScalar& b) { return compare(a, b) <= 0; }
  friend bool operator>(const ExactScalar& a, const ExactScalar& b) { return compare(a, b) > 0; }
  friend bool operator>=(const ExactScalar& a, const ExactScalar& b) { return compare(a, b) >= 0; }

 private:
  void normalize();
  static std::uint64_t common_radicand(const ExactScalar& a, const ExactScalar& b);

  BigInt u_{0};
  BigInt v_{0};
  BigInt w_{1};
  std::uint64_t d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

/// The representative of x mod 1 in [−1/2, 1/2).
ExactScalar mod_half_open(const ExactScalar& x);

/// Sign of u + v·√d for integers u, v (d squarefree, non-square).
int sign_of_surd(const BigInt& u, const BigInt& v, std::uint64_t d);

bool is_squarefree(std::uint64_t d);

}  // namespace ergodir
