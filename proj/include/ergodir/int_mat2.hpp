#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ergodir/exact_scalar.hpp"

namespace ergodir {

/// 2×2 integer matrix [[a, b], [c, d]] with arbitrary-precision entries.
struct IntMat2 {
  BigInt a{1}, b{0}, c{0}, d{1};

  static IntMat2 identity() { return {}; }
  static IntMat2 of(long a, long b, long c, long d) { return {a, b, c, d}; }

  BigInt det() const { return a * d - b * c; }
  /// Inverse of a unimodular matrix; throws unless det = ±1.
  IntMat2 inverse() const;
  IntMat2 negated() const { return {-a, -b, -c, -d}; }
  IntMat2 pow(long exponent) const;

  /// Equal up to a global sign (as elements of PGL(2, Z)).
  bool equals_up_to_sign(const IntMat2& other) const;
  bool is_identity_up_to_sign() const { return equals_up_to_sign(identity()); }

  std::string str() const;

  friend IntMat2 operator*(const IntMat2& x, const IntMat2& y);
  friend bool operator==(const IntMat2& x, const IntMat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

std::ostream& operator<<(std::ostream& os, const IntMat2& m);

namespace mat {
inline IntMat2 h_plus() { return IntMat2::of(1, 1, 0, 1); }
inline IntMat2 h_minus() { return IntMat2::of(1, 0, 1, 1); }
inline IntMat2 omega() { return IntMat2::of(0, 1, -1, 0); }
inline IntMat2 theta() { return IntMat2::of(0, 1, 1, 0); }
/// (h⁺)^n and (h⁻)^n in closed form.
inline IntMat2 h_plus_pow(const BigInt& n) { return {1, n, 0, 1}; }
inline IntMat2 h_minus_pow(const BigInt& n) { return {1, 0, n, 1}; }
}  // namespace mat

/// Outcome of checking the braid-type relations between h⁺, h⁻, ω and ϑ.
struct RelationCheck {
  bool ok = true;
  std::string failing;  // name of the first identity that failed
};

/// Checks ϑh^±ϑ⁻¹ = h^∓, ϑω^{±1}ϑ⁻¹ = ω^{∓1}, ωh^±ω⁻¹ = (h^∓)⁻¹,
/// h⁻(h⁺)⁻¹h⁻ = ω⁻¹, h⁺(h⁻)⁻¹h⁺ = ω and ω⁴ = id.  The optional arguments
/// replace the generator matrices (used to confirm that a perturbed
/// generator is detected).
RelationCheck check_relations(const std::optional<IntMat2>& h_plus_override = std::nullopt,
                              const std::optional<IntMat2>& h_minus_override = std::nullopt);

}  // namespace ergodir
