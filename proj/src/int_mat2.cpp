#include "ergodir/int_mat2.hpp"

#include <array>
#include <ostream>
#include <sstream>
#include <utility>

namespace ergodir {

IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

IntMat2 IntMat2::inverse() const {
  const BigInt det_value = det();
  if (det_value == 1) return {d, -b, -c, a};
  if (det_value == -1) return {-d, b, c, -a};
  throw ArithmeticError("matrix " + str() + " is not invertible over Z");
}

IntMat2 IntMat2::pow(long exponent) const {
  IntMat2 base = exponent < 0 ? inverse() : *this;
  unsigned long n = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  IntMat2 out = identity();
  while (n != 0) {
    if (n & 1U) out = out * base;
    base = base * base;
    n >>= 1U;
  }
  return out;
}

bool IntMat2::equals_up_to_sign(const IntMat2& other) const {
  return *this == other || *this == other.negated();
}

std::string IntMat2::str() const {
  std::ostringstream os;
  os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMat2& m) { return os << m.str(); }

RelationCheck check_relations(const std::optional<IntMat2>& h_plus_override,
                              const std::optional<IntMat2>& h_minus_override) {
  const IntMat2 hp = h_plus_override.value_or(mat::h_plus());
  const IntMat2 hm = h_minus_override.value_or(mat::h_minus());
  if (abs(hp.det()) != 1 || abs(hm.det()) != 1) return {false, "generators are unimodular"};
  const IntMat2 w = mat::omega();
  const IntMat2 t = mat::theta();
  const IntMat2 t_inv = t.inverse();
  const IntMat2 w_inv = w.inverse();

  const std::array<std::pair<const char*, bool>, 9> identities{{
      {"theta h+ theta^-1 = h-", t * hp * t_inv == hm},
      {"theta h- theta^-1 = h+", t * hm * t_inv == hp},
      {"theta omega theta^-1 = omega^-1", t * w * t_inv == w_inv},
      {"theta omega^-1 theta^-1 = omega", t * w_inv * t_inv == w},
      {"omega h+ omega^-1 = (h-)^-1", w * hp * w_inv == hm.inverse()},
      {"omega h- omega^-1 = (h+)^-1", w * hm * w_inv == hp.inverse()},
      {"h- (h+)^-1 h- = omega^-1", hm * hp.inverse() * hm == w_inv},
      {"h+ (h-)^-1 h+ = omega", hp * hm.inverse() * hp == w},
      {"omega^4 = id", w.pow(4) == IntMat2::identity()},
  }};
  for (const auto& [name, holds] : identities) {
    if (!holds) return {false, name};
  }
  return {};
}

}  // namespace ergodir
