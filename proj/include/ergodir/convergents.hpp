#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ergodir/int_mat2.hpp"

namespace ergodir {

/// Continuants of [0; a₁, …, a_k]: p₋₁ = 1, p₀ = 0, q₋₁ = 0, q₀ = 1 and
/// p_i = a_i p_{i−1} + p_{i−2} (likewise q).  Indices run from −1 to k.
class Convergents {
 public:
  Convergents() : p_{1, 0}, q_{0, 1} {}
  explicit Convergents(std::span<const std::uint64_t> digits);

  /// Appends one more digit (must be >= 1).
  void push(std::uint64_t digit);

  std::size_t depth() const { return digits_.size(); }
  const std::vector<std::uint64_t>& digits() const { return digits_; }
  const BigInt& p(long i) const { return p_.at(static_cast<std::size_t>(i + 1)); }
  const BigInt& q(long i) const { return q_.at(static_cast<std::size_t>(i + 1)); }

  /// [[q_i, q_{i−1}], [p_i, p_{i−1}]], the matrix of the h⁺-leading word of
  /// the first i digits when i is even.
  IntMat2 matrix(long i) const { return {q(i), q(i - 1), p(i), p(i - 1)}; }

  /// p_{i−1} q_i − p_i q_{i−1} = (−1)^i for every 0 <= i <= depth().
  bool determinant_identity_holds() const;

 private:
  std::vector<std::uint64_t> digits_;
  std::vector<BigInt> p_;
  std::vector<BigInt> q_;
};

}  // namespace ergodir
