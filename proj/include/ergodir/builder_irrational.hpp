#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ergodir/direction_spec.hpp"
#include "ergodir/torus_action.hpp"

namespace ergodir {

/// Thrown when a block search uses up its generator-application budget.
class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BlockSearchOptions {
  ExactScalar j_lo = ExactScalar::rational(1, 6);
  ExactScalar j_hi = ExactScalar::rational(1, 3);
  std::uint64_t a_min = 6;
  std::uint64_t d_choice = 1;  // take the d_choice-th admissible d
  std::uint64_t budget = 1'000'000;
};

/// Region tests along the derivation path: z₂ ∉ S, z₃ ∈ S, z₅ ∉ S, z₆ ∈ S.
struct DerivationChecks {
  bool z2_outside_S = false;
  bool z3_in_S = false;
  bool z5_outside_S = false;
  bool z6_in_S = false;
  bool all() const { return z2_outside_S && z3_in_S && z5_outside_S && z6_in_S; }
};

/// One certified block (a, 1, 1, b, 1, 1, c, d) of the word
/// h_{a,b,c,d} = (h⁺)ᵃ h⁻ h⁺ (h⁻)ᵇ h⁺ h⁻ (h⁺)ᶜ (h⁻)ᵈ.
struct IrrationalBlockParams {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;
  long a_prime = 0;  // m_a⁺(z)
  long b_prime = 0;  // m_b⁻(z₃)
  ExactScalar eps1;
  ExactScalar eps2;
  DerivationChecks derivation;
  bool coordinates_irrational = false;  // every point of the traced orbit
  ActionTrace trace;
  TorusPoint z_out;
  std::uint64_t steps_used = 0;

  BlockDigits digits() const { return {a, 1, 1, b, 1, 1, c, d}; }
  /// The traced action is ±(h⁻)^k, the endpoint lies in J and a >= a_min.
  bool certified(const BlockSearchOptions& opts) const;
};

/// Searches a block starting from z, whose coordinates must both be
/// irrational with 0 < y < 1/2.  Every candidate is accepted only after a
/// direct trace of its word; a failing candidate restarts the a-search one
/// step further.  Throws SearchBudgetExceeded.
IrrationalBlockParams find_block(const TorusPoint& z, const BlockSearchOptions& opts = {});

/// [0; a₁,1,1,b₁,1,1,c₁,d₁, a₂, …] starting from z₀ = (0, λ).  λ must be a
/// quadratic irrational in (0, 1/2).  Block n takes the d_choices[n−1]-th
/// admissible d (1 once the list runs out).
DirectionSpec direction_stream_irrational(const ExactScalar& lambda,
                                          std::vector<std::uint64_t> d_choices = {},
                                          std::uint64_t budget = 1'000'000);

}  // namespace ergodir
