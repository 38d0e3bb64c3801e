#pragma once

#include <stdexcept>

#include "ergodir/exact_scalar.hpp"
#include "ergodir/flow_sim.hpp"

namespace ergodir {

/// A billiard in the strip R × [0, 1/2] with barriers {n} × [0, λ], n ∈ Z.
/// (cx, cy) is the velocity; it need not be a unit vector.
template <typename T>
struct BilliardState {
  T x;
  T y;
  T cx;
  T cy;
};

/// The same motion seen on the cover of M(0, λ): velocity (|cx|, |cy|).
template <typename T>
struct CoverPoint {
  CoverState<T> state;
  T dx;
  T dy;
};

class BilliardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unfolds four reflected copies of one period onto two sheets.  The sheet
/// records the sign of cx, the sign of Y the sign of cy.  A state sitting on
/// a wall and pointing out of the table is first replaced by its reflection.
/// Throws BilliardError for points outside the strip or on a barrier.
template <typename T>
CoverPoint<T> billiard_to_cover(const BilliardState<T>& s, const T& lambda);

template <typename T>
BilliardState<T> cover_to_billiard(const CoverPoint<T>& p, const T& lambda);

/// Moves the billiard ball for time t with exact reflections.
struct BilliardRun {
  BilliardState<BigRat> state;
  bool singular = false;  // reached a barrier tip
  std::uint64_t events = 0;  // walls and barriers met, or surface events on the cover
};
BilliardRun billiard_advance(const BilliardState<BigRat>& start, const BigRat& lambda,
                             const BigRat& t);

/// Flows the unfolded state for time t on the cover of M(0, λ) and folds back.
BilliardRun cover_advance(const BilliardState<BigRat>& start, const BigRat& lambda,
                          const BigRat& t);

}  // namespace ergodir
