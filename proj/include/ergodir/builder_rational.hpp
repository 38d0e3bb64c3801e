#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ergodir/gen_word.hpp"
#include "ergodir/torus_action.hpp"

namespace ergodir {

class DirectionSpec;
struct NkRule;

/// z = (r/2q, s/2q) with |r|, |s| < q, s ≠ 0 and gcd(s, q) = 1.
struct RationalParam {
  long r = 0;
  long s = 1;
  long q = 2;

  /// Throws std::invalid_argument when the hypotheses above fail.
  void validate() const;
  TorusPoint point() const;
  bool odd_case() const { return r % 2 != 0 || s % 2 != 0; }
  /// The param of −z (used to reduce s < 0 to s > 0).
  RationalParam negated() const { return {-r, -s, q}; }
  std::string str() const;

  /// The billiard surface M(0, λ) for λ = p/2q ∈ (0, 1/2) in lowest terms.
  static RationalParam from_lambda(const BigRat& lambda);

  friend bool operator==(const RationalParam&, const RationalParam&) = default;
};

enum class ParityCase { Odd, Even };

/// Exponents of the fixing word.  In the odd case 0 < a, b <= 2q with
/// r + a s ≡ −q and b s + s − q ≡ r (mod 2q).  In the even case b = |s|,
/// 0 < a <= q with a s + r ≡ −1 (mod q), and 0 < a2 <= q with
/// a2 s − r ≡ −1 (mod q); a2 = a when r = 0 and in the odd case.
struct CongruencePair {
  long a = 0;
  long b = 0;
  long a2 = 0;
  ParityCase parity = ParityCase::Odd;
};

using Block = std::array<std::uint64_t, 7>;

/// Raised when a congruence has no solution in range, which cannot happen
/// for a valid RationalParam.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

CongruencePair solve_congruences(const RationalParam& param);
/// Odd case (2q+b, 1, 1, 2q+a+b, 1, 1, a); even case
/// (2q+a2, b−1, b+1, 2q+a+a2, b−1, b+1, a).  For r = 0 this is B(λ).
Block block_for(const RationalParam& param);
/// The alternating h⁺-leading word whose exponents are block_for(param).
GenWord fixing_word(const RationalParam& param);

struct FixingCertificate {
  bool fixes_point = false;
  bool action_is_identity = false;
  std::uint64_t h_minus_period = 0;
  bool h_minus_period_valid = false;
  TorusPoint certified_point;  // the point the trace ran on (after s<0 reduction)
  HomologyAction action;

  bool ok() const { return fixes_point && action_is_identity && h_minus_period_valid; }
};

/// Traces the fixing word at z (at −z when s < 0) and checks that it returns
/// to the start with trivial homology action, and that (h⁻)^period fixes the
/// point and β.  Never throws for a valid param.
FixingCertificate certify_fixing(const RationalParam& param);

/// Thrown when a fixing word fails its certificate; a direction is never
/// built on an uncertified block.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [0; B(z), n_1, B(z), n_2, …] starting at z (at −z when s < 0, so the
/// recorded point has y = |s|/2q).  When r ≠ 0 every n_k must be a positive
/// multiple of 2q; a finite n_k list is checked entry by entry, while an
/// arithmetic rule is checked through its step and offset.
DirectionSpec direction_stream(const RationalParam& param, const NkRule& nk);

}  // namespace ergodir
