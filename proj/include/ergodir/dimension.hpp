#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ergodir/exact_scalar.hpp"
#include "ergodir/interval.hpp"

namespace ergodir {

/// Block ā (odd length m >= 3), digit set B = bN + c and truncation u.
struct DimensionProblem {
  std::vector<std::uint64_t> block;
  std::uint64_t b = 1;
  std::uint64_t c = 0;
  std::uint64_t u = 2;

  void validate() const;
};

/// q_m(ā) and q_{m−1}(ā).
struct BlockContinuants {
  BigInt q_m;
  BigInt q_m1;
};
BlockContinuants block_continuants(const std::vector<std::uint64_t>& block);

/// d_{ā,l} = 1/(q_m(l+1) + q_{m−1})², l >= 1.
ExactScalar contraction_bound(const std::vector<std::uint64_t>& block, std::uint64_t l);

struct SuSolution {
  long double s = 0;
  long double lo = 0;  // final bisection bracket
  long double hi = 0;
  long double residual = 0;  // Σ d^s − 1 at s
  std::uint64_t u = 0;
};

/// Root of Σ_{l=1}^u d_{ā,bl+c}^s = 1 by bisection to the given tolerance.
SuSolution solve_su(const DimensionProblem& problem, long double tolerance = 1e-9L);

/// Σ_{l=1}^u d_{ā,bl+c}^{1/2} = Σ 1/(q_m(bl+c+1)+q_{m−1}): exact for u <= exact_limit,
/// otherwise an outward-rounded enclosure.
struct HalfPowerSum {
  std::uint64_t u = 0;
  std::optional<BigRat> exact;
  Interval enclosure;
  bool certainly_above_one = false;
};
HalfPowerSum half_power_sum(const DimensionProblem& problem, std::uint64_t exact_limit = 1000,
                            mpfr_prec_t precision = 128);

/// Σ d^{1/2} diverges: 1/(q_m(bl+c+1)+q_{m−1}) >= 1/(C·l) with
/// C = q_m(b+c+1) + q_{m−1}, because C·l − L_l = (q_m(c+1)+q_{m−1})(l−1) >= 0.
struct DivergenceCertificate {
  BigInt constant;
  std::uint64_t checked_up_to = 0;
  bool harmonic_bound_holds = false;  // L_l <= C·l for every checked l
  bool shifted_bound_holds = false;   // L_l <= q_m(b(l+1)+c+1)+q_{m−1} for every checked l
  bool valid() const { return harmonic_bound_holds && shifted_bound_holds; }
};
DivergenceCertificate divergence_certificate(const DimensionProblem& problem,
                                             std::uint64_t check_up_to);

/// ψ_l(E) ⊂ E for l ∈ B_u and the images pairwise disjoint, with
/// E = [[0;ā,min B_u], [0;ā,max B_u + 1]] (normalized to [min, max]).
struct NestingCheck {
  std::uint64_t u = 0;
  bool nested = false;
  bool disjoint = false;
};
NestingCheck nesting_check(const DimensionProblem& problem);

struct DimensionOptions {
  std::uint64_t budget_u = 1'000'000;
  std::uint64_t exact_limit = 1000;
  std::uint64_t termwise_check_limit = 10'000;
  std::uint64_t nesting_u = 32;
  long double tolerance = 1e-9L;
  mpfr_prec_t precision = 128;  // interval sums past exact_limit
};

struct DimensionCertificate {
  std::vector<std::uint64_t> block;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  BlockContinuants continuants;
  std::string route;  // "direct" or "divergence"
  double projected_log10_u = 0;  // where Σ d^{1/2} could first exceed 1
  std::uint64_t u_used = 0;
  HalfPowerSum partial_sum;
  SuSolution achieved;
  std::vector<std::pair<std::uint64_t, long double>> s_by_u;  // u = 2, 4, 8, …, u_used
  bool s_monotone = false;
  DivergenceCertificate divergence;
  NestingCheck nesting;
  /// Direct: Σ_{l<=u} d^{1/2} > 1, so s_u > 1/2.  Divergence: the series diverges,
  /// so such a u exists even though it is beyond the budget.
  bool above_half_certified = false;
  mpfr_prec_t precision = 0;
};

DimensionCertificate dimension_certificate(const std::vector<std::uint64_t>& block,
                                           std::uint64_t b, std::uint64_t c,
                                           const DimensionOptions& opts = {});

}  // namespace ergodir
