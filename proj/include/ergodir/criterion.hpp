#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <mpfr.h>

#include "ergodir/direction_spec.hpp"
#include "ergodir/interval.hpp"

namespace ergodir {

enum class CheckStatus { Pass, Fail, Inconclusive };
const char* to_string(CheckStatus s);

/// Deliberate corruptions of a single hypothesis input, for the fault-injection suite.
struct FaultInjection {
  /// Append one h⁺ to the word whose action is tested at this checkpoint.
  std::optional<std::size_t> corrupt_word_at;
  /// Replace α by p_k/q_k − 2/q_k² in the σ check at this checkpoint.
  std::optional<std::size_t> shift_alpha_at;
  /// Halve the strip area fed to the wedge check at this checkpoint.
  std::optional<std::size_t> shrink_area_at;
};

struct VerifyOptions {
  mpfr_prec_t precision = 256;
  mpfr_prec_t max_precision = 4096;
  /// Extra digits beyond k used to enclose α; grown by 8 while inconclusive.
  std::size_t alpha_extra_digits = 8;
  std::size_t alpha_extra_max = 64;
  FaultInjection faults;
};

struct SigmaResult {
  CheckStatus status = CheckStatus::Inconclusive;
  /// q_k(q_kα − p_k), q_k(q_{k−1}α − p_{k−1}), p_k/(αq_k), p_{k−1}/(αq_k).
  std::vector<Interval> entries;
  std::string method;  // "interval" or "structural"
  mpfr_prec_t precision_used = 0;
  std::size_t alpha_depth = 0;  // α enclosed between convergents K and K+1
};

/// The wedge between the flow direction and the strip holonomy v = (q_k, p_k),
/// measured against A/(2‖v‖).  Passes when the ratio is below 1.
struct WedgeResult {
  CheckStatus status = CheckStatus::Inconclusive;
  Interval ratio;             // sin∠(v, (1,α)) · ‖v‖ / (A/2)
  Interval ratio_half_slack;  // the same against A/(4‖v‖), i.e. 2·ratio
  bool implied_by_digit = false;  // a_{k+1}(1−2y) >= 2 with k even
  std::string method;             // "interval" or "implication"
};

struct CylinderStrip {
  int k = 0;  // intersection number with β
  BigInt vx;
  BigInt vy;
  ExactScalar area;
};

struct CheckpointRecord {
  CheckpointRecord(std::size_t n_, std::size_t index_, TorusPoint z)
      : n(n_), index(index_), z_n(std::move(z)) {}

  std::size_t n = 0;
  std::size_t index = 0;  // k_n = 8n
  TorusPoint z_n;
  HomologyAction action;
  std::uint64_t next_digit = 0;  // a_{k_n + 1}
  bool homology_fixes_beta = false;
  bool y_in_bounds = false;
  bool digit_inequality = false;
  bool sigma_bounded = false;
  bool wedge_ok = false;
  bool strip_matches_word = false;  // v equals the first column of the word matrix
  SigmaResult sigma;
  WedgeResult wedge;
  CylinderStrip strip;

  bool all() const {
    return homology_fixes_beta && y_in_bounds && digit_inequality && sigma_bounded && wedge_ok &&
           strip_matches_word;
  }
};

struct VerificationReport {
  std::vector<CheckpointRecord> checkpoints;
  bool overall = false;
  std::optional<ExactScalar> area_lower_bound;  // min over checkpoints of 1 − 2y_n
  double wedge_margin = 0;  // 1 − max ratio upper bound
  mpfr_prec_t precision = 0;
};

/// Checks every hypothesis of the ergodicity criterion at checkpoints 1..horizon.
VerificationReport verify(const DirectionSpec& spec, std::size_t horizon,
                          const VerifyOptions& opts = {});

/// σ entries at digit index k (normally k = 8n) with an adaptive α enclosure.
SigmaResult sigma_check_at(const DirectionSpec& spec, std::size_t k, const VerifyOptions& opts = {});
SigmaResult sigma_check(const DirectionSpec& spec, std::size_t n,
                              const VerifyOptions& opts = {});

/// area is the strip area 1 − 2y at the checkpoint.
WedgeResult wedge_check_at(const DirectionSpec& spec, std::size_t k, const ExactScalar& area,
                           const VerifyOptions& opts = {});
WedgeResult wedge_check(const DirectionSpec& spec, std::size_t n, const VerifyOptions& opts = {});

}  // namespace ergodir
