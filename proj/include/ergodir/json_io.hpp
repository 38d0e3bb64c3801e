#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ergodir/billiard.hpp"
#include "ergodir/builder_irrational.hpp"
#include "ergodir/criterion.hpp"
#include "ergodir/dimension.hpp"
#include "ergodir/direction_spec.hpp"
#include "ergodir/flow_sim.hpp"
#include "ergodir/torus_action.hpp"

namespace ergodir {

/// Malformed or inconsistent serialized input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kSpecFormatVersion = 1;

/// "x;y" with each coordinate in ExactScalar text form.
std::string point_text(const TorusPoint& z);

/// Direction spec file: provenance, n_k rule, the first `blocks` blocks with
/// their digits and the digit prefix, and optionally a verification report.
std::string spec_to_json(const DirectionSpec& spec, std::size_t blocks,
                         const VerificationReport* report = nullptr);
/// Rebuilds the stream from its provenance and checks it against the cached
/// blocks and prefix.  Throws FormatError on any mismatch.
DirectionSpec spec_from_json(const std::string& text);
/// Number of cached blocks in a spec file.
std::size_t spec_cached_blocks(const std::string& text);

std::string report_to_json(const VerificationReport& report);
std::string action_to_json(const ActionTrace& trace);
std::string fixing_to_json(const RationalParam& param, const FixingCertificate& cert);
std::string irrational_block_to_json(const IrrationalBlockParams& params);
std::string dimension_to_json(const DimensionCertificate& cert);
std::string surface_to_json(const SurfaceModel& model);
/// Summary of a run (counts, discrepancy samples, bookkeeping); the bulk
/// occupation table goes to stats_csv.
std::string stats_summary_json(const OrbitStats& stats);
std::string error_json(const std::string& kind, const std::string& message);

}  // namespace ergodir
