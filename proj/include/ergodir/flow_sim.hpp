#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "ergodir/direction_spec.hpp"
#include "ergodir/exact_scalar.hpp"
#include "ergodir/torus_action.hpp"

namespace ergodir {

using HighFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                                boost::multiprecision::et_off>;

/// A point of the Z-cover of M(z): sheet ∈ {0, 1}, position in [−1/2, 1/2)²
/// on that sheet's torus, and the deck index.
template <typename T>
struct CoverState {
  int sheet = 0;
  T x;
  T y;
  long deck = 0;
};

/// Straight-line flow on M(z) with velocity (dx, dy), dx, dy >= 0.  The slit is
/// the segment [−z, z]; crossing it swaps sheets.  Crossing x = 1/2 to the
/// right changes the deck index by +1 on sheet 0 and by −1 on sheet 1, which
/// is the intersection number with the τ-anti-invariant vertical class.
template <typename T>
struct FlowGeometry {
  T zx;
  T zy;
  T dx;
  T dy;
};

enum class EventKind { RightEdge, TopEdge, Corner, Slit, Stop, ConePoint };
const char* to_string(EventKind kind);

template <typename T>
struct StepOutcome {
  EventKind kind = EventKind::Stop;
  T dt;
  /// Time gap between the chosen event and the next candidate (ordering margin).
  std::optional<T> slack;
};

/// Advances `state` to the next event, or by max_dt if nothing happens sooner.
/// skip_slit is set after a slit crossing and cleared at the next edge, since a
/// line meets a segment at most once between edge wraps.
template <typename T>
StepOutcome<T> step_flow(CoverState<T>& state, const FlowGeometry<T>& g, const T& max_dt,
                         bool& skip_slit);

struct DeckValidation {
  bool core_applicable = false;  // needs |z_y| < 1/2
  long core_shift_sheet0 = 0;
  long core_shift_sheet1 = 0;
  bool vertical_applicable = false;  // needs |z_x| < 1/2
  long vertical_shift = 0;
  std::size_t anti_cases = 0;
  bool anti_invariant = false;  // closed orbits from τ(start) shift by the negated amount
  bool ok() const;
};

struct SurfaceModel {
  TorusPoint z;
  ExactScalar area;                        // 2
  std::array<int, 2> cone_angle_over_pi{};  // at z and at −z; 4 each
  bool vertical_slit = false;
  ExactScalar slit_length_sq;  // |2z|²
  DeckValidation deck;
};

/// Builds M(z) and audits it: area, cone angles by walking a loop around each
/// slit endpoint, and the deck crossing rule.  Throws std::runtime_error when
/// an audit fails.
SurfaceModel build_surface(const TorusPoint& z);

/// Total angle (in units of π) of a small loop around the slit endpoint z
/// (or −z), walked until it closes up on its starting sheet.
int cone_angle_over_pi(const TorusPoint& z, bool at_minus_z);

/// Follows an orbit with rational velocity until it returns to its start.
struct ClosedOrbit {
  bool closed = false;
  bool singular = false;
  long deck_shift = 0;
  ExactScalar length;
  std::uint64_t events = 0;
};
ClosedOrbit trace_closed_orbit(const TorusPoint& z, const CoverState<ExactScalar>& start,
                               const ExactScalar& dx, const ExactScalar& dy,
                               std::uint64_t max_events = 100'000);

struct SimulationOptions {
  int grid = 8;
  long deck_window = 16;
  unsigned precision_bits = 256;
  /// Start point on sheet 0, deck 0.  Default: (−1/2, 0), the midpoint of the left edge.
  std::optional<std::pair<BigRat, BigRat>> start;
};

struct DiscrepancySample {
  double time = 0;
  double tv = 0;             // ½ Σ_cells |w_c/t − 1/(2G²)|
  double max_deviation = 0;  // max_cells |w_c/t − 1/(2G²)|
};

struct OrbitStats {
  int grid = 0;
  long deck_window = 0;
  std::string mode;  // "exact" or "mpfr"
  unsigned precision_bits = 0;
  /// Time spent per cell, index sheet·G² + row·G + column (row counts y upward).
  std::vector<double> occupation;
  std::vector<double> deck_time;  // deck −N … N
  double deck_time_outside = 0;
  std::uint64_t returns_to_zero = 0;
  std::uint64_t events = 0;
  std::uint64_t slit_crossings = 0;
  std::uint64_t edge_crossings = 0;
  std::vector<DiscrepancySample> discrepancy;  // at T/4, T/2, T
  std::string elapsed;      // exact time in exact mode, decimal otherwise
  bool length_exact = false;  // elapsed == T exactly
  double length_error = 0;
  double min_slack = 0;  // smallest event-ordering margin (mpfr mode)
  double error_bound = 0;  // position error estimate (mpfr mode)
  bool singular = false;   // hit a cone point before T
  int final_sheet = 0;
  long final_deck = 0;
};

/// Rational velocity (dx, dy) on a surface with rational z: exact arithmetic.
OrbitStats simulate_exact(const SurfaceModel& model, const BigRat& dx, const BigRat& dy,
                          const BigRat& total_time, const SimulationOptions& opts = {});
/// Any velocity in working precision.
OrbitStats simulate_mpfr(const SurfaceModel& model, const HighFloat& dx, const HighFloat& dy,
                         const HighFloat& total_time, const SimulationOptions& opts = {});
/// Velocity (1, slope): exact when slope and z are rational, mpfr otherwise.
OrbitStats simulate_slope(const SurfaceModel& model, const ExactScalar& slope,
                          const BigRat& total_time, const SimulationOptions& opts = {});
/// Velocity (1, α) for α = [0; digits of spec], on M(z₀).
OrbitStats simulate_direction(const DirectionSpec& spec, const BigRat& total_time,
                              const SimulationOptions& opts = {});

/// α enclosed between convergents; the midpoint is used as the slope.
struct SlopeEnclosure {
  HighFloat alpha;
  double width = 0;
  std::size_t depth = 0;
};
SlopeEnclosure slope_from_spec(const DirectionSpec& spec, unsigned precision_bits);

HighFloat to_high(const ExactScalar& x, unsigned precision_bits);

/// One row per cell, then one per deck bin: 2G² + 2N + 1 rows after the header.
std::string stats_csv(const OrbitStats& stats);

}  // namespace ergodir
