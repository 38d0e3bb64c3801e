#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ergodir/exact_scalar.hpp"
#include "ergodir/gen_word.hpp"
#include "ergodir/int_mat2.hpp"

namespace ergodir {

/// A point of T²₀ = [−1/2, 1/2)² minus (0,0), (−1/2,−1/2), (−1/2,0), (0,−1/2).
/// It parametrizes the slit-torus surface M(z).
class TorusPoint {
 public:
  /// Throws std::invalid_argument when (x, y) is outside T²₀.
  TorusPoint(ExactScalar x, ExactScalar y);
  /// Reduces both coordinates into [−1/2, 1/2) first.
  static TorusPoint reduced(const ExactScalar& x, const ExactScalar& y);
  /// Parses "x,y" (rationals) or "x;y" (each coordinate in ExactScalar format).
  static TorusPoint parse(const std::string& text);

  const ExactScalar& x() const { return x_; }
  const ExactScalar& y() const { return y_; }
  std::string str() const;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  friend class TraceCursor;
  struct Unchecked {};
  TorusPoint(ExactScalar x, ExactScalar y, Unchecked) : x_(std::move(x)), y_(std::move(y)) {}

  ExactScalar x_;
  ExactScalar y_;
};

bool is_excluded_point(const ExactScalar& x, const ExactScalar& y);

/// S = {(x,y) : −1/2 <= x + y < 1/2}, tested on the literal coordinates.
bool in_region_S(const TorusPoint& z);
/// E = {(x,y) : x > −1/2 and y > −1/2}.
bool in_region_E(const TorusPoint& z);

/// (h⁺)^{−n}: (x − n y, y);  (h⁻)^{−n}: (x, y − n x); coordinates reduced mod 1.
TorusPoint apply_generator_inverse(const TorusPoint& z, Generator gen, std::uint64_t n = 1);
/// Image under the matrix g itself (not its inverse), reduced mod 1.
TorusPoint apply_matrix(const IntMat2& g, const TorusPoint& z);

/// Homology factor h^±_*(z): the generator matrix when z ∈ S, its inverse otherwise.
IntMat2 generator_homology_factor(const TorusPoint& z_after, Generator gen);

/// Element of PGL(2, Z): a unimodular matrix stored with its first nonzero
/// entry positive.
class HomologyAction {
 public:
  HomologyAction() = default;
  explicit HomologyAction(const IntMat2& m);

  const IntMat2& matrix() const { return m_; }
  bool is_identity() const { return m_ == IntMat2::identity(); }
  /// The action maps β to ±β, i.e. it is ±(h⁻)^k.
  bool fixes_beta() const;
  std::string str() const { return m_.str(); }

  friend bool operator==(const HomologyAction&, const HomologyAction&) = default;

 private:
  IntMat2 m_;
};
std::ostream& operator<<(std::ostream& os, const HomologyAction& a);
std::ostream& operator<<(std::ostream& os, const TorusPoint& z);

/// Orbit of a point under a word applied inverse-first, with the induced
/// homology action g_*(g⁻¹z).
struct ActionTrace {
  TorusPoint start;
  GenWord word;
  std::vector<TorusPoint> points;  // one per elementary generator application
  TorusPoint end;
  IntMat2 raw_action;  // ordered product of the per-step factors (sign as computed)
  HomologyAction action;
};

/// Incremental tracer: applies generator inverses one at a time and
/// accumulates the homology factor evaluated at each post-step point.
///
/// For the word g = g₁ g₂ ⋯ g_N the orbit is z, g₁⁻¹z, g₂⁻¹g₁⁻¹z, … and the
/// action is the left-to-right product of (g_k)_*(point after step k), which
/// by the composition law equals g_*(g⁻¹z).
class TraceCursor {
 public:
  /// allow_grid = false forces the generic exact path (used to cross-check).
  explicit TraceCursor(TorusPoint start, bool allow_grid = true);

  /// One elementary step; returns +1 if the new point lies in S, −1 otherwise.
  int step(Generator gen);
  /// n steps of the same generator; returns the net exponent m_n.
  long step_n(Generator gen, std::uint64_t n, std::vector<TorusPoint>* record = nullptr);
  void run(const GenWord& word, std::vector<TorusPoint>* record = nullptr);

  const TorusPoint& point() const;
  std::uint64_t steps() const { return steps_; }
  /// Action accumulated so far (raw sign).
  IntMat2 raw_action() const;
  HomologyAction action() const { return HomologyAction(raw_action()); }

 private:
  void flush() const;
  void step_grid(Generator gen);

  mutable TorusPoint point_;
  // Rational points with a small common denominator n are stepped as
  // integers: x = gx / n with gx in [−n/2, n/2).
  bool grid_ = false;
  mutable bool grid_dirty_ = false;
  long gx_ = 0;
  long gy_ = 0;
  long gn_ = 1;
  std::uint64_t steps_ = 0;
  mutable IntMat2 product_;
  mutable bool has_pending_ = false;
  mutable Generator pending_gen_ = Generator::HPlus;
  mutable long pending_exp_ = 0;
};

ActionTrace trace_word(const TorusPoint& z, const GenWord& word, bool record_points = true);

/// m_1, …, m_{n_max} with m_n = Σ_{j<=n} (2·1_S(point after j steps) − 1).
std::vector<long> m_sequence(const TorusPoint& z, Generator gen, std::uint64_t n_max);

/// (x, y) -> (y, x).
TorusPoint involution_theta(const TorusPoint& z);
/// Homology action of ϑ: the swap [[0,1],[1,0]].
HomologyAction involution_theta_action();
/// (x, y) -> (−x, −y) reduced mod 1.
TorusPoint involution_minus_id(const TorusPoint& z);

}  // namespace ergodir
