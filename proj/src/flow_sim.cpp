#include "ergodir/flow_sim.hpp"

#include <mpfr.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ergodir/convergents.hpp"

namespace ergodir {

namespace {

template <typename T>
T make(long num, long den = 1);

template <>
BigRat make<BigRat>(long num, long den) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

template <>
ExactScalar make<ExactScalar>(long num, long den) {
  return ExactScalar::rational(BigInt(num), BigInt(den));
}

template <>
HighFloat make<HighFloat>(long num, long den) {
  return HighFloat(num) / HighFloat(den);
}

int sign_of(const BigRat& x) { return sgn(x); }
int sign_of(const ExactScalar& x) { return x.sign(); }
int sign_of(const HighFloat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

long double to_ld(const BigRat& x) { return static_cast<long double>(x.get_d()); }
long double to_ld(const HighFloat& x) { return x.convert_to<long double>(); }

std::string to_text(const BigRat& x) { return x.get_str(); }
std::string to_text(const HighFloat& x) { return x.str(30); }

// Exact rationals never produce a negative hitting time, rounded values can.
template <typename T>
void clamp_nonnegative(T& t) {
  if (sign_of(t) < 0) t = make<T>(0);
}

BigRat scalar_to_rat(const ExactScalar& x) { return x.to_rational(); }

}  // namespace

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::RightEdge: return "right_edge";
    case EventKind::TopEdge: return "top_edge";
    case EventKind::Corner: return "corner";
    case EventKind::Slit: return "slit";
    case EventKind::Stop: return "stop";
    case EventKind::ConePoint: return "cone_point";
  }
  return "?";
}

template <typename T>
StepOutcome<T> step_flow(CoverState<T>& s, const FlowGeometry<T>& g, const T& max_dt,
                         bool& skip_slit) {
  const T half = make<T>(1, 2);
  const T one = make<T>(1);

  std::optional<T> t_right, t_top, t_slit;
  bool slit_cone = false;
  if (sign_of(g.dx) > 0) {
    t_right = (half - s.x) / g.dx;
    clamp_nonnegative(*t_right);
  }
  if (sign_of(g.dy) > 0) {
    t_top = (half - s.y) / g.dy;
    clamp_nonnegative(*t_top);
  }
  if (!skip_slit) {
    // A + t·d = B + u·e with B = −z, e = 2z.
    const T ex = g.zx + g.zx;
    const T ey = g.zy + g.zy;
    const T bx = -g.zx - s.x;
    const T by = -g.zy - s.y;
    const T den = g.dx * ey - g.dy * ex;
    if (sign_of(den) != 0) {
      const T t = (bx * ey - by * ex) / den;
      const T u = (bx * g.dy - by * g.dx) / den;
      if (sign_of(t) > 0 && sign_of(u) >= 0 && !(one < u)) {
        t_slit = t;
        slit_cone = sign_of(u) == 0 || u == one;
      }
    } else if (sign_of(bx * g.dy - by * g.dx) == 0) {
      // Running along the slit's own line: the first endpoint ahead is a cone point.
      const T speed2 = g.dx * g.dx + g.dy * g.dy;
      for (int e = -1; e <= 1; e += 2) {
        const T px = (e < 0 ? -g.zx : g.zx) - s.x;
        const T py = (e < 0 ? -g.zy : g.zy) - s.y;
        const T t = (px * g.dx + py * g.dy) / speed2;
        if (sign_of(t) > 0 && (!t_slit || t < *t_slit)) t_slit = t;
      }
      if (t_slit) slit_cone = true;
    }
  }

  // Earliest event; right and top together make a corner.
  std::optional<T> best;
  EventKind kind = EventKind::Stop;
  std::vector<T> times;
  auto consider = [&](const std::optional<T>& t, EventKind k) {
    if (!t) return;
    times.push_back(*t);
    if (!best || *t < *best) {
      best = *t;
      kind = k;
    } else if (*t == *best) {
      if ((kind == EventKind::RightEdge && k == EventKind::TopEdge) ||
          (kind == EventKind::TopEdge && k == EventKind::RightEdge)) {
        kind = EventKind::Corner;
      } else {
        // The slit interior touching a square edge cannot happen for a slit inside
        // the square, so a tie with the slit means an endpoint.
        kind = EventKind::ConePoint;
      }
    }
  };
  consider(t_right, EventKind::RightEdge);
  consider(t_top, EventKind::TopEdge);
  consider(t_slit, slit_cone ? EventKind::ConePoint : EventKind::Slit);

  StepOutcome<T> out;
  if (times.size() >= 2) {
    std::sort(times.begin(), times.end());
    out.slack = times[1] - times[0];
  }
  if (!best || max_dt < *best) {
    out.kind = EventKind::Stop;
    out.dt = max_dt;
    s.x += g.dx * max_dt;
    s.y += g.dy * max_dt;
    return out;
  }

  out.kind = kind;
  out.dt = *best;
  if (kind == EventKind::ConePoint) {
    s.x += g.dx * out.dt;
    s.y += g.dy * out.dt;
    return out;
  }
  if (kind == EventKind::RightEdge || kind == EventKind::Corner) {
    s.x = -half;
    s.deck += s.sheet == 0 ? 1 : -1;
  } else {
    s.x += g.dx * out.dt;
  }
  if (kind == EventKind::TopEdge || kind == EventKind::Corner) {
    s.y = -half;
  } else {
    s.y += g.dy * out.dt;
  }
  if (kind == EventKind::Slit) {
    s.sheet ^= 1;
    skip_slit = true;
  } else {
    skip_slit = false;
  }
  return out;
}

template StepOutcome<BigRat> step_flow(CoverState<BigRat>&, const FlowGeometry<BigRat>&,
                                       const BigRat&, bool&);
template StepOutcome<ExactScalar> step_flow(CoverState<ExactScalar>&,
                                            const FlowGeometry<ExactScalar>&,
                                            const ExactScalar&, bool&);
template StepOutcome<HighFloat> step_flow(CoverState<HighFloat>&, const FlowGeometry<HighFloat>&,
                                          const HighFloat&, bool&);

bool DeckValidation::ok() const {
  if (core_applicable && (core_shift_sheet0 != 1 || core_shift_sheet1 != -1)) return false;
  if (vertical_applicable && vertical_shift != 0) return false;
  return anti_invariant;
}

ClosedOrbit trace_closed_orbit(const TorusPoint& z, const CoverState<ExactScalar>& start,
                               const ExactScalar& dx, const ExactScalar& dy,
                               std::uint64_t max_events) {
  const FlowGeometry<ExactScalar> g{z.x(), z.y(), dx, dy};
  const ExactScalar horizon(1'000'000L);
  CoverState<ExactScalar> s = start;
  bool skip = false;
  ClosedOrbit out;
  while (out.events < max_events) {
    const auto step = step_flow(s, g, horizon, skip);
    ++out.events;
    out.length += step.dt;
    if (step.kind == EventKind::ConePoint) {
      out.singular = true;
      return out;
    }
    if (s.sheet == start.sheet && s.x == start.x && s.y == start.y) {
      out.closed = true;
      out.deck_shift = s.deck - start.deck;
      return out;
    }
  }
  return out;
}

namespace {

struct Vec {
  ExactScalar x, y;
};

int orient(const Vec& a, const Vec& b, const Vec& c) {
  return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).sign();
}

bool on_segment(const Vec& a, const Vec& b, const Vec& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Proper crossing of segments pq and rs.  Touching means the loop was badly placed.
bool crosses(const Vec& p, const Vec& q, const Vec& r, const Vec& s) {
  const int o1 = orient(p, q, r), o2 = orient(p, q, s);
  const int o3 = orient(r, s, p), o4 = orient(r, s, q);
  if ((o1 == 0 && on_segment(p, q, r)) || (o2 == 0 && on_segment(p, q, s)) ||
      (o3 == 0 && on_segment(r, s, p)) || (o4 == 0 && on_segment(r, s, q))) {
    throw std::runtime_error("cone-angle loop touches the slit");
  }
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace

int cone_angle_over_pi(const TorusPoint& z, bool at_minus_z) {
  const ExactScalar zx = z.x(), zy = z.y();
  const Vec centre = at_minus_z ? Vec{-zx, -zy} : Vec{zx, zy};
  const ExactScalar big = std::max(zx.abs(), zy.abs());
  if (big.sign() == 0) throw std::invalid_argument("slit has zero length");
  const ExactScalar r = big / ExactScalar(8L);
  const ExactScalar r3 = r / ExactScalar(3L);
  // A tilted square around the endpoint, so no vertex sits on an axis-aligned slit.
  const std::array<Vec, 4> loop{Vec{centre.x + r, centre.y + r3}, Vec{centre.x - r3, centre.y + r},
                                Vec{centre.x - r, centre.y - r3}, Vec{centre.x + r3, centre.y - r}};
  int sheet = 0;
  for (int turns = 1; turns <= 4; ++turns) {
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Vec& p = loop[i];
      const Vec& q = loop[(i + 1) % loop.size()];
      for (long m = -1; m <= 1; ++m) {
        for (long n = -1; n <= 1; ++n) {
          const Vec a{-zx + ExactScalar(m), -zy + ExactScalar(n)};
          const Vec b{zx + ExactScalar(m), zy + ExactScalar(n)};
          if (crosses(p, q, a, b)) sheet ^= 1;
        }
      }
    }
    if (sheet == 0) return 2 * turns;
  }
  return -1;
}

SurfaceModel build_surface(const TorusPoint& z) {
  const ExactScalar half = ExactScalar::rational(1, 2);
  if (!(z.x().abs() < half) || !(z.y().abs() < half)) {
    throw std::invalid_argument("slit endpoint " + z.str() + " lies on the square's boundary");
  }
  SurfaceModel m{z, ExactScalar(2L), {}, z.x().sign() == 0, {}, {}};
  m.slit_length_sq = ExactScalar(4L) * (z.x() * z.x() + z.y() * z.y());
  m.cone_angle_over_pi = {cone_angle_over_pi(z, false), cone_angle_over_pi(z, true)};
  if (m.cone_angle_over_pi[0] != 4 || m.cone_angle_over_pi[1] != 4) {
    throw std::runtime_error("cone angles at the slit endpoints are not 4π");
  }

  DeckValidation& d = m.deck;
  const ExactScalar one(1L), zero(0L);
  d.core_applicable = true;
  {
    const ExactScalar h = (z.y().abs() + half) / ExactScalar(2L);
    for (int sheet = 0; sheet < 2; ++sheet) {
      const auto orbit = trace_closed_orbit(z, {sheet, -half, h, 0}, one, zero);
      if (!orbit.closed) throw std::runtime_error("horizontal core orbit did not close");
      (sheet == 0 ? d.core_shift_sheet0 : d.core_shift_sheet1) = orbit.deck_shift;
    }
  }
  d.vertical_applicable = true;
  {
    const ExactScalar x0 = (z.x().abs() + half) / ExactScalar(2L);
    const auto orbit = trace_closed_orbit(z, {0, x0, -half, 0}, zero, one);
    if (!orbit.closed) throw std::runtime_error("vertical orbit did not close");
    d.vertical_shift = orbit.deck_shift;
  }

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> small(1, 5), height(-48, 48);
  bool anti = true;
  for (int trial = 0; trial < 24; ++trial) {
    const ExactScalar dx(small(rng)), dy(small(rng));
    const ExactScalar y0 = ExactScalar::rational(BigInt(height(rng)), BigInt(97));
    const auto a = trace_closed_orbit(z, {0, -half, y0, 0}, dx, dy);
    const auto b = trace_closed_orbit(z, {1, -half, y0, 0}, dx, dy);
    if (a.singular || b.singular) continue;
    if (!a.closed || !b.closed || a.deck_shift != -b.deck_shift) anti = false;
    ++d.anti_cases;
  }
  d.anti_invariant = anti && d.anti_cases > 0;
  if (!d.ok()) throw std::runtime_error("deck crossing rule failed its audit on M(" + z.str() + ")");
  return m;
}

namespace {

template <typename T>
OrbitStats run_flow(const FlowGeometry<T>& g, CoverState<T> s, const T& total,
                    const SimulationOptions& opts, const std::string& mode) {
  if (opts.grid < 1) throw std::invalid_argument("grid must be positive");
  if (opts.deck_window < 0) throw std::invalid_argument("deck window must be non-negative");
  if (sign_of(total) <= 0) throw std::invalid_argument("total time must be positive");
  if (sign_of(g.dx) < 0 || sign_of(g.dy) < 0 || (sign_of(g.dx) == 0 && sign_of(g.dy) == 0)) {
    throw std::invalid_argument("velocity must be non-negative and nonzero");
  }
  const int G = opts.grid;
  const long N = opts.deck_window;
  OrbitStats st;
  st.grid = G;
  st.deck_window = N;
  st.mode = mode;
  st.precision_bits = mode == "exact" ? 0 : opts.precision_bits;
  st.occupation.assign(static_cast<std::size_t>(2 * G * G), 0.0);
  st.deck_time.assign(static_cast<std::size_t>(2 * N + 1), 0.0);
  st.min_slack = std::numeric_limits<double>::infinity();

  const long double dxl = to_ld(g.dx), dyl = to_ld(g.dy);
  const long double Gl = G;
  auto cell_of = [&](long double v) {
    const long c = static_cast<long>(std::floor((v + 0.5L) * Gl));
    return std::clamp<long>(c, 0, G - 1);
  };
  // Splits a straight segment at grid lines and charges each piece to its cell.
  std::vector<long double> cuts;
  auto accumulate = [&](int sheet, long double x0, long double y0, long double dt) {
    if (dt <= 0) return;
    cuts.clear();
    cuts.push_back(0);
    cuts.push_back(dt);
    auto add_lines = [&](long double p0, long double v) {
      if (v <= 0) return;
      const long double p1 = p0 + v * dt;
      for (long i = cell_of(p0) + 1; i <= G; ++i) {
        const long double line = -0.5L + i / Gl;
        if (line >= p1) break;
        const long double t = (line - p0) / v;
        if (t > 0 && t < dt) cuts.push_back(t);
      }
    };
    add_lines(x0, dxl);
    add_lines(y0, dyl);
    std::sort(cuts.begin(), cuts.end());
    const std::size_t base = static_cast<std::size_t>(sheet) * G * G;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const long double piece = cuts[i + 1] - cuts[i];
      if (piece <= 0) continue;
      const long double mid = (cuts[i] + cuts[i + 1]) / 2;
      const long col = cell_of(x0 + dxl * mid);
      const long row = cell_of(y0 + dyl * mid);
      st.occupation[base + static_cast<std::size_t>(row * G + col)] += static_cast<double>(piece);
    }
  };

  const T quarter = total / make<T>(4);
  const std::array<T, 3> targets{quarter, total / make<T>(2), total};
  T elapsed = make<T>(0);
  T sum_dt = make<T>(0);
  bool skip = false;
  std::uint64_t ordering_events = 0;
  for (const T& target : targets) {
    while (!st.singular && elapsed < target) {
      const long double x0 = to_ld(s.x), y0 = to_ld(s.y);
      const int sheet0 = s.sheet;
      const long deck0 = s.deck;
      const auto out = step_flow(s, g, T(target - elapsed), skip);
      const long double dt = to_ld(out.dt);
      sum_dt += out.dt;
      if (out.kind == EventKind::Stop) {
        elapsed = target;
      } else {
        elapsed += out.dt;
        ++st.events;
      }
      accumulate(sheet0, x0, y0, dt);
      if (deck0 >= -N && deck0 <= N) {
        st.deck_time[static_cast<std::size_t>(deck0 + N)] += static_cast<double>(dt);
      } else {
        st.deck_time_outside += static_cast<double>(dt);
      }
      if (out.slack && out.kind != EventKind::Stop) {
        st.min_slack = std::min(st.min_slack, static_cast<double>(to_ld(*out.slack)));
        ++ordering_events;
      }
      switch (out.kind) {
        case EventKind::Slit: ++st.slit_crossings; break;
        case EventKind::RightEdge:
        case EventKind::TopEdge:
        case EventKind::Corner: ++st.edge_crossings; break;
        case EventKind::ConePoint: st.singular = true; break;
        case EventKind::Stop: break;
      }
      if (deck0 != 0 && s.deck == 0) ++st.returns_to_zero;
    }
    const double t = static_cast<double>(to_ld(elapsed));
    DiscrepancySample sample{t, 0, 0};
    if (t > 0) {
      const double uniform = 1.0 / (2.0 * G * G);
      for (double w : st.occupation) {
        const double dev = std::abs(w / t - uniform);
        sample.tv += dev / 2;
        sample.max_deviation = std::max(sample.max_deviation, dev);
      }
    }
    st.discrepancy.push_back(sample);
    if (st.singular) break;
  }
  if (ordering_events == 0) st.min_slack = 0;
  st.length_exact = sum_dt == total;
  st.length_error = std::abs(static_cast<double>(to_ld(sum_dt) - to_ld(total)));
  st.elapsed = to_text(sum_dt);
  st.final_sheet = s.sheet;
  st.final_deck = s.deck;
  return st;
}

template <typename T>
CoverState<T> start_state(const SimulationOptions& opts, const std::function<T(const BigRat&)>& conv) {
  CoverState<T> s;
  BigRat x(-1, 2), y(0);
  if (opts.start) {
    x = opts.start->first;
    y = opts.start->second;
    const BigRat h(1, 2);
    if (x < -h || !(x < h) || y < -h || !(y < h)) {
      throw std::invalid_argument("start point must lie in [-1/2, 1/2)^2");
    }
  }
  s.x = conv(x);
  s.y = conv(y);
  return s;
}

// Scoped default precision for HighFloat values created during a run.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(HighFloat::default_precision()) {
    HighFloat::default_precision(digits10(bits));
  }
  ~PrecisionScope() { HighFloat::default_precision(saved_); }
  static unsigned digits10(unsigned bits) { return static_cast<unsigned>(bits * 0.30103) + 1; }

 private:
  unsigned saved_;
};

HighFloat rat_to_high(const BigRat& q, unsigned bits) {
  HighFloat r;
  r.precision(PrecisionScope::digits10(bits));
  mpfr_set_prec(r.backend().data(), static_cast<mpfr_prec_t>(bits));
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

}  // namespace

HighFloat to_high(const ExactScalar& x, unsigned bits) {
  if (x.is_rational()) return rat_to_high(x.to_rational(), bits);
  HighFloat r;
  r.precision(PrecisionScope::digits10(bits));
  mpfr_ptr p = r.backend().data();
  mpfr_set_prec(p, static_cast<mpfr_prec_t>(bits));
  mpfr_t t;
  mpfr_init2(t, static_cast<mpfr_prec_t>(bits) + 64);
  mpfr_set_ui(t, x.radicand(), MPFR_RNDN);
  mpfr_sqrt(t, t, MPFR_RNDN);
  mpfr_mul_z(t, t, x.v().get_mpz_t(), MPFR_RNDN);
  mpfr_add_z(t, t, x.u().get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(p, t, x.w().get_mpz_t(), MPFR_RNDN);
  mpfr_clear(t);
  return r;
}

OrbitStats simulate_exact(const SurfaceModel& model, const BigRat& dx, const BigRat& dy,
                          const BigRat& total_time, const SimulationOptions& opts) {
  if (!model.z.x().is_rational() || !model.z.y().is_rational()) {
    throw std::invalid_argument("exact simulation needs a rational slit endpoint");
  }
  FlowGeometry<BigRat> g{scalar_to_rat(model.z.x()), scalar_to_rat(model.z.y()), dx, dy};
  g.dx.canonicalize();
  g.dy.canonicalize();
  BigRat total = total_time;
  total.canonicalize();
  auto s = start_state<BigRat>(opts, [](const BigRat& q) {
    BigRat c = q;
    c.canonicalize();
    return c;
  });
  return run_flow(g, s, total, opts, "exact");
}

OrbitStats simulate_mpfr(const SurfaceModel& model, const HighFloat& dx, const HighFloat& dy,
                         const HighFloat& total_time, const SimulationOptions& opts) {
  PrecisionScope scope(opts.precision_bits);
  const FlowGeometry<HighFloat> g{to_high(model.z.x(), opts.precision_bits),
                                  to_high(model.z.y(), opts.precision_bits), dx, dy};
  const unsigned bits = opts.precision_bits;
  auto s = start_state<HighFloat>(opts, [bits](const BigRat& q) { return rat_to_high(q, bits); });
  auto st = run_flow(g, s, total_time, opts, "mpfr");
  // Each event rounds a handful of operations at relative precision 2^-bits on
  // quantities of size about T.
  st.error_bound = static_cast<double>(st.events + 1) * 8.0 *
                   std::max(1.0, static_cast<double>(to_ld(total_time))) *
                   std::ldexp(1.0, -static_cast<int>(bits));
  return st;
}

OrbitStats simulate_slope(const SurfaceModel& model, const ExactScalar& slope,
                          const BigRat& total_time, const SimulationOptions& opts) {
  if (slope.sign() < 0) throw std::invalid_argument("slope must be non-negative");
  if (slope.is_rational() && model.z.x().is_rational() && model.z.y().is_rational()) {
    return simulate_exact(model, BigRat(1), slope.to_rational(), total_time, opts);
  }
  PrecisionScope scope(opts.precision_bits);
  return simulate_mpfr(model, rat_to_high(BigRat(1), opts.precision_bits),
                       to_high(slope, opts.precision_bits),
                       rat_to_high(total_time, opts.precision_bits), opts);
}

SlopeEnclosure slope_from_spec(const DirectionSpec& spec, unsigned precision_bits) {
  Convergents conv;
  std::size_t depth = 0;
  const std::size_t limit = 4096;
  PrecisionScope scope(precision_bits);
  while (depth < limit) {
    for (std::size_t i = 0; i < 8; ++i) conv.push(spec.digit(++depth));
    const long k = static_cast<long>(depth);
    // α lies between consecutive convergents, which differ by 1/(q_k q_{k−1}).
    const BigInt prod = conv.q(k) * conv.q(k - 1);
    if (mpz_sizeinbase(prod.get_mpz_t(), 2) > precision_bits + 8) {
      BigRat a(conv.p(k), conv.q(k));
      BigRat b(conv.p(k - 1), conv.q(k - 1));
      a.canonicalize();
      b.canonicalize();
      BigRat mid = (a + b) / 2;
      SlopeEnclosure out;
      out.alpha = rat_to_high(mid, precision_bits);
      out.width = BigRat(abs(a - b)).get_d();
      out.depth = depth;
      return out;
    }
  }
  throw std::runtime_error("could not enclose the slope within the digit limit");
}

OrbitStats simulate_direction(const DirectionSpec& spec, const BigRat& total_time,
                              const SimulationOptions& opts) {
  const SurfaceModel model = build_surface(spec.z0());
  PrecisionScope scope(opts.precision_bits);
  const auto slope = slope_from_spec(spec, opts.precision_bits);
  auto st = simulate_mpfr(model, rat_to_high(BigRat(1), opts.precision_bits), slope.alpha,
                          rat_to_high(total_time, opts.precision_bits), opts);
  st.error_bound += slope.width * total_time.get_d();
  return st;
}

std::string stats_csv(const OrbitStats& st) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << "kind,sheet,row,col,deck,time,fraction\n";
  double total = 0;
  for (double w : st.occupation) total += w;
  const int G = st.grid;
  for (int sheet = 0; sheet < 2; ++sheet) {
    for (int row = 0; row < G; ++row) {
      for (int col = 0; col < G; ++col) {
        const double w = st.occupation[static_cast<std::size_t>(sheet * G * G + row * G + col)];
        os << "cell," << sheet << ',' << row << ',' << col << ",," << w << ','
           << (total > 0 ? w / total : 0.0) << '\n';
      }
    }
  }
  for (long d = -st.deck_window; d <= st.deck_window; ++d) {
    const double w = st.deck_time[static_cast<std::size_t>(d + st.deck_window)];
    os << "deck,,,," << d << ',' << w << ',' << (total > 0 ? w / total : 0.0) << '\n';
  }
  return os.str();
}

}  // namespace ergodir
