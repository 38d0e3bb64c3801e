#include "ergodir/billiard.hpp"

#include <cmath>

namespace ergodir {

namespace {

double floor_of(double v) { return std::floor(v); }
BigRat floor_of(const BigRat& v) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return BigRat(out);
}

long to_long(double v) { return static_cast<long>(v); }
long to_long(const BigRat& v) { return BigInt(v.get_num() / v.get_den()).get_si(); }

bool is_integer(double v) { return std::floor(v) == v; }
bool is_integer(const BigRat& v) { return v.get_den() == 1; }

template <typename T>
T half() {
  return T(1) / T(2);
}

void canonical(double&) {}
void canonical(BigRat& v) { v.canonicalize(); }

template <typename T>
BilliardState<T> normalized(BilliardState<T> s) {
  canonical(s.x);
  canonical(s.y);
  canonical(s.cx);
  canonical(s.cy);
  if (s.y == T(0) && s.cy < T(0)) s.cy = -s.cy;
  if (s.y == half<T>() && s.cy > T(0)) s.cy = -s.cy;
  return s;
}

}  // namespace

template <typename T>
CoverPoint<T> billiard_to_cover(const BilliardState<T>& input, const T& lambda) {
  const BilliardState<T> raw = normalized(input);
  if (!(T(0) < lambda) || !(lambda < half<T>())) throw BilliardError("λ must lie in (0, 1/2)");
  if (raw.y < T(0) || half<T>() < raw.y) throw BilliardError("position is outside the strip");
  if (raw.cx == T(0) && raw.cy == T(0)) throw BilliardError("velocity is zero");
  if (is_integer(raw.x) && !(lambda < raw.y)) throw BilliardError("position is on a barrier");
  const BilliardState<T>& s = raw;
  CoverPoint<T> p;
  const bool left = s.cx < T(0);
  p.dx = left ? -s.cx : s.cx;
  p.dy = s.cy < T(0) ? -s.cy : s.cy;
  p.state.sheet = left ? 1 : 0;
  if (!left) {
    const T deck = floor_of(s.x + half<T>());
    p.state.deck = to_long(deck);
    p.state.x = s.x - deck;
  } else {
    const T n1 = floor_of(-s.x + half<T>());
    p.state.deck = -to_long(n1);
    p.state.x = -s.x - n1;
  }
  T y = s.cy < T(0) ? -s.y : s.y;
  if (y == half<T>()) y = -y;
  p.state.y = y;
  return p;
}

template <typename T>
BilliardState<T> cover_to_billiard(const CoverPoint<T>& p, const T& lambda) {
  if (!(T(0) < lambda) || !(lambda < half<T>())) throw BilliardError("λ must lie in (0, 1/2)");
  const T deck(p.state.deck);
  BilliardState<T> s;
  if (p.state.sheet == 0) {
    s.x = deck + p.state.x;
    s.cx = p.dx;
  } else {
    s.x = deck - p.state.x;
    s.cx = -p.dx;
  }
  const bool down = p.state.y < T(0);
  s.y = down ? -p.state.y : p.state.y;
  s.cy = down ? -p.dy : p.dy;
  if (is_integer(s.x) && !(lambda < s.y)) throw BilliardError("position is on a barrier");
  return normalized(s);
}

template CoverPoint<double> billiard_to_cover(const BilliardState<double>&, const double&);
template CoverPoint<BigRat> billiard_to_cover(const BilliardState<BigRat>&, const BigRat&);
template BilliardState<double> cover_to_billiard(const CoverPoint<double>&, const double&);
template BilliardState<BigRat> cover_to_billiard(const CoverPoint<BigRat>&, const BigRat&);

BilliardRun billiard_advance(const BilliardState<BigRat>& start, const BigRat& lambda,
                             const BigRat& t) {
  billiard_to_cover(start, lambda);  // validates
  BilliardRun run;
  BilliardState<BigRat> s = normalized(start);
  BigRat left = t;
  left.canonicalize();
  const BigRat h = half<BigRat>();
  while (left > 0) {
    std::optional<BigRat> t_wall, t_bar;
    if (s.cy > 0) t_wall = (h - s.y) / s.cy;
    if (s.cy < 0) t_wall = -s.y / s.cy;
    BigRat bar_x;
    if (s.cx > 0) {
      bar_x = floor_of(s.x) + 1;
      t_bar = (bar_x - s.x) / s.cx;
    } else if (s.cx < 0) {
      bar_x = is_integer(s.x) ? BigRat(s.x - 1) : floor_of(s.x);
      t_bar = (bar_x - s.x) / s.cx;
    }
    // Sliding down a barrier's line runs into its tip.
    if (s.cx == 0 && is_integer(s.x) && s.cy < 0 && (s.y - lambda) / -s.cy <= left) {
      s.y = lambda;
      run.singular = true;
      break;
    }
    BigRat dt = left;
    if (t_wall && *t_wall < dt) dt = *t_wall;
    if (t_bar && *t_bar < dt) dt = *t_bar;
    s.x += s.cx * dt;
    s.y += s.cy * dt;
    left -= dt;
    if (t_bar && *t_bar == dt) {
      s.x = bar_x;
      if (s.y == lambda) {
        run.singular = true;
        break;
      }
      if (s.y < lambda) {
        s.cx = -s.cx;
        ++run.events;
      }
    }
    if (t_wall && *t_wall == dt) {
      s.y = s.cy > 0 ? h : BigRat(0);
      s.cy = -s.cy;
      ++run.events;
    }
  }
  run.state = normalized(s);
  return run;
}

BilliardRun cover_advance(const BilliardState<BigRat>& start, const BigRat& lambda,
                          const BigRat& t) {
  CoverPoint<BigRat> p = billiard_to_cover(start, lambda);
  BigRat lam = lambda;
  lam.canonicalize();
  const FlowGeometry<BigRat> g{BigRat(0), lam, p.dx, p.dy};
  BigRat left = t;
  left.canonicalize();
  bool skip = false;
  BilliardRun run;
  while (left > 0) {
    const auto out = step_flow(p.state, g, left, skip);
    left -= out.dt;
    if (out.kind == EventKind::ConePoint) {
      run.singular = true;
      break;
    }
    if (out.kind != EventKind::Stop) ++run.events;
  }
  if (!run.singular) run.state = cover_to_billiard(p, lambda);
  return run;
}

}  // namespace ergodir
