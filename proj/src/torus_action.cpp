#include "ergodir/torus_action.hpp"

#include <stdexcept>
#include <ostream>

namespace ergodir {

namespace {

const ExactScalar& half() {
  static const ExactScalar value = ExactScalar::rational(1, 2);
  return value;
}

const ExactScalar& minus_half() {
  static const ExactScalar value = ExactScalar::rational(-1, 2);
  return value;
}

bool in_half_open(const ExactScalar& t) { return t >= minus_half() && t < half(); }

}  // namespace

bool is_excluded_point(const ExactScalar& x, const ExactScalar& y) {
  const bool x0 = x.is_zero() || x == minus_half();
  const bool y0 = y.is_zero() || y == minus_half();
  return x0 && y0;
}

TorusPoint::TorusPoint(ExactScalar x, ExactScalar y) : x_(std::move(x)), y_(std::move(y)) {
  if (!in_half_open(x_) || !in_half_open(y_)) {
    throw std::invalid_argument("torus point (" + x_.str() + ", " + y_.str() +
                                ") is outside [-1/2, 1/2)^2");
  }
  if (is_excluded_point(x_, y_)) {
    throw std::invalid_argument("torus point (" + x_.str() + ", " + y_.str() +
                                ") is one of the four excluded points");
  }
}

TorusPoint TorusPoint::reduced(const ExactScalar& x, const ExactScalar& y) {
  return TorusPoint(mod_half_open(x), mod_half_open(y));
}

TorusPoint TorusPoint::parse(const std::string& text) {
  const auto sep = text.find(';') != std::string::npos ? ';' : ',';
  const auto pos = text.find(sep);
  if (pos == std::string::npos || text.find(sep, pos + 1) != std::string::npos) {
    throw std::invalid_argument("expected 'x,y' or 'x;y', got '" + text + "'");
  }
  return TorusPoint(ExactScalar::parse(text.substr(0, pos)),
                    ExactScalar::parse(text.substr(pos + 1)));
}

std::string TorusPoint::str() const { return "(" + x_.str() + "; " + y_.str() + ")"; }

bool in_region_S(const TorusPoint& z) { return in_half_open(z.x() + z.y()); }

bool in_region_E(const TorusPoint& z) { return z.x() > minus_half() && z.y() > minus_half(); }

TorusPoint apply_generator_inverse(const TorusPoint& z, Generator gen, std::uint64_t n) {
  const ExactScalar k(BigInt(static_cast<unsigned long>(n)));
  if (gen == Generator::HPlus) return TorusPoint(mod_half_open(z.x() - k * z.y()), z.y());
  return TorusPoint(z.x(), mod_half_open(z.y() - k * z.x()));
}

TorusPoint apply_matrix(const IntMat2& g, const TorusPoint& z) {
  return TorusPoint::reduced(ExactScalar(g.a) * z.x() + ExactScalar(g.b) * z.y(),
                             ExactScalar(g.c) * z.x() + ExactScalar(g.d) * z.y());
}

IntMat2 generator_homology_factor(const TorusPoint& z_after, Generator gen) {
  const IntMat2 m = matrix(gen);
  return in_region_S(z_after) ? m : m.inverse();
}

HomologyAction::HomologyAction(const IntMat2& m) : m_(m) {
  const BigInt det = m.det();
  if (det != 1 && det != -1) {
    throw std::invalid_argument("homology action " + m.str() + " is not unimodular");
  }
  const BigInt& lead = sgn(m.a) != 0 ? m.a : (sgn(m.b) != 0 ? m.b : m.c);
  if (sgn(lead) < 0) m_ = m.negated();
}

bool HomologyAction::fixes_beta() const {
  return sgn(m_.b) == 0 && (m_.d == 1 || m_.d == -1) && m_.a == m_.d;
}

TraceCursor::TraceCursor(TorusPoint start, bool allow_grid) : point_(std::move(start)) {
  if (!allow_grid || !point_.x_.is_rational() || !point_.y_.is_rational()) return;
  const BigRat x = point_.x_.to_rational();
  const BigRat y = point_.y_.to_rational();
  const BigInt n = lcm(BigInt(x.get_den()), BigInt(y.get_den()));
  if (n > BigInt(1L << 30)) return;
  gn_ = n.get_si();
  gx_ = BigInt(x.get_num() * (n / x.get_den())).get_si();
  gy_ = BigInt(y.get_num() * (n / y.get_den())).get_si();
  grid_ = true;
}

const TorusPoint& TraceCursor::point() const {
  if (grid_dirty_) {
    point_ = TorusPoint(ExactScalar::rational(gx_, gn_), ExactScalar::rational(gy_, gn_),
                        TorusPoint::Unchecked{});
    grid_dirty_ = false;
  }
  return point_;
}

void TraceCursor::step_grid(Generator gen) {
  // v − n·floor(v/n + 1/2) keeps v/n in [−1/2, 1/2).
  const auto reduce = [n = gn_](long v) {
    const long shifted = 2 * v + n;
    const long twice_n = 2 * n;
    long k = shifted / twice_n;
    if (shifted % twice_n != 0 && shifted < 0) --k;
    return v - k * n;
  };
  if (gen == Generator::HPlus) {
    gx_ = reduce(gx_ - gy_);
  } else {
    gy_ = reduce(gy_ - gx_);
  }
  grid_dirty_ = true;
}

int TraceCursor::step(Generator gen) {
  int factor = 0;
  if (grid_) {
    step_grid(gen);
    const long sum2 = 2 * (gx_ + gy_);
    factor = (sum2 >= -gn_ && sum2 < gn_) ? 1 : -1;
  } else {
    // The excluded set is invariant under SL(2,Z) mod 1, so the unchecked
    // constructor is safe here.
    if (gen == Generator::HPlus) {
      point_ = TorusPoint(mod_half_open(point_.x_ - point_.y_), point_.y_, TorusPoint::Unchecked{});
    } else {
      point_ = TorusPoint(point_.x_, mod_half_open(point_.y_ - point_.x_), TorusPoint::Unchecked{});
    }
    factor = in_region_S(point_) ? 1 : -1;
  }
  ++steps_;
  if (has_pending_ && pending_gen_ != gen) flush();
  has_pending_ = true;
  pending_gen_ = gen;
  pending_exp_ += factor;
  return factor;
}

long TraceCursor::step_n(Generator gen, std::uint64_t n, std::vector<TorusPoint>* record) {
  long m = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    m += step(gen);
    if (record) record->push_back(point());
  }
  return m;
}

void TraceCursor::run(const GenWord& word, std::vector<TorusPoint>* record) {
  for (const auto& s : word.syllables()) step_n(s.gen, s.exponent, record);
}

void TraceCursor::flush() const {
  if (!has_pending_) return;
  if (pending_exp_ != 0) product_ = product_ * matrix_pow(pending_gen_, BigInt(pending_exp_));
  has_pending_ = false;
  pending_exp_ = 0;
}

IntMat2 TraceCursor::raw_action() const {
  flush();
  return product_;
}

ActionTrace trace_word(const TorusPoint& z, const GenWord& word, bool record_points) {
  TraceCursor cursor(z);
  std::vector<TorusPoint> points;
  if (record_points) points.reserve(word.length());
  cursor.run(word, record_points ? &points : nullptr);
  const IntMat2 raw = cursor.raw_action();
  return ActionTrace{z, word, std::move(points), cursor.point(), raw, HomologyAction(raw)};
}

std::vector<long> m_sequence(const TorusPoint& z, Generator gen, std::uint64_t n_max) {
  std::vector<long> out;
  out.reserve(n_max);
  TraceCursor cursor(z);
  long m = 0;
  for (std::uint64_t n = 0; n < n_max; ++n) {
    m += cursor.step(gen);
    out.push_back(m);
  }
  return out;
}

TorusPoint involution_theta(const TorusPoint& z) { return TorusPoint(z.y(), z.x()); }

HomologyAction involution_theta_action() { return HomologyAction(mat::theta()); }

TorusPoint involution_minus_id(const TorusPoint& z) {
  return TorusPoint::reduced(-z.x(), -z.y());
}

std::ostream& operator<<(std::ostream& os, const HomologyAction& a) { return os << a.str(); }
std::ostream& operator<<(std::ostream& os, const TorusPoint& z) { return os << z.str(); }

}  // namespace ergodir
