#include "ergodir/exact_scalar.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

namespace ergodir {

namespace {

BigInt parse_int(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  BigInt out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw ArithmeticError("malformed integer literal '" + std::string(text) + "'");
  }
  return out;
}

// floor(v·√d) for a non-square d.
BigInt floor_surd(const BigInt& v, std::uint64_t d) {
  BigInt sq = v * v * BigInt(static_cast<unsigned long>(d));
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
  if (sgn(v) >= 0) return root;
  return -root - 1;
}

}  // namespace

bool is_squarefree(std::uint64_t d) {
  if (d == 0) return true;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

int sign_of_surd(const BigInt& u, const BigInt& v, std::uint64_t d) {
  const int su = sgn(u);
  const int sv = sgn(v);
  if (sv == 0 || d == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: the larger of u² and v²d wins.
  const int c = cmp(u * u, v * v * BigInt(static_cast<unsigned long>(d)));
  return c > 0 ? su : sv;
}

ExactScalar ExactScalar::rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw ArithmeticError("division by zero");
  ExactScalar out;
  out.u_ = num;
  out.w_ = den;
  out.normalize();
  return out;
}

ExactScalar ExactScalar::rational(const BigRat& value) {
  return rational(value.get_num(), value.get_den());
}

ExactScalar ExactScalar::quadratic(const BigInt& u, const BigInt& v, const BigInt& w,
                                   std::uint64_t d) {
  if (sgn(w) == 0) throw ArithmeticError("division by zero");
  if (!is_squarefree(d)) {
    throw ArithmeticError("radicand " + std::to_string(d) + " is not squarefree");
  }
  ExactScalar out;
  out.u_ = u;
  out.v_ = v;
  out.w_ = w;
  out.d_ = d;
  if (d == 1) {
    out.u_ += out.v_;
    out.v_ = 0;
    out.d_ = 0;
  }
  out.normalize();
  return out;
}

ExactScalar ExactScalar::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() == 4) {
    const BigInt d = parse_int(parts[3]);
    if (sgn(d) < 0 || !d.fits_ulong_p()) throw ArithmeticError("radicand out of range");
    return quadratic(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]),
                     d.get_ui());
  }
  if (parts.size() != 1) {
    throw ArithmeticError("expected 'p', 'p/q' or 'u,v,w,D', got '" + std::string(text) + "'");
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactScalar(parse_int(text));
  return rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

void ExactScalar::normalize() {
  if (sgn(w_) < 0) {
    u_ = -u_;
    v_ = -v_;
    w_ = -w_;
  }
  if (sgn(v_) == 0) d_ = 0;
  if (d_ == 0) v_ = 0;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), u_.get_mpz_t(), v_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(u_.get_mpz_t(), u_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(v_.get_mpz_t(), v_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(w_.get_mpz_t(), w_.get_mpz_t(), g.get_mpz_t());
  }
}

std::uint64_t ExactScalar::common_radicand(const ExactScalar& a, const ExactScalar& b) {
  if (a.d_ == 0) return b.d_;
  if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
  throw ArithmeticError("operands belong to different quadratic fields Q(sqrt " +
                        std::to_string(a.d_) + ") and Q(sqrt " + std::to_string(b.d_) + ")");
}

BigRat ExactScalar::to_rational() const {
  if (d_ != 0) throw ArithmeticError("value " + str() + " is irrational");
  BigRat out(u_, w_);
  out.canonicalize();
  return out;
}

int ExactScalar::sign() const { return sign_of_surd(u_, v_, d_); }

BigInt ExactScalar::floor() const {
  BigInt num = u_;
  if (d_ != 0) num += floor_surd(v_, d_);
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), w_.get_mpz_t());
  return out;
}

double ExactScalar::to_double() const {
  if (d_ == 0) return BigRat(u_, w_).get_d();
  // u and v√D nearly cancel when the coefficients are large, so work with
  // enough bits to keep 64 significant ones after the subtraction.
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(
      2 * std::max(mpz_sizeinbase(u_.get_mpz_t(), 2), mpz_sizeinbase(v_.get_mpz_t(), 2)) + 128);
  mpfr_t t, s;
  mpfr_inits2(prec, t, s, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(s, d_, MPFR_RNDN);
  mpfr_sqrt(s, s, MPFR_RNDN);
  mpfr_mul_z(s, s, v_.get_mpz_t(), MPFR_RNDN);
  mpfr_add_z(s, s, u_.get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(t, s, w_.get_mpz_t(), MPFR_RNDN);
  const double out = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clears(t, s, static_cast<mpfr_ptr>(nullptr));
  return out;
}

std::string ExactScalar::str() const {
  std::ostringstream os;
  if (d_ == 0) {
    os << u_;
    if (w_ != 1) os << '/' << w_;
  } else {
    os << u_ << ',' << v_ << ',' << w_ << ',' << d_;
  }
  return os.str();
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.u_ = -out.u_;
  out.v_ = -out.v_;
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  const std::uint64_t d = common_radicand(*this, rhs);
  if (w_ == rhs.w_) {
    u_ += rhs.u_;
    v_ += rhs.v_;
  } else {
    u_ = u_ * rhs.w_ + rhs.u_ * w_;
    v_ = v_ * rhs.w_ + rhs.v_ * w_;
    w_ *= rhs.w_;
  }
  d_ = d;
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) { return *this += -rhs; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  const std::uint64_t d = common_radicand(*this, rhs);
  const BigInt dd(static_cast<unsigned long>(d));
  BigInt u = u_ * rhs.u_ + v_ * rhs.v_ * dd;
  BigInt v = u_ * rhs.v_ + v_ * rhs.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  w_ *= rhs.w_;
  d_ = d;
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  common_radicand(*this, rhs);
  // x / y = x · conj(y) · w_y / (u_y² − d v_y²)
  const BigInt dd(static_cast<unsigned long>(rhs.d_));
  const BigInt norm = rhs.u_ * rhs.u_ - rhs.v_ * rhs.v_ * dd;
  ExactScalar conj;
  conj.u_ = rhs.u_ * rhs.w_;
  conj.v_ = -rhs.v_ * rhs.w_;
  conj.w_ = norm;
  conj.d_ = rhs.d_;
  conj.normalize();
  return *this *= conj;
}

int compare(const ExactScalar& lhs, const ExactScalar& rhs) {
  if (lhs.d_ == 0 && rhs.d_ == 0) {
    return cmp(lhs.u_ * rhs.w_, rhs.u_ * lhs.w_);
  }
  return (lhs - rhs).sign();
}

bool operator==(const ExactScalar& lhs, const ExactScalar& rhs) {
  return lhs.d_ == rhs.d_ && lhs.u_ == rhs.u_ && lhs.v_ == rhs.v_ && lhs.w_ == rhs.w_;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.str(); }

ExactScalar mod_half_open(const ExactScalar& x) {
  static const ExactScalar half = ExactScalar::rational(1, 2);
  return x - ExactScalar((x + half).floor());
}

}  // namespace ergodir
