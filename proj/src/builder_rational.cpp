#include "ergodir/builder_rational.hpp"

#include "ergodir/direction_spec.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ergodir {

namespace {

long mod(long value, long m) {
  const long r = value % m;
  return r < 0 ? r + m : r;
}

// Smallest x in [1, limit] with (coef * x + offset) ≡ target (mod m).
long scan(long coef, long offset, long target, long m, long limit) {
  for (long x = 1; x <= limit; ++x) {
    if (mod(coef * x + offset - target, m) == 0) return x;
  }
  return 0;
}

}  // namespace

void RationalParam::validate() const {
  if (q < 2) throw std::invalid_argument("rational param needs q >= 2, got " + str());
  if (std::labs(r) >= q || std::labs(s) >= q) {
    throw std::invalid_argument("rational param needs |r|, |s| < q, got " + str());
  }
  if (s == 0) throw std::invalid_argument("rational param needs s != 0, got " + str());
  if (std::gcd(std::labs(s), q) != 1) {
    throw std::invalid_argument("rational param needs gcd(s, q) = 1, got " + str());
  }
}

TorusPoint RationalParam::point() const {
  return TorusPoint(ExactScalar::rational(r, 2 * q), ExactScalar::rational(s, 2 * q));
}

std::string RationalParam::str() const {
  std::ostringstream os;
  os << "(r=" << r << ", s=" << s << ", q=" << q << ")";
  return os.str();
}

RationalParam RationalParam::from_lambda(const BigRat& lambda) {
  BigRat l = lambda;
  l.canonicalize();
  if (sgn(l) <= 0 || l >= BigRat(1, 2)) {
    throw std::invalid_argument("lambda must lie in (0, 1/2), got " + l.get_str());
  }
  const BigInt& num = l.get_num();
  const BigInt& den = l.get_den();
  if (!num.fits_slong_p() || !den.fits_slong_p()) {
    throw std::invalid_argument("lambda " + l.get_str() + " is too large");
  }
  RationalParam out;
  out.r = 0;
  if (den.get_si() % 2 == 0) {
    out.s = num.get_si();
    out.q = den.get_si() / 2;
  } else {
    out.s = 2 * num.get_si();
    out.q = den.get_si();
  }
  out.validate();
  return out;
}

CongruencePair solve_congruences(const RationalParam& param) {
  param.validate();
  const long r = param.r;
  const long s = param.s;
  const long q = param.q;
  CongruencePair out;
  if (param.odd_case()) {
    out.parity = ParityCase::Odd;
    out.a = scan(s, r, -q, 2 * q, 2 * q);
    out.b = scan(s, s - q, r, 2 * q, 2 * q);
    out.a2 = out.a;
  } else {
    out.parity = ParityCase::Even;
    out.a = scan(s, r, -1, q, q);
    out.a2 = scan(s, -r, -1, q, q);
    out.b = std::labs(s);
  }
  if (out.a == 0 || out.b == 0 || out.a2 == 0) {
    throw InternalError("no solution of the block congruences for " + param.str());
  }
  return out;
}

Block block_for(const RationalParam& param) {
  const CongruencePair c = solve_congruences(param);
  const auto u = [](long v) { return static_cast<std::uint64_t>(v); };
  const long q2 = 2 * param.q;
  if (c.parity == ParityCase::Odd) {
    return {u(q2 + c.b), 1, 1, u(q2 + c.a + c.b), 1, 1, u(c.a)};
  }
  return {u(q2 + c.a2), u(c.b - 1), u(c.b + 1), u(q2 + c.a + c.a2),
          u(c.b - 1),   u(c.b + 1), u(c.a)};
}

GenWord fixing_word(const RationalParam& param) {
  const Block block = block_for(param);
  return GenWord::from_digits(block);
}

FixingCertificate certify_fixing(const RationalParam& param) {
  param.validate();
  const RationalParam reduced = param.s < 0 ? param.negated() : param;
  const TorusPoint z = reduced.point();
  const ActionTrace trace = trace_word(z, fixing_word(reduced), /*record_points=*/false);

  const std::uint64_t period = param.r == 0 ? 1 : static_cast<std::uint64_t>(2 * param.q);
  TraceCursor cursor(z);
  cursor.step_n(Generator::HMinus, period);

  return FixingCertificate{
      .fixes_point = trace.end == z,
      .action_is_identity = trace.action.is_identity(),
      .h_minus_period = period,
      .h_minus_period_valid = cursor.point() == z && cursor.action().fixes_beta(),
      .certified_point = z,
      .action = trace.action,
  };
}

namespace {

class RationalBlockSource : public BlockSource {
 public:
  RationalBlockSource(Block block, NkRule nk, TorusPoint z) : block_(block), nk_(std::move(nk)), z_(std::move(z)) {}

  BlockRecord next(std::size_t n) override {
    const auto nk = nk_.at(n);
    if (!nk) throw StreamExhausted("n_k list ends before block " + std::to_string(n));
    BlockDigits digits{};
    std::copy(block_.begin(), block_.end(), digits.begin());
    digits[7] = *nk;
    return BlockRecord{digits, z_};
  }

  std::unique_ptr<BlockSource> clone() const override {
    return std::make_unique<RationalBlockSource>(*this);
  }

 private:
  Block block_;
  NkRule nk_;
  TorusPoint z_;
};

void check_nk_multiples(const RationalParam& param, const NkRule& nk) {
  if (param.r == 0) return;
  const std::uint64_t m = static_cast<std::uint64_t>(2 * param.q);
  const auto fail = [&](const std::string& what) {
    throw std::invalid_argument("for r != 0 every n_k must be a positive multiple of 2q = " +
                                std::to_string(m) + "; " + what);
  };
  switch (nk.kind) {
    case NkRule::Kind::Constant:
      if (nk.value % m != 0) fail("got const " + std::to_string(nk.value));
      break;
    case NkRule::Kind::Arithmetic:
      if (nk.step % m != 0 || nk.offset % m != 0) fail("got " + nk.str());
      break;
    case NkRule::Kind::List:
      for (auto v : nk.list) {
        if (v % m != 0) fail("list contains " + std::to_string(v));
      }
      break;
  }
}

}  // namespace

DirectionSpec direction_stream(const RationalParam& param, const NkRule& nk) {
  param.validate();
  check_nk_multiples(param, nk);
  const FixingCertificate cert = certify_fixing(param);
  if (!cert.ok()) {
    throw CertificationFailure("fixing word for " + param.str() + " failed its certificate");
  }
  const RationalParam reduced = param.s < 0 ? param.negated() : param;
  const TorusPoint z = reduced.point();
  const ExactScalar y = z.y();
  return DirectionSpec(RationalProvenance{param, nk}, z, y, y,
                       std::make_unique<RationalBlockSource>(block_for(reduced), nk, z));
}

}  // namespace ergodir
