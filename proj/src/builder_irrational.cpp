#include "ergodir/builder_irrational.hpp"

#include <stdexcept>
#include <string>

namespace ergodir {

namespace {

const ExactScalar kHalf = ExactScalar::rational(1, 2);
const ExactScalar kZero;

ExactScalar abs_of(const ExactScalar& x) { return x.sign() < 0 ? -x : x; }
const ExactScalar& min_of(const ExactScalar& a, const ExactScalar& b) { return b < a ? b : a; }

bool both_irrational(const TorusPoint& z) {
  return !z.x().is_rational() && !z.y().is_rational();
}

}  // namespace

bool IrrationalBlockParams::certified(const BlockSearchOptions& opts) const {
  return a >= opts.a_min && trace.end == z_out && trace.action.fixes_beta() &&
         z_out.y() >= opts.j_lo && z_out.y() <= opts.j_hi;
}

IrrationalBlockParams find_block(const TorusPoint& z, const BlockSearchOptions& opts) {
  if (z.y().is_rational()) {
    throw std::invalid_argument("block search needs an irrational y coordinate, got " + z.str());
  }
  if (z.y().sign() <= 0 || z.y() >= kHalf) {
    throw std::invalid_argument("block search needs 0 < y < 1/2, got " + z.str());
  }
  if (opts.a_min == 0 || opts.d_choice == 0) {
    throw std::invalid_argument("a_min and d_choice must be positive");
  }
  if (opts.j_lo.sign() <= 0 || opts.j_hi >= kHalf || opts.j_hi < opts.j_lo) {
    throw std::invalid_argument("J must be a closed interval inside (0, 1/2)");
  }

  std::uint64_t used = 0;
  const auto spend = [&] {
    if (++used > opts.budget) {
      throw SearchBudgetExceeded("block search from " + z.str() + " exceeded " +
                                 std::to_string(opts.budget) + " generator applications");
    }
  };
  const ExactScalar eps1_cap = min_of(z.y(), kHalf - z.y()) * kHalf;

  struct Search {
    std::uint64_t a = 0, b = 0, c = 0, d = 0;
    long a_prime = 0, b_prime = 0;
    ExactScalar eps1, eps2;
    DerivationChecks derivation;
  };

  std::uint64_t a_start = opts.a_min;
  while (true) {
    Search out;
    TraceCursor cur(z);

    long m = 0;
    while (true) {
      spend();
      m += cur.step(Generator::HPlus);
      ++out.a;
      if (out.a < a_start || m <= 0) continue;
      out.eps1 = cur.point().x() + kHalf;
      if (out.eps1.sign() > 0 && out.eps1 < eps1_cap) break;
    }
    out.a_prime = m;

    spend();
    cur.step(Generator::HMinus);
    out.derivation.z2_outside_S = !in_region_S(cur.point());
    spend();
    cur.step(Generator::HPlus);
    const TorusPoint z3 = cur.point();
    out.derivation.z3_in_S = in_region_S(z3);

    const ExactScalar abs_x3 = abs_of(z3.x());
    const ExactScalar eps2_cap = min_of(abs_x3, kHalf - abs_x3) * kHalf;
    m = 0;
    while (true) {
      spend();
      m += cur.step(Generator::HMinus);
      ++out.b;
      if (m <= out.a_prime) continue;
      out.eps2 = kHalf - cur.point().y();
      if (out.eps2.sign() > 0 && out.eps2 < eps2_cap) break;
    }
    out.b_prime = m;

    spend();
    cur.step(Generator::HPlus);
    out.derivation.z5_outside_S = !in_region_S(cur.point());
    spend();
    cur.step(Generator::HMinus);
    out.derivation.z6_in_S = in_region_S(cur.point());

    const long target = out.b_prime - out.a_prime;
    m = 0;
    do {
      spend();
      m += cur.step(Generator::HPlus);
      ++out.c;
    } while (m != target);

    std::uint64_t admissible = 0;
    while (true) {
      spend();
      cur.step(Generator::HMinus);
      ++out.d;
      const ExactScalar& y = cur.point().y();
      if (y >= opts.j_lo && y <= opts.j_hi && ++admissible == opts.d_choice) break;
    }

    const BlockDigits digits{out.a, 1, 1, out.b, 1, 1, out.c, out.d};
    ActionTrace trace = trace_word(z, GenWord::from_digits(digits));
    used += trace.word.length();
    bool irrational = true;
    for (const auto& p : trace.points) irrational = irrational && both_irrational(p);
    IrrationalBlockParams block{out.a,         out.b,        out.c,          out.d,
                                out.a_prime,   out.b_prime,  out.eps1,       out.eps2,
                                out.derivation, irrational,  std::move(trace), cur.point(),
                                used};
    if (block.certified(opts)) return block;
    a_start = out.a + 1;
  }
}

namespace {

class IrrationalBlockSource : public BlockSource {
 public:
  IrrationalBlockSource(TorusPoint z, std::vector<std::uint64_t> d_choices, std::uint64_t budget)
      : z_(std::move(z)), d_choices_(std::move(d_choices)), budget_(budget) {}

  BlockRecord next(std::size_t n) override {
    BlockSearchOptions opts;
    opts.budget = budget_;
    if (n <= d_choices_.size()) opts.d_choice = d_choices_[n - 1];
    const IrrationalBlockParams params = [&] {
      try {
        return find_block(z_, opts);
      } catch (const SearchBudgetExceeded& e) {
        throw StreamExhausted("block " + std::to_string(n) + ": " + e.what());
      }
    }();
    z_ = params.z_out;
    return BlockRecord{params.digits(), params.z_out};
  }

  std::unique_ptr<BlockSource> clone() const override {
    return std::make_unique<IrrationalBlockSource>(*this);
  }

 private:
  TorusPoint z_;
  std::vector<std::uint64_t> d_choices_;
  std::uint64_t budget_;
};

}  // namespace

DirectionSpec direction_stream_irrational(const ExactScalar& lambda,
                                          std::vector<std::uint64_t> d_choices,
                                          std::uint64_t budget) {
  if (lambda.is_rational()) {
    throw std::invalid_argument("lambda " + lambda.str() +
                                " is rational; use the rational builder");
  }
  if (lambda.sign() <= 0 || lambda >= kHalf) {
    throw std::invalid_argument("lambda must lie in (0, 1/2), got " + lambda.str());
  }
  for (auto d : d_choices) {
    if (d == 0) throw std::invalid_argument("d choices are 1-based ranks");
  }
  const TorusPoint z0(kZero, lambda);
  const BlockSearchOptions defaults;
  return DirectionSpec(IrrationalProvenance{lambda, d_choices, budget}, z0, defaults.j_lo,
                       defaults.j_hi,
                       std::make_unique<IrrationalBlockSource>(z0, d_choices, budget));
}

}  // namespace ergodir
