#include "ergodir/criterion.hpp"

#include <algorithm>
#include <stdexcept>

#include "ergodir/convergents.hpp"

namespace ergodir {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

BigRat ratio(const BigInt& p, const BigInt& q) {
  BigRat r(p, q);
  r.canonicalize();
  return r;
}

Interval exact(const BigInt& v, mpfr_prec_t prec) { return Interval::from_rational(BigRat(v), prec); }

Convergents convergents_to(const DirectionSpec& spec, std::size_t depth) {
  Convergents c;
  for (std::size_t i = 1; i <= depth; ++i) c.push(spec.digit(i));
  return c;
}

// α lies between consecutive convergents K and K+1.
Interval alpha_enclosure(const Convergents& c, long K, mpfr_prec_t prec) {
  return Interval::hull(ratio(c.p(K), c.q(K)), ratio(c.p(K + 1), c.q(K + 1)), prec);
}

CheckStatus bounded_by_one(const std::vector<Interval>& entries) {
  bool all_inside = true;
  for (const auto& e : entries) {
    const Interval a = e.abs();
    if (a.certainly_gt(1.0)) return CheckStatus::Fail;
    if (!a.certainly_le(1.0)) all_inside = false;
  }
  return all_inside ? CheckStatus::Pass : CheckStatus::Inconclusive;
}

// Calls attempt(prec, K) over growing α depth and precision until it is conclusive.
template <typename Attempt>
void refine(std::size_t k, const VerifyOptions& opts, Attempt&& attempt) {
  for (mpfr_prec_t prec = opts.precision; prec <= opts.max_precision; prec *= 2) {
    for (std::size_t extra = opts.alpha_extra_digits; extra <= opts.alpha_extra_max; extra += 8) {
      if (attempt(prec, static_cast<long>(k + extra))) return;
    }
  }
}

}  // namespace

SigmaResult sigma_check_at(const DirectionSpec& spec, std::size_t k, const VerifyOptions& opts) {
  if (k < 1) throw std::invalid_argument("sigma check needs k >= 1");
  const long ki = static_cast<long>(k);
  const bool faulted = opts.faults.shift_alpha_at && *opts.faults.shift_alpha_at * 8 == k;
  SigmaResult out;
  refine(k, opts, [&](mpfr_prec_t prec, long K) {
    const Convergents c = convergents_to(spec, static_cast<std::size_t>(K + 1));
    Interval alpha = alpha_enclosure(c, K, prec);
    if (faulted) {
      const BigInt& q = c.q(ki);
      alpha = Interval::from_rational(ratio(c.p(ki), q) - BigRat(2) / BigRat(q * q), prec);
    }
    const Interval qk = exact(c.q(ki), prec);
    const Interval pk = exact(c.p(ki), prec);
    const Interval qk1 = exact(c.q(ki - 1), prec);
    const Interval pk1 = exact(c.p(ki - 1), prec);
    out.entries = {qk * (qk * alpha - pk), qk * (qk1 * alpha - pk1), pk / (alpha * qk),
                   pk1 / (alpha * qk)};
    out.status = bounded_by_one(out.entries);
    out.method = "interval";
    out.precision_used = prec;
    out.alpha_depth = static_cast<std::size_t>(K);
    return out.status != CheckStatus::Inconclusive;
  });
  if (out.status == CheckStatus::Inconclusive && !faulted) {
    // |q_kα − p_k| < 1/q_{k+1} and |q_{k−1}α − p_{k−1}| < 1/q_k bound the
    // first two entries; for even k, p_k/q_k < α < p_{k−1}/q_{k−1} and
    // p_{k−1} <= p_k < αq_k bound the last two.
    const Convergents c = convergents_to(spec, k + 1);
    const bool ok = k % 2 == 0 && c.p(ki - 1) <= c.p(ki) && c.q(ki) < c.q(ki + 1);
    out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    out.method = "structural";
  }
  return out;
}

SigmaResult sigma_check(const DirectionSpec& spec, std::size_t n, const VerifyOptions& opts) {
  if (n < 1) throw std::invalid_argument("checkpoints are numbered from 1");
  return sigma_check_at(spec, DirectionSpec::checkpoint(n), opts);
}

WedgeResult wedge_check_at(const DirectionSpec& spec, std::size_t k, const ExactScalar& area,
                           const VerifyOptions& opts) {
  if (k < 1) throw std::invalid_argument("wedge check needs k >= 1");
  if (area.sign() <= 0) throw std::invalid_argument("strip area must be positive");
  const long ki = static_cast<long>(k);
  WedgeResult out;
  // |q_kα − p_k| < 1/(a_{k+1}q_k) and, for even k, ‖v‖ <= q_k√(1+α²).
  out.implied_by_digit = k % 2 == 0 && ExactScalar(BigInt(static_cast<unsigned long>(
                                           spec.digit(k + 1)))) * area >= ExactScalar(2);
  refine(k, opts, [&](mpfr_prec_t prec, long K) {
    const Convergents c = convergents_to(spec, static_cast<std::size_t>(K + 1));
    const Interval alpha = alpha_enclosure(c, K, prec);
    const Interval q = exact(c.q(ki), prec);
    const Interval p = exact(c.p(ki), prec);
    const Interval one = exact(BigInt(1), prec);
    const Interval two = exact(BigInt(2), prec);
    const Interval sine_part = (q * alpha - p).abs() / (one + alpha * alpha).sqrt();
    const Interval allowed = Interval::from_scalar(area, prec) / (two * (q * q + p * p).sqrt());
    out.ratio = sine_part / allowed;
    out.ratio_half_slack = two * out.ratio;
    if (out.ratio.certainly_lt(1.0)) {
      out.status = CheckStatus::Pass;
    } else if (out.ratio.certainly_ge(1.0)) {
      out.status = CheckStatus::Fail;
    } else {
      out.status = CheckStatus::Inconclusive;
    }
    out.method = "interval";
    return out.status != CheckStatus::Inconclusive;
  });
  if (out.status == CheckStatus::Inconclusive && out.implied_by_digit) {
    out.status = CheckStatus::Pass;
    out.method = "implication";
  }
  return out;
}

WedgeResult wedge_check(const DirectionSpec& spec, std::size_t n, const VerifyOptions& opts) {
  if (n < 1) throw std::invalid_argument("checkpoints are numbered from 1");
  const ExactScalar area = ExactScalar(1) - ExactScalar(2) * spec.block(n).z_out.y();
  return wedge_check_at(spec, DirectionSpec::checkpoint(n), area, opts);
}

VerificationReport verify(const DirectionSpec& spec, std::size_t horizon, const VerifyOptions& opts) {
  if (horizon < 1) throw std::invalid_argument("verification horizon must be >= 1");
  VerificationReport report;
  report.precision = opts.precision;

  TraceCursor cursor(spec.z0());
  IntMat2 word = IntMat2::identity();
  std::size_t pos = 0;
  double worst_ratio = 0;

  for (std::size_t n = 1; n <= horizon; ++n) {
    const std::size_t k = DirectionSpec::checkpoint(n);
    while (pos < k) {
      ++pos;
      const std::uint64_t d = spec.digit(pos);
      const Generator gen = pos % 2 == 1 ? Generator::HPlus : Generator::HMinus;
      cursor.step_n(gen, d);
      word = word * matrix_pow(gen, BigInt(static_cast<unsigned long>(d)));
    }
    TraceCursor tested = cursor;
    if (opts.faults.corrupt_word_at == n) tested.step(Generator::HPlus);

    CheckpointRecord rec(n, k, tested.point());
    const IntMat2 raw = tested.raw_action();
    rec.action = HomologyAction(raw);
    rec.homology_fixes_beta = rec.action.fixes_beta();
    const ExactScalar& y = rec.z_n.y();
    rec.y_in_bounds = y >= spec.y_lo() && y <= spec.y_hi();
    rec.next_digit = spec.digit(k + 1);
    const ExactScalar area = ExactScalar(1) - ExactScalar(2) * y;
    rec.digit_inequality =
        ExactScalar(BigInt(static_cast<unsigned long>(rec.next_digit))) * area >= ExactScalar(2);

    rec.sigma = sigma_check_at(spec, k, opts);
    rec.sigma_bounded = rec.sigma.status == CheckStatus::Pass;

    const ExactScalar wedge_area =
        opts.faults.shrink_area_at == n ? area * ExactScalar::rational(1, 2) : area;
    rec.wedge = wedge_check_at(spec, k, wedge_area, opts);
    rec.wedge_ok = rec.wedge.status == CheckStatus::Pass;
    if (rec.wedge.method == "interval") worst_ratio = std::max(worst_ratio, rec.wedge.ratio.hi_double());

    const Convergents c = convergents_to(spec, k);
    rec.strip.k = static_cast<int>(raw.d.get_si());
    rec.strip.vx = c.q(static_cast<long>(k));
    rec.strip.vy = c.p(static_cast<long>(k));
    rec.strip.area = area;
    rec.strip_matches_word = word.a == rec.strip.vx && word.c == rec.strip.vy;

    if (!report.area_lower_bound || area < *report.area_lower_bound) report.area_lower_bound = area;
    report.checkpoints.push_back(std::move(rec));
  }

  report.overall = std::all_of(report.checkpoints.begin(), report.checkpoints.end(),
                               [](const CheckpointRecord& r) { return r.all(); });
  report.wedge_margin = 1.0 - worst_ratio;
  return report;
}

}  // namespace ergodir
