#include "ergodir/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ergodir/convergents.hpp"

namespace ergodir {

namespace {

BigInt from_u64(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

// L_l = q_m(bl + c + 1) + q_{m−1}, so that d_{ā,bl+c} = 1/L_l².
BigInt denominator(const BlockContinuants& k, std::uint64_t b, std::uint64_t c, std::uint64_t l) {
  return k.q_m * (from_u64(b) * from_u64(l) + from_u64(c) + 1) + k.q_m1;
}

struct Numerators {
  BigInt p_m;
  BigInt p_m1;
};

Numerators block_numerators(const std::vector<std::uint64_t>& block) {
  Convergents cv(block);
  const long m = static_cast<long>(block.size());
  return {cv.p(m), cv.p(m - 1)};
}

// Σ_{l<=u} exp(−2 s log L_l) − 1 over precomputed logs.
long double excess(const std::vector<long double>& logs, std::uint64_t u, long double s) {
  long double sum = 0;
  for (std::uint64_t l = 0; l < u; ++l) sum += std::exp(-2.0L * s * logs[l]);
  return sum - 1.0L;
}

SuSolution bisect(const std::vector<long double>& logs, std::uint64_t u, long double tolerance) {
  long double lo = 0;
  long double hi = 1;
  while (excess(logs, u, hi) >= 0) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > tolerance) {
    const long double mid = 0.5L * (lo + hi);
    if (excess(logs, u, mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  SuSolution out;
  out.lo = lo;
  out.hi = hi;
  out.s = 0.5L * (lo + hi);
  out.residual = excess(logs, u, out.s);
  out.u = u;
  return out;
}

std::vector<long double> log_denominators(const DimensionProblem& p, const BlockContinuants& k,
                                          std::uint64_t u) {
  std::vector<long double> logs;
  logs.reserve(u);
  for (std::uint64_t l = 1; l <= u; ++l) {
    logs.push_back(std::log(static_cast<long double>(denominator(k, p.b, p.c, l).get_d())));
  }
  return logs;
}

}  // namespace

void DimensionProblem::validate() const {
  if (block.size() < 3 || block.size() % 2 == 0) {
    throw std::invalid_argument("block length must be odd and at least 3, got " +
                                std::to_string(block.size()));
  }
  for (auto a : block) {
    if (a == 0) throw std::invalid_argument("block digits must be positive");
  }
  if (b == 0) throw std::invalid_argument("progression step b must be positive");
  if (u < 2) throw std::invalid_argument("truncation u must be at least 2");
}

BlockContinuants block_continuants(const std::vector<std::uint64_t>& block) {
  Convergents cv(block);
  const long m = static_cast<long>(block.size());
  return {cv.q(m), cv.q(m - 1)};
}

ExactScalar contraction_bound(const std::vector<std::uint64_t>& block, std::uint64_t l) {
  if (l == 0) throw std::invalid_argument("contraction bound needs l >= 1");
  const BlockContinuants k = block_continuants(block);
  const BigInt den = k.q_m * (from_u64(l) + 1) + k.q_m1;
  return ExactScalar::rational(BigInt(1), den * den);
}

SuSolution solve_su(const DimensionProblem& problem, long double tolerance) {
  problem.validate();
  const BlockContinuants k = block_continuants(problem.block);
  return bisect(log_denominators(problem, k, problem.u), problem.u, tolerance);
}

HalfPowerSum half_power_sum(const DimensionProblem& problem, std::uint64_t exact_limit,
                            mpfr_prec_t precision) {
  problem.validate();
  const BlockContinuants k = block_continuants(problem.block);
  HalfPowerSum out;
  out.u = problem.u;
  const std::uint64_t exact_terms = std::min(problem.u, exact_limit);
  BigRat sum;
  for (std::uint64_t l = 1; l <= exact_terms; ++l) {
    sum += BigRat(BigInt(1), denominator(k, problem.b, problem.c, l));
  }
  sum.canonicalize();
  out.enclosure = Interval::from_rational(sum, precision);
  if (exact_terms == problem.u) {
    out.exact = sum;
    out.certainly_above_one = sum > 1;
    return out;
  }
  const Interval one = Interval::from_rational(BigRat(1), precision);
  for (std::uint64_t l = exact_terms + 1; l <= problem.u; ++l) {
    out.enclosure = out.enclosure +
                    one / Interval::from_rational(BigRat(denominator(k, problem.b, problem.c, l)), precision);
  }
  out.certainly_above_one = out.enclosure.certainly_gt(1.0);
  return out;
}

DivergenceCertificate divergence_certificate(const DimensionProblem& problem,
                                             std::uint64_t check_up_to) {
  problem.validate();
  const BlockContinuants k = block_continuants(problem.block);
  DivergenceCertificate out;
  out.constant = k.q_m * (from_u64(problem.b) + from_u64(problem.c) + 1) + k.q_m1;
  out.checked_up_to = check_up_to;
  out.harmonic_bound_holds = true;
  out.shifted_bound_holds = true;
  for (std::uint64_t l = 1; l <= check_up_to; ++l) {
    const BigInt L = denominator(k, problem.b, problem.c, l);
    if (L > out.constant * from_u64(l)) out.harmonic_bound_holds = false;
    const BigInt shifted =
        k.q_m * (from_u64(problem.b) * from_u64(l + 1) + from_u64(problem.c) + 1) + k.q_m1;
    if (L > shifted) out.shifted_bound_holds = false;
  }
  return out;
}

NestingCheck nesting_check(const DimensionProblem& problem) {
  problem.validate();
  const BlockContinuants k = block_continuants(problem.block);
  const Numerators p = block_numerators(problem.block);
  // [0; ā, t] for rational t >= 1.
  const auto cf = [&](const BigRat& t) {
    BigRat v = (BigRat(p.p_m) * t + BigRat(p.p_m1)) / (BigRat(k.q_m) * t + BigRat(k.q_m1));
    v.canonicalize();
    return v;
  };
  const std::uint64_t n_min = problem.b + problem.c;
  const std::uint64_t n_max = problem.b * problem.u + problem.c;
  BigRat e_lo = cf(BigRat(from_u64(n_min)));
  BigRat e_hi = cf(BigRat(from_u64(n_max + 1)));
  if (e_hi < e_lo) std::swap(e_lo, e_hi);

  std::vector<std::pair<BigRat, BigRat>> images;
  NestingCheck out;
  out.u = problem.u;
  out.nested = true;
  for (std::uint64_t l = 1; l <= problem.u; ++l) {
    const BigRat n(from_u64(problem.b * l + problem.c));
    BigRat lo = cf(n + e_lo);
    BigRat hi = cf(n + e_hi);
    if (hi < lo) std::swap(lo, hi);
    if (lo < e_lo || hi > e_hi) out.nested = false;
    images.emplace_back(lo, hi);
  }
  std::sort(images.begin(), images.end());
  out.disjoint = true;
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (!(images[i - 1].second < images[i].first)) out.disjoint = false;
  }
  return out;
}

DimensionCertificate dimension_certificate(const std::vector<std::uint64_t>& block,
                                           std::uint64_t b, std::uint64_t c,
                                           const DimensionOptions& opts) {
  DimensionProblem problem{block, b, c, 2};
  problem.validate();
  if (opts.budget_u < 2) throw std::invalid_argument("dimension budget must allow u >= 2");

  DimensionCertificate out;
  out.precision = opts.precision;
  out.block = block;
  out.b = b;
  out.c = c;
  out.continuants = block_continuants(block);
  const BlockContinuants& k = out.continuants;

  // Σ_{l<=u} 1/L_l <= 1/L_1 + log(L_u/L_1)/(q_m b), so the sum cannot pass 1
  // before log L_u reaches log L_1 + q_m b (1 − 1/L_1).
  const long double L1 = static_cast<long double>(denominator(k, b, c, 1).get_d());
  const long double qb = static_cast<long double>(k.q_m.get_d()) * static_cast<long double>(b);
  out.projected_log10_u =
      static_cast<double>((std::log(L1) + qb * (1.0L - 1.0L / L1) - std::log(qb)) / std::log(10.0L));

  out.route = "divergence";
  out.u_used = opts.budget_u;
  if (out.projected_log10_u <= std::log10(static_cast<double>(opts.budget_u))) {
    for (std::uint64_t u = 2; u <= opts.budget_u; u *= 2) {
      problem.u = u;
      HalfPowerSum sum = half_power_sum(problem, opts.exact_limit, opts.precision);
      if (sum.certainly_above_one) {
        out.route = "direct";
        out.u_used = u;
        out.partial_sum = std::move(sum);
        break;
      }
    }
  }
  problem.u = out.u_used;
  if (out.route == "divergence") out.partial_sum = half_power_sum(problem, opts.exact_limit, opts.precision);

  const std::vector<long double> logs = log_denominators(problem, k, out.u_used);
  out.achieved = bisect(logs, out.u_used, opts.tolerance);
  for (std::uint64_t u = 2; u < out.u_used; u *= 2) {
    out.s_by_u.emplace_back(u, bisect(logs, u, opts.tolerance).s);
  }
  out.s_by_u.emplace_back(out.u_used, out.achieved.s);
  out.s_monotone = true;
  for (std::size_t i = 1; i < out.s_by_u.size(); ++i) {
    // Roots are only known to the bisection tolerance.
    if (out.s_by_u[i].second < out.s_by_u[i - 1].second - opts.tolerance) out.s_monotone = false;
  }

  out.divergence =
      divergence_certificate(problem, std::min(out.u_used, opts.termwise_check_limit));
  problem.u = std::min(out.u_used, opts.nesting_u);
  out.nesting = nesting_check(problem);
  out.above_half_certified =
      out.route == "direct" ? out.partial_sum.certainly_above_one : out.divergence.valid();
  return out;
}

}  // namespace ergodir
