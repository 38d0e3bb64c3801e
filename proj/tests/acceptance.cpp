// One line per acceptance criterion: PASS/FAIL, name, runtime, details.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ergodir/billiard.hpp"
#include "ergodir/builder_irrational.hpp"
#include "ergodir/builder_rational.hpp"
#include "ergodir/criterion.hpp"
#include "ergodir/dimension.hpp"
#include "ergodir/flow_sim.hpp"
#include "ergodir/json_io.hpp"

using namespace ergodir;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

RationalParam lam(long p, long q) { return RationalParam::from_lambda(BigRat(p, q)); }

DirectionSpec quarter_stream() { return direction_stream(lam(1, 4), NkRule::constant(1)); }

std::string block_text(const Block& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

Outcome blocks() {
  const std::vector<std::pair<RationalParam, Block>> cases{
      {lam(1, 4), {5, 1, 1, 7, 1, 1, 2}},
      {lam(1, 6), {8, 1, 1, 11, 1, 1, 3}},
      {lam(1, 3), {7, 1, 3, 8, 1, 3, 1}}};
  Outcome out{true, ""};
  for (const auto& [p, want] : cases) {
    const Block got = block_for(p);
    out.pass = out.pass && got == want;
    out.detail += block_text(got) + " ";
  }
  return out;
}

Outcome fixing_sweep() {
  std::size_t total = 0, good = 0;
  for (long q = 2; q <= 50; ++q) {
    for (long r = -q + 1; r < q; ++r) {
      for (long s = -q + 1; s < q; ++s) {
        const RationalParam p{r, s, q};
        try {
          p.validate();
        } catch (const std::invalid_argument&) {
          continue;
        }
        ++total;
        const auto c = certify_fixing(p);
        if (c.fixes_point && c.action_is_identity) ++good;
      }
    }
  }
  return {total > 0 && good == total,
          std::to_string(good) + "/" + std::to_string(total) + " params certified"};
}

bool only_flipped(const CheckpointRecord& clean, const CheckpointRecord& bad,
                  const std::string& which) {
  const std::vector<std::pair<std::string, bool>> diffs{
      {"homology", clean.homology_fixes_beta != bad.homology_fixes_beta},
      {"y", clean.y_in_bounds != bad.y_in_bounds},
      {"digit", clean.digit_inequality != bad.digit_inequality},
      {"sigma", clean.sigma_bounded != bad.sigma_bounded},
      {"wedge", clean.wedge_ok != bad.wedge_ok},
      {"strip", clean.strip_matches_word != bad.strip_matches_word}};
  for (const auto& [name, d] : diffs) {
    if (d != (name == which)) return false;
  }
  return true;
}

Outcome criterion() {
  auto spec = quarter_stream();
  const auto report = verify(spec, 10);
  bool entries_ok = true;
  for (const auto& c : report.checkpoints) {
    for (const auto& e : c.sigma.entries) {
      entries_ok = entries_ok && e.certainly_ge(-1.0) && e.certainly_le(1.0);
    }
    entries_ok = entries_ok && c.next_digit == 5;
  }
  bool faults_ok = true;
  const std::size_t n = 3;
  const auto clean = verify(spec, n);
  for (int f = 0; f < 3; ++f) {
    VerifyOptions opts;
    std::string which;
    if (f == 0) opts.faults.corrupt_word_at = n, which = "homology";
    if (f == 1) opts.faults.shift_alpha_at = n, which = "sigma";
    if (f == 2) opts.faults.shrink_area_at = n, which = "wedge";
    const auto bad = verify(spec, n, opts);
    faults_ok = faults_ok && !bad.overall &&
                only_flipped(clean.checkpoints[n - 1], bad.checkpoints[n - 1], which) &&
                only_flipped(clean.checkpoints[0], bad.checkpoints[0], "");
  }
  auto mutated = quarter_stream();
  mutated.override_digit(9, 3);
  const auto dig = verify(mutated, 1);
  faults_ok = faults_ok && only_flipped(clean.checkpoints[0], dig.checkpoints[0], "digit");
  std::ostringstream d;
  d << "horizon 10 overall=" << report.overall << " sigma_in_[-1,1]=" << entries_ok
    << " wedge_margin=" << report.wedge_margin << " faults_isolated=" << faults_ok;
  return {report.overall && report.checkpoints.size() == 10 && entries_ok && faults_ok, d.str()};
}

Outcome irrational() {
  const ExactScalar lambda = ExactScalar::quadratic(0, 1, 4, 2);
  const BlockSearchOptions opts;
  TorusPoint z(ExactScalar(0L), lambda);
  bool ok = true;
  std::string digits;
  for (int n = 0; n < 3; ++n) {
    const auto b = find_block(z, opts);
    ok = ok && b.certified(opts) && b.a >= 6 && b.trace.action.fixes_beta() &&
         b.z_out.y() >= ExactScalar::rational(1, 6) && b.z_out.y() <= ExactScalar::rational(1, 3);
    digits += "(" + std::to_string(b.a) + "," + std::to_string(b.b) + "," + std::to_string(b.c) +
              "," + std::to_string(b.d) + ") ";
    z = b.z_out;
  }
  const auto s1 = direction_stream_irrational(lambda, {1, 1, 1});
  const auto s2 = direction_stream_irrational(lambda, {2, 1, 1});
  const bool distinct = s1.prefix(24) != s2.prefix(24);
  return {ok && distinct, digits + "distinct_d_streams=" + (distinct ? "yes" : "no")};
}

Outcome dimension() {
  const auto toy = dimension_certificate({1, 1, 1}, 1, 0);
  const auto quarter = dimension_certificate({5, 1, 1, 7, 1, 1, 2}, 1, 0);
  std::ostringstream d;
  d << "toy: u=" << toy.u_used << " s=" << static_cast<double>(toy.achieved.s)
    << "; B(1/4): route=" << quarter.route << " C=" << quarter.divergence.constant.get_str()
    << " s_u=" << static_cast<double>(quarter.achieved.s) << " at u=" << quarter.u_used
    << " monotone=" << quarter.s_monotone;
  const bool ok = toy.route == "direct" && toy.above_half_certified && toy.u_used <= 10'000 &&
                  toy.achieved.s > 0.5L && quarter.route == "divergence" &&
                  quarter.divergence.valid() && quarter.s_monotone &&
                  quarter.above_half_certified;
  return {ok, d.str()};
}

TorusPoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(2, 40);
  for (;;) {
    const long n = den(rng);
    std::uniform_int_distribution<long> num(-n, n - 1);
    const auto x = ExactScalar::rational(num(rng), 2 * n);
    const auto y = ExactScalar::rational(num(rng), 2 * n);
    if (!is_excluded_point(x, y)) return TorusPoint(x, y);
  }
}

GenWord random_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 6), first(0, 1);
  std::uniform_int_distribution<std::uint64_t> e(1, 9);
  std::vector<std::uint64_t> d(static_cast<std::size_t>(len(rng)));
  for (auto& x : d) x = e(rng);
  return GenWord::from_digits(d, first(rng) ? Generator::HPlus : Generator::HMinus);
}

Outcome homology() {
  const bool relations = check_relations().ok;
  std::mt19937_64 rng(2024);
  const IntMat2 th = mat::theta();
  std::size_t comp = 0, conj = 0, minus = 0, minus_cases = 0;
  const std::size_t trials = 1000;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto z = random_point(rng);
    const auto g = random_word(rng);
    const auto h = random_word(rng);
    GenWord gh = g;
    gh.append(h);
    const auto tg = trace_word(z, g, false);
    const auto th_ = trace_word(tg.end, h, false);
    const auto tgh = trace_word(z, gh, false);
    if (tgh.end == th_.end && tgh.action == HomologyAction(tg.raw_action * th_.raw_action)) ++comp;

    GenWord swapped;
    for (const auto& s : g.syllables()) swapped.append(other(s.gen), s.exponent);
    const auto tc = trace_word(involution_theta(z), swapped, false);
    if (tc.end == involution_theta(tg.end) && tc.action == HomologyAction(th * tg.raw_action * th))
      ++conj;

  }
  // The −id law only claims equality when the orbit of z stays inside E.
  while (minus_cases < trials) {
    const auto z = random_point(rng);
    const auto g = random_word(rng);
    const auto t = trace_word(z, g);
    bool inside = in_region_E(z);
    for (const auto& p : t.points) inside = inside && in_region_E(p);
    if (!inside) continue;
    ++minus_cases;
    const auto tm = trace_word(involution_minus_id(z), g, false);
    if (tm.end == involution_minus_id(t.end) && tm.action == t.action) ++minus;
  }
  std::ostringstream d;
  d << "relations=" << relations << " composition " << comp << "/" << trials << " theta " << conj
    << "/" << trials << " minus_id " << minus << "/" << trials;
  return {relations && comp == trials && conj == trials && minus == trials, d.str()};
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

Outcome simulator() {
  std::ostringstream d;
  const TorusPoint z0(ExactScalar(0L), ExactScalar::rational(1, 4));
  const auto model = build_surface(z0);
  const bool deck = model.deck.ok() && std::abs(model.deck.core_shift_sheet0) == 1 &&
                    model.deck.vertical_shift == 0;

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xs(-20, 20), ys(0, 0.5), ang(0, 2 * M_PI);
  int trips = 0, failures = 0;
  while (trips < 10000) {
    const double th = ang(rng);
    const BilliardState<double> s{xs(rng), ys(rng), std::cos(th), std::sin(th)};
    const auto b = cover_to_billiard(billiard_to_cover(s, 0.25), 0.25);
    ++trips;
    if (std::abs(b.x - s.x) > 1e-9 || std::abs(b.y - s.y) > 1e-12 ||
        std::abs(b.cx - s.cx) > 1e-12 || std::abs(b.cy - s.cy) > 1e-12)
      ++failures;
  }

  const auto spec = quarter_stream();
  const auto run = simulate_direction(spec, BigRat(1'000'000));
  std::vector<double> tv, mx;
  for (const auto& s : run.discrepancy) {
    tv.push_back(s.tv);
    mx.push_back(s.max_deviation);
  }
  const bool decays = !run.singular && strictly_decreasing(tv) && strictly_decreasing(mx);

  SimulationOptions opts;
  opts.start = std::make_pair(BigRat(-1, 2), BigRat(1, 10));
  const auto rat = simulate_slope(model, ExactScalar::rational(1, 2), BigRat(1'000'000), opts);
  const bool flat = rat.discrepancy.size() == 3 && rat.discrepancy[2].tv >= rat.discrepancy[0].tv;
  const bool bookkeeping = run.length_exact && rat.length_exact && rat.elapsed == "1000000";

  // Ensemble diagnostic: 20 starts along the left edge at T = 10⁵.
  int monotone = 0;
  for (int i = 1; i <= 20; ++i) {
    SimulationOptions o;
    o.start = std::make_pair(BigRat(-1, 2), BigRat(i, 43));
    const auto r = simulate_direction(spec, BigRat(100'000), o);
    std::vector<double> t;
    for (const auto& s : r.discrepancy) t.push_back(s.tv);
    if (!r.singular && strictly_decreasing(t)) ++monotone;
  }

  d << "deck=" << deck << " round_trip_failures=" << failures << "/" << trips
    << " bookkeeping=" << bookkeeping << " returns=" << run.returns_to_zero << " tv=";
  for (double v : tv) d << v << " ";
  d << "max=";
  for (double v : mx) d << v << " ";
  d << "decreasing=" << decays << " rational_tv=" << rat.discrepancy.back().tv
    << " no_decay=" << flat << " ensemble_monotone=" << monotone << "/20";
  return {deck && failures == 0 && bookkeeping && decays && flat && run.returns_to_zero >= 10,
          d.str()};
}

std::vector<std::string> artifacts() {
  const auto spec = quarter_stream();
  std::vector<std::string> out;
  out.push_back(spec_to_json(spec, 3));
  const auto report = verify(spec_from_json(out.back()), 3);
  out.push_back(report_to_json(report));
  out.push_back(spec_to_json(direction_stream_irrational(ExactScalar::quadratic(0, 1, 4, 2)), 2));
  out.push_back(dimension_to_json(dimension_certificate({1, 1, 1}, 1, 0)));
  const auto run = simulate_direction(spec, BigRat(10'000));
  out.push_back(stats_csv(run));
  out.push_back(stats_summary_json(run));
  return out;
}

Outcome determinism() {
  const auto a = artifacts();
  const auto b = artifacts();
  std::size_t same = 0;
  for (std::size_t i = 0; i < a.size(); ++i) same += a[i] == b[i];
  return {same == a.size(),
          std::to_string(same) + "/" + std::to_string(a.size()) + " artifacts byte-identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"block reproduction", blocks},
      {"fixing-element certification q<=50", fixing_sweep},
      {"criterion verification lambda=1/4", criterion},
      {"irrational construction lambda=sqrt2/4", irrational},
      {"dimension bound", dimension},
      {"homology calculus consistency", homology},
      {"simulator validation", simulator},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %d %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
