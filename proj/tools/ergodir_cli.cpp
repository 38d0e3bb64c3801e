// ergodir command line: action, build, verify, dimension, simulate, billiard.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "ergodir/billiard.hpp"
#include "ergodir/builder_irrational.hpp"
#include "ergodir/builder_rational.hpp"
#include "ergodir/criterion.hpp"
#include "ergodir/dimension.hpp"
#include "ergodir/direction_spec.hpp"
#include "ergodir/flow_sim.hpp"
#include "ergodir/json_io.hpp"
#include "ergodir/torus_action.hpp"

using namespace ergodir;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "p/q", an integer, or a decimal such as 2.5e5, converted exactly.
BigRat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  BigRat out;
  if (slash != std::string::npos) {
    out = ExactScalar::parse(text).to_rational();
    return out;
  }
  std::string mant = text;
  long exp10 = 0;
  if (const auto e = mant.find_first_of("eE"); e != std::string::npos) {
    exp10 = std::stol(mant.substr(e + 1));
    mant = mant.substr(0, e);
  }
  if (const auto dot = mant.find('.'); dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  BigInt num;
  if (mant.empty() || num.set_str(mant, 10) != 0) throw UsageError("bad number '" + text + "'");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  out = exp10 >= 0 ? BigRat(num * scale) : BigRat(num, scale);
  out.canonicalize();
  return out;
}

std::vector<std::uint64_t> parse_uints(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoull(item));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

DirectionSpec build_spec(const std::string& lambda, const std::string& param, const std::string& nk,
                         const std::string& d_choices, std::uint64_t budget) {
  if (!param.empty()) {
    std::stringstream ss(param);
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c, ',')) {
      throw UsageError("--param needs r,s,q");
    }
    return direction_stream(RationalParam{std::stol(a), std::stol(b), std::stol(c)},
                            NkRule::parse(nk));
  }
  const ExactScalar l = ExactScalar::parse(lambda);
  if (l.is_rational()) {
    return direction_stream(RationalParam::from_lambda(l.to_rational()), NkRule::parse(nk));
  }
  return direction_stream_irrational(l, parse_uints(d_choices), budget);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified ergodic directions for periodic barrier billiards"};
  app.require_subcommand(1);

  // action
  auto* action = app.add_subcommand("action", "Trace a word from a torus point");
  std::string a_z, a_word, a_fixing;
  unsigned a_prec = 0;
  action->add_option("--z", a_z, "Start point x,y (or x;y for irrational coordinates)");
  action->add_option("--word", a_word, "Word such as 'h+:3 h-:1'");
  action->add_option("--fixing", a_fixing, "Use the fixing word of the rational barrier λ");
  action->add_option("--precision", a_prec, "Accepted for uniformity; tracing is exact");

  // build
  auto* build = app.add_subcommand("build", "Build a direction spec");
  std::string b_lambda, b_param, b_nk = "const:1", b_dchoices, b_out;
  std::uint64_t b_budget = 1'000'000;
  std::size_t b_blocks = 3, b_horizon = 0;
  unsigned b_prec = 256;
  build->add_option("--lambda", b_lambda, "Barrier λ: p/q or u,v,w,D");
  build->add_option("--param", b_param, "Rational parameter r,s,q");
  build->add_option("--nk", b_nk, "n_k rule: const:N, arith:b,c or list:...");
  build->add_option("--d-choices", b_dchoices, "Irrational case: rank of d per block, e.g. 1,2");
  build->add_option("--budget", b_budget, "Irrational search budget (steps per block)");
  build->add_option("--blocks", b_blocks, "Blocks to cache");
  build->add_option("--horizon", b_horizon, "Also verify this many checkpoints");
  build->add_option("--precision", b_prec, "Interval precision in bits for --horizon");
  build->add_option("-o,--output", b_out, "Output file (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Verify the criterion on a spec file");
  std::string v_file, v_out, v_override;
  std::size_t v_horizon = 3;
  unsigned v_prec = 256;
  std::optional<std::size_t> v_fault_word, v_fault_alpha, v_fault_area;
  verify_cmd->add_option("spec", v_file, "Spec JSON")->required();
  verify_cmd->add_option("--horizon", v_horizon, "Checkpoints to verify");
  verify_cmd->add_option("--precision", v_prec, "Interval precision in bits");
  verify_cmd->add_option("--fault-word", v_fault_word, "Corrupt the word at checkpoint n");
  verify_cmd->add_option("--fault-alpha", v_fault_alpha, "Shift α at checkpoint n");
  verify_cmd->add_option("--fault-area", v_fault_area, "Halve the strip area at checkpoint n");
  verify_cmd->add_option("--override", v_override, "Replace digit i by v: i=v");
  verify_cmd->add_option("-o,--output", v_out, "Report file (default stdout)");

  // dimension
  auto* dim = app.add_subcommand("dimension", "Dimension lower bound for a block");
  std::string d_block, d_prog = "1,0", d_out, d_lambda;
  std::uint64_t d_budget = 1'000'000;
  unsigned d_prec = 128;
  dim->add_option("--block", d_block, "Block digits, odd length >= 3");
  dim->add_option("--lambda", d_lambda, "Use the rational block for this λ");
  dim->add_option("--prog", d_prog, "Digit progression b,c (digits bl + c)");
  dim->add_option("--budget", d_budget, "Largest truncation u tried directly");
  dim->add_option("--precision", d_prec, "Interval precision in bits");
  dim->add_option("-o,--output", d_out, "Output file (default stdout)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Flow statistics on M(z) and its cover");
  std::string s_file, s_slope, s_z = "0;1/4", s_T = "1e6", s_out, s_summary, s_start;
  int s_grid = 8;
  long s_deck = 16;
  unsigned s_prec = 256;
  sim->add_option("spec", s_file, "Spec JSON (direction from its digits)");
  sim->add_option("--slope", s_slope, "Explicit slope instead of a spec");
  sim->add_option("--z", s_z, "Slit endpoint with --slope");
  sim->add_option("--T", s_T, "Total flow length");
  sim->add_option("--grid", s_grid, "Grid resolution G");
  sim->add_option("--deck", s_deck, "Deck window N");
  sim->add_option("--start", s_start, "Start point x,y on sheet 0");
  sim->add_option("--precision", s_prec, "Working precision in bits");
  sim->add_option("-o,--output", s_out, "CSV file (default stdout)");
  sim->add_option("--summary", s_summary, "Summary JSON file (default stderr)");

  // billiard
  auto* bill = app.add_subcommand("billiard", "Billiard and cover coordinates");
  std::string w_lambda = "1/4", w_x, w_y, w_v, w_time;
  double w_theta = 0;
  unsigned w_prec = 53;
  bill->add_option("--lambda", w_lambda, "Barrier height λ");
  bill->add_option("--x", w_x, "Position x")->required();
  bill->add_option("--y", w_y, "Position y in [0, 1/2]")->required();
  bill->add_option("--theta", w_theta, "Direction angle in degrees");
  bill->add_option("--v", w_v, "Rational velocity cx,cy (exact mode)");
  bill->add_option("--time", w_time, "Advance by this time on both models (needs --v)");
  bill->add_option("--precision", w_prec, "Accepted for uniformity; doubles or exact");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << error_json("usage", e.what());
    return kExitError;
  }

  try {
    if (*action) {
      GenWord word;
      std::optional<TorusPoint> z;
      if (!a_fixing.empty()) {
        const auto param = RationalParam::from_lambda(parse_rat(a_fixing));
        word = fixing_word(param);
        z = param.point();
      }
      if (!a_word.empty()) word = GenWord::parse(a_word);
      if (!a_z.empty()) z = TorusPoint::parse(a_z);
      if (!z) throw UsageError("action needs --z or --fixing");
      if (word.empty()) throw UsageError("action needs --word or --fixing");
      std::cout << action_to_json(trace_word(*z, word, false));
      return 0;
    }

    if (*build) {
      if (b_lambda.empty() == b_param.empty()) throw UsageError("give exactly one of --lambda, --param");
      if (b_blocks == 0) throw UsageError("--blocks must be positive");
      DirectionSpec spec = build_spec(b_lambda, b_param, b_nk, b_dchoices, b_budget);
      spec.ensure_blocks(std::max(b_blocks, b_horizon + 1));
      std::optional<VerificationReport> report;
      if (b_horizon > 0) {
        VerifyOptions opts;
        opts.precision = b_prec;
        report = verify(spec, b_horizon, opts);
      }
      write_out(b_out, spec_to_json(spec, b_blocks, report ? &*report : nullptr));
      return report && !report->overall ? kExitFailed : 0;
    }

    if (*verify_cmd) {
      const std::string text = read_file(v_file);
      DirectionSpec spec = spec_from_json(text);
      if (!v_override.empty()) {
        const auto eq = v_override.find('=');
        if (eq == std::string::npos) throw UsageError("--override needs i=v");
        spec.override_digit(std::stoull(v_override.substr(0, eq)),
                            std::stoull(v_override.substr(eq + 1)));
      }
      VerifyOptions opts;
      opts.precision = v_prec;
      opts.faults.corrupt_word_at = v_fault_word;
      opts.faults.shift_alpha_at = v_fault_alpha;
      opts.faults.shrink_area_at = v_fault_area;
      const auto report = verify(spec, v_horizon, opts);
      write_out(v_out, report_to_json(report));
      return report.overall ? 0 : kExitFailed;
    }

    if (*dim) {
      std::vector<std::uint64_t> block;
      if (!d_lambda.empty()) {
        const auto b = block_for(RationalParam::from_lambda(parse_rat(d_lambda)));
        block.assign(b.begin(), b.end());
      } else {
        block = parse_uints(d_block);
      }
      if (block.empty()) throw UsageError("dimension needs --block or --lambda");
      const auto prog = parse_uints(d_prog);
      if (prog.size() != 2) throw UsageError("--prog needs b,c");
      DimensionOptions opts;
      opts.budget_u = d_budget;
      opts.precision = d_prec;
      const auto cert = dimension_certificate(block, prog[0], prog[1], opts);
      write_out(d_out, dimension_to_json(cert));
      return cert.above_half_certified ? 0 : kExitFailed;
    }

    if (*sim) {
      if (s_file.empty() == s_slope.empty()) throw UsageError("give exactly one of a spec file, --slope");
      if (s_grid <= 0 || s_deck <= 0) throw UsageError("--grid and --deck must be positive");
      const BigRat T = parse_rat(s_T);
      if (T <= 0) throw UsageError("--T must be positive");
      SimulationOptions opts;
      opts.grid = s_grid;
      opts.deck_window = s_deck;
      opts.precision_bits = s_prec;
      if (!s_start.empty()) {
        const auto comma = s_start.find(',');
        if (comma == std::string::npos) throw UsageError("--start needs x,y");
        opts.start = std::make_pair(parse_rat(s_start.substr(0, comma)),
                                    parse_rat(s_start.substr(comma + 1)));
      }
      OrbitStats stats;
      if (!s_file.empty()) {
        stats = simulate_direction(spec_from_json(read_file(s_file)), T, opts);
      } else {
        const SurfaceModel model = build_surface(TorusPoint::parse(s_z));
        stats = simulate_slope(model, ExactScalar::parse(s_slope), T, opts);
      }
      write_out(s_out, stats_csv(stats));
      const std::string summary = stats_summary_json(stats);
      if (s_summary.empty()) {
        std::cerr << summary;
      } else {
        write_out(s_summary, summary);
      }
      return stats.singular ? kExitFailed : 0;
    }

    if (*bill) {
      std::ostringstream os;
      os.precision(17);
      if (w_v.empty()) {
        const double lam = parse_rat(w_lambda).get_d();
        const double th = w_theta * std::numbers::pi / 180.0;
        const BilliardState<double> s{parse_rat(w_x).get_d(), parse_rat(w_y).get_d(),
                                      std::cos(th), std::sin(th)};
        const auto p = billiard_to_cover(s, lam);
        const auto back = cover_to_billiard(p, lam);
        const bool same = back.x == s.x && back.y == s.y && back.cx == s.cx && back.cy == s.cy;
        os << "{\"mode\": \"double\", \"sheet\": " << p.state.sheet << ", \"x\": " << p.state.x
           << ", \"y\": " << p.state.y << ", \"deck\": " << p.state.deck << ", \"dx\": " << p.dx
           << ", \"dy\": " << p.dy << ", \"round_trip\": " << (same ? "true" : "false") << "}\n";
        std::cout << os.str();
        return same ? 0 : kExitFailed;
      }
      const BigRat lam = parse_rat(w_lambda);
      const auto comma = w_v.find(',');
      if (comma == std::string::npos) throw UsageError("--v needs cx,cy");
      const BilliardState<BigRat> s{parse_rat(w_x), parse_rat(w_y),
                                    parse_rat(w_v.substr(0, comma)),
                                    parse_rat(w_v.substr(comma + 1))};
      const auto p = billiard_to_cover(s, lam);
      os << "{\"mode\": \"exact\", \"sheet\": " << p.state.sheet << ", \"x\": \"" << p.state.x
         << "\", \"y\": \"" << p.state.y << "\", \"deck\": " << p.state.deck;
      bool ok = true;
      if (!w_time.empty()) {
        const BigRat t = parse_rat(w_time);
        const auto direct = billiard_advance(s, lam, t);
        const auto unfolded = cover_advance(s, lam, t);
        const bool agree =
            direct.singular == unfolded.singular &&
            (direct.singular || (direct.state.x == unfolded.state.x &&
                                 direct.state.y == unfolded.state.y &&
                                 direct.state.cx == unfolded.state.cx &&
                                 direct.state.cy == unfolded.state.cy));
        os << ", \"singular\": " << (direct.singular ? "true" : "false");
        if (!direct.singular) {
          os << ", \"end\": [\"" << direct.state.x << "\", \"" << direct.state.y << "\", \""
             << direct.state.cx << "\", \"" << direct.state.cy << "\"]";
        }
        os << ", \"models_agree\": " << (agree ? "true" : "false");
        ok = agree;
      }
      os << "}\n";
      std::cout << os.str();
      return ok ? 0 : kExitFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << error_json("usage", e.what());
    return kExitError;
  } catch (const FormatError& e) {
    std::cerr << error_json("format", e.what());
    return kExitError;
  } catch (const std::invalid_argument& e) {
    std::cerr << error_json("invalid_argument", e.what());
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << error_json("failure", e.what());
    return kExitError;
  }
  return kExitError;
}
