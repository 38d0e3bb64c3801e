#include "ergodir/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace ergodir {

namespace {

using Json = nlohmann::ordered_json;

std::string big(const BigInt& v) { return v.get_str(); }

Json matrix_json(const IntMat2& m) {
  return Json::array({Json::array({big(m.a), big(m.b)}), Json::array({big(m.c), big(m.d)})});
}

Json interval_json(const Interval& x) {
  return Json::array({x.lo_double(), x.hi_double()});
}

Json digits_json(const BlockDigits& d) {
  Json out = Json::array();
  for (auto v : d) out.push_back(v);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json provenance_json(const DirectionSpec& spec) {
  Json p;
  if (const auto* r = std::get_if<RationalProvenance>(&spec.provenance())) {
    p["kind"] = "rational";
    p["r"] = r->param.r;
    p["s"] = r->param.s;
    p["q"] = r->param.q;
    p["nk"] = r->nk.str();
  } else {
    const auto& i = std::get<IrrationalProvenance>(spec.provenance());
    p["kind"] = "irrational";
    p["lambda"] = i.lambda.str();
    p["d_choices"] = i.d_choices;
    p["budget"] = i.budget;
  }
  return p;
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string point_text(const TorusPoint& z) { return z.x().str() + ";" + z.y().str(); }

namespace {

Json checkpoint_json(const CheckpointRecord& c) {
  Json j;
  j["n"] = c.n;
  j["index"] = c.index;
  j["z"] = point_text(c.z_n);
  j["action"] = matrix_json(c.action.matrix());
  j["next_digit"] = c.next_digit;
  j["homology_fixes_beta"] = c.homology_fixes_beta;
  j["y_in_bounds"] = c.y_in_bounds;
  j["digit_inequality"] = c.digit_inequality;
  j["sigma_bounded"] = c.sigma_bounded;
  j["wedge_ok"] = c.wedge_ok;
  j["strip_matches_word"] = c.strip_matches_word;
  Json sigma;
  sigma["status"] = to_string(c.sigma.status);
  sigma["method"] = c.sigma.method;
  sigma["precision"] = c.sigma.precision_used;
  sigma["alpha_depth"] = c.sigma.alpha_depth;
  Json entries = Json::array();
  for (const auto& e : c.sigma.entries) entries.push_back(interval_json(e));
  sigma["entries"] = entries;
  j["sigma"] = sigma;
  Json wedge;
  wedge["status"] = to_string(c.wedge.status);
  wedge["method"] = c.wedge.method;
  wedge["ratio"] = interval_json(c.wedge.ratio);
  wedge["ratio_half_slack"] = interval_json(c.wedge.ratio_half_slack);
  wedge["implied_by_digit"] = c.wedge.implied_by_digit;
  j["wedge"] = wedge;
  Json strip;
  strip["k"] = c.strip.k;
  strip["holonomy"] = Json::array({big(c.strip.vx), big(c.strip.vy)});
  strip["area"] = c.strip.area.str();
  j["strip"] = strip;
  return j;
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["overall"] = r.overall;
  j["precision"] = r.precision;
  j["area_lower_bound"] = r.area_lower_bound ? Json(r.area_lower_bound->str()) : Json(nullptr);
  j["wedge_margin"] = r.wedge_margin;
  Json cps = Json::array();
  for (const auto& c : r.checkpoints) cps.push_back(checkpoint_json(c));
  j["checkpoints"] = cps;
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) { return dump(report_json(report)); }

std::string spec_to_json(const DirectionSpec& spec, std::size_t blocks,
                         const VerificationReport* report) {
  spec.ensure_blocks(blocks);
  Json j;
  j["format_version"] = kSpecFormatVersion;
  j["provenance"] = provenance_json(spec);
  j["z0"] = point_text(spec.z0());
  j["y_bounds"] = Json::array({spec.y_lo().str(), spec.y_hi().str()});
  Json bl = Json::array();
  for (std::size_t n = 1; n <= blocks; ++n) {
    const auto& b = spec.block(n);
    Json e;
    e["digits"] = digits_json(b.digits);
    e["z_out"] = point_text(b.z_out);
    bl.push_back(e);
  }
  j["blocks"] = bl;
  j["digit_prefix"] = spec.prefix(blocks * DirectionSpec::kPeriod);
  Json ov = Json::array();
  for (const auto& [i, v] : spec.overrides()) ov.push_back(Json::array({i, v}));
  j["overrides"] = ov;
  j["report"] = report ? report_json(*report) : Json(nullptr);
  return dump(j);
}

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
}

}  // namespace

std::size_t spec_cached_blocks(const std::string& text) {
  const Json j = parse_json(text);
  return field<Json>(j, "blocks").size();
}

DirectionSpec spec_from_json(const std::string& text) {
  const Json j = parse_json(text);
  if (field<int>(j, "format_version") != kSpecFormatVersion) {
    throw FormatError("unsupported format_version");
  }
  const Json p = field<Json>(j, "provenance");
  const auto kind = field<std::string>(p, "kind");
  std::optional<DirectionSpec> spec;
  try {
    if (kind == "rational") {
      RationalParam param{field<long>(p, "r"), field<long>(p, "s"), field<long>(p, "q")};
      spec.emplace(direction_stream(param, NkRule::parse(field<std::string>(p, "nk"))));
    } else if (kind == "irrational") {
      spec.emplace(direction_stream_irrational(
          ExactScalar::parse(field<std::string>(p, "lambda")),
          field<std::vector<std::uint64_t>>(p, "d_choices"), field<std::uint64_t>(p, "budget")));
    } else {
      throw FormatError("unknown provenance kind '" + kind + "'");
    }
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("cannot rebuild the stream: ") + e.what());
  }
  if (point_text(spec->z0()) != field<std::string>(j, "z0")) {
    throw FormatError("z0 does not match the provenance");
  }
  const auto bounds = field<std::vector<std::string>>(j, "y_bounds");
  if (bounds.size() != 2) throw FormatError("y_bounds needs two entries");
  spec->set_y_bounds(ExactScalar::parse(bounds[0]), ExactScalar::parse(bounds[1]));

  const Json blocks = field<Json>(j, "blocks");
  for (std::size_t n = 1; n <= blocks.size(); ++n) {
    const Json& e = blocks[n - 1];
    const auto& b = spec->block(n);
    const auto digits = field<std::vector<std::uint64_t>>(e, "digits");
    if (!std::equal(digits.begin(), digits.end(), b.digits.begin(), b.digits.end())) {
      throw FormatError("cached digits of block " + std::to_string(n) + " do not match");
    }
    if (field<std::string>(e, "z_out") != point_text(b.z_out)) {
      throw FormatError("cached end point of block " + std::to_string(n) + " does not match");
    }
  }
  for (const auto& ov : field<Json>(j, "overrides")) {
    spec->override_digit(ov.at(0).get<std::size_t>(), ov.at(1).get<std::uint64_t>());
  }
  const auto prefix = field<std::vector<std::uint64_t>>(j, "digit_prefix");
  if (prefix != spec->prefix(prefix.size())) throw FormatError("cached digit prefix does not match");
  return std::move(*spec);
}

std::string action_to_json(const ActionTrace& t) {
  Json j;
  j["start"] = point_text(t.start);
  j["word"] = t.word.str();
  j["steps"] = t.word.length();
  j["end"] = point_text(t.end);
  j["raw_action"] = matrix_json(t.raw_action);
  j["action"] = matrix_json(t.action.matrix());
  j["fixes_beta"] = t.action.fixes_beta();
  j["is_identity"] = t.action.is_identity();
  j["precision"] = "exact";
  return dump(j);
}

std::string fixing_to_json(const RationalParam& param, const FixingCertificate& c) {
  Json j;
  j["param"] = Json{{"r", param.r}, {"s", param.s}, {"q", param.q}};
  j["block"] = block_for(param);
  j["word"] = fixing_word(param).str();
  j["certified_point"] = point_text(c.certified_point);
  j["fixes_point"] = c.fixes_point;
  j["action_is_identity"] = c.action_is_identity;
  j["action"] = matrix_json(c.action.matrix());
  j["h_minus_period"] = c.h_minus_period;
  j["h_minus_period_valid"] = c.h_minus_period_valid;
  j["ok"] = c.ok();
  return dump(j);
}

std::string irrational_block_to_json(const IrrationalBlockParams& b) {
  Json j;
  j["digits"] = digits_json(b.digits());
  j["a_prime"] = b.a_prime;
  j["b_prime"] = b.b_prime;
  j["eps1"] = b.eps1.str();
  j["eps2"] = b.eps2.str();
  j["derivation"] = Json{{"z2_outside_S", b.derivation.z2_outside_S},
                         {"z3_in_S", b.derivation.z3_in_S},
                         {"z5_outside_S", b.derivation.z5_outside_S},
                         {"z6_in_S", b.derivation.z6_in_S}};
  j["coordinates_irrational"] = b.coordinates_irrational;
  j["start"] = point_text(b.trace.start);
  j["z_out"] = point_text(b.z_out);
  j["action"] = matrix_json(b.trace.action.matrix());
  j["fixes_beta"] = b.trace.action.fixes_beta();
  j["steps_used"] = b.steps_used;
  j["certified"] = b.certified(BlockSearchOptions{});
  return dump(j);
}

std::string dimension_to_json(const DimensionCertificate& c) {
  Json j;
  j["block"] = c.block;
  j["b"] = c.b;
  j["c"] = c.c;
  j["q_m"] = big(c.continuants.q_m);
  j["q_m1"] = big(c.continuants.q_m1);
  j["route"] = c.route;
  j["projected_log10_u"] = c.projected_log10_u;
  j["u_used"] = c.u_used;
  Json ps;
  ps["u"] = c.partial_sum.u;
  ps["exact"] = c.partial_sum.exact ? Json(c.partial_sum.exact->get_str()) : Json(nullptr);
  ps["enclosure"] = interval_json(c.partial_sum.enclosure);
  ps["certainly_above_one"] = c.partial_sum.certainly_above_one;
  j["partial_sum"] = ps;
  j["s_u"] = static_cast<double>(c.achieved.s);
  j["s_bracket"] = Json::array({static_cast<double>(c.achieved.lo), static_cast<double>(c.achieved.hi)});
  j["s_residual"] = static_cast<double>(c.achieved.residual);
  Json sbu = Json::array();
  for (const auto& [u, s] : c.s_by_u) sbu.push_back(Json::array({u, static_cast<double>(s)}));
  j["s_by_u"] = sbu;
  j["s_monotone"] = c.s_monotone;
  j["divergence"] = Json{{"constant", big(c.divergence.constant)},
                         {"checked_up_to", c.divergence.checked_up_to},
                         {"harmonic_bound_holds", c.divergence.harmonic_bound_holds},
                         {"shifted_bound_holds", c.divergence.shifted_bound_holds},
                         {"valid", c.divergence.valid()}};
  j["nesting"] = Json{{"u", c.nesting.u}, {"nested", c.nesting.nested}, {"disjoint", c.nesting.disjoint}};
  j["above_half_certified"] = c.above_half_certified;
  j["precision"] = c.precision;
  return dump(j);
}

std::string surface_to_json(const SurfaceModel& m) {
  Json j;
  j["z"] = point_text(m.z);
  j["area"] = m.area.str();
  j["cone_angle_over_pi"] = m.cone_angle_over_pi;
  j["vertical_slit"] = m.vertical_slit;
  j["slit_length_sq"] = m.slit_length_sq.str();
  j["deck"] = Json{{"core_applicable", m.deck.core_applicable},
                   {"core_shift_sheet0", m.deck.core_shift_sheet0},
                   {"core_shift_sheet1", m.deck.core_shift_sheet1},
                   {"vertical_applicable", m.deck.vertical_applicable},
                   {"vertical_shift", m.deck.vertical_shift},
                   {"anti_cases", m.deck.anti_cases},
                   {"anti_invariant", m.deck.anti_invariant},
                   {"ok", m.deck.ok()}};
  return dump(j);
}

std::string stats_summary_json(const OrbitStats& s) {
  Json j;
  j["mode"] = s.mode;
  j["precision_bits"] = s.precision_bits;
  j["grid"] = s.grid;
  j["deck_window"] = s.deck_window;
  j["events"] = s.events;
  j["slit_crossings"] = s.slit_crossings;
  j["edge_crossings"] = s.edge_crossings;
  j["returns_to_zero"] = s.returns_to_zero;
  j["deck_time_outside"] = s.deck_time_outside;
  Json d = Json::array();
  for (const auto& x : s.discrepancy) {
    d.push_back(Json{{"time", x.time}, {"tv", x.tv}, {"max_deviation", x.max_deviation}});
  }
  j["discrepancy"] = d;
  j["elapsed"] = s.elapsed;
  j["length_exact"] = s.length_exact;
  j["length_error"] = s.length_error;
  j["min_slack"] = s.min_slack;
  j["error_bound"] = s.error_bound;
  j["singular"] = s.singular;
  j["final_sheet"] = s.final_sheet;
  j["final_deck"] = s.final_deck;
  return dump(j);
}

std::string error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}}.dump() + "\n";
}

}  // namespace ergodir
