// Thin string-in/JSON-out layer over the C++ core; the Python package parses the JSON.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ergodir/billiard.hpp"
#include "ergodir/builder_irrational.hpp"
#include "ergodir/builder_rational.hpp"
#include "ergodir/criterion.hpp"
#include "ergodir/dimension.hpp"
#include "ergodir/flow_sim.hpp"
#include "ergodir/json_io.hpp"

namespace py = pybind11;
using namespace ergodir;

namespace {

DirectionSpec spec_for_lambda(const std::string& lambda, const std::string& nk,
                              const std::vector<std::uint64_t>& d_choices) {
  const ExactScalar l = ExactScalar::parse(lambda);
  if (l.is_rational()) {
    return direction_stream(RationalParam::from_lambda(l.to_rational()), NkRule::parse(nk));
  }
  return direction_stream_irrational(l, d_choices);
}

}  // namespace

PYBIND11_MODULE(_ergodir, m) {
  m.doc() = "Exact homology calculus, direction builders and flow simulator";

  py::register_exception<ArithmeticError>(m, "ArithmeticError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  m.def("trace", [](const std::string& z, const std::string& word) {
    return action_to_json(trace_word(TorusPoint::parse(z), GenWord::parse(word)));
  }, py::arg("z"), py::arg("word"));

  m.def("block", [](const std::string& lambda) {
    const auto b = block_for(RationalParam::from_lambda(ExactScalar::parse(lambda).to_rational()));
    return std::vector<std::uint64_t>(b.begin(), b.end());
  }, py::arg("lambda_"));

  m.def("certify_fixing", [](long r, long s, long q) {
    const RationalParam p{r, s, q};
    p.validate();
    return fixing_to_json(p, certify_fixing(p));
  }, py::arg("r"), py::arg("s"), py::arg("q"));

  m.def("build", [](const std::string& lambda, const std::string& nk, std::size_t blocks,
                    const std::vector<std::uint64_t>& d_choices) {
    const auto spec = spec_for_lambda(lambda, nk, d_choices);
    spec.ensure_blocks(blocks);
    return spec_to_json(spec, blocks);
  }, py::arg("lambda_"), py::arg("nk") = "const:1", py::arg("blocks") = 3,
     py::arg("d_choices") = std::vector<std::uint64_t>{});

  m.def("verify", [](const std::string& spec_json, std::size_t horizon, long precision) {
    VerifyOptions opts;
    opts.precision = precision;
    const auto spec = spec_from_json(spec_json);
    py::gil_scoped_release release;
    return report_to_json(verify(spec, horizon, opts));
  }, py::arg("spec_json"), py::arg("horizon") = 3, py::arg("precision") = 256);

  m.def("dimension", [](const std::vector<std::uint64_t>& block, std::uint64_t b, std::uint64_t c,
                        std::uint64_t budget) {
    DimensionOptions opts;
    opts.budget_u = budget;
    py::gil_scoped_release release;
    return dimension_to_json(dimension_certificate(block, b, c, opts));
  }, py::arg("block"), py::arg("b") = 1, py::arg("c") = 0, py::arg("budget") = 1'000'000);

  m.def("simulate", [](const std::string& spec_json, const std::string& total_time, int grid,
                       long deck) {
    SimulationOptions opts;
    opts.grid = grid;
    opts.deck_window = deck;
    const auto spec = spec_from_json(spec_json);
    const BigRat T = ExactScalar::parse(total_time).to_rational();
    py::gil_scoped_release release;
    const auto stats = simulate_direction(spec, T, opts);
    return std::make_pair(stats_summary_json(stats), stats_csv(stats));
  }, py::arg("spec_json"), py::arg("total_time") = "10000", py::arg("grid") = 8,
     py::arg("deck") = 16);

  m.def("surface", [](const std::string& z) { return surface_to_json(build_surface(TorusPoint::parse(z))); },
        py::arg("z"));

  m.def("billiard_round_trip", [](double lambda, double x, double y, double cx, double cy) {
    const BilliardState<double> s{x, y, cx, cy};
    const auto c = billiard_to_cover(s, lambda);
    const auto back = cover_to_billiard(c, lambda);
    return py::make_tuple(c.state.sheet, c.state.x, c.state.y, c.state.deck,
                          py::make_tuple(back.x, back.y, back.cx, back.cy));
  }, py::arg("lambda_"), py::arg("x"), py::arg("y"), py::arg("cx"), py::arg("cy"));
}
