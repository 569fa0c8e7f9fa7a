#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "toda/cli.hpp"
#include "toda/errors.hpp"
#include "toda/json_io.hpp"

namespace py = pybind11;
using toda::json::Json;

namespace {

// Python values go through the json module so lists, strings and ints all work.
Json from_python(const py::object& obj) {
  if (obj.is_none()) return Json();
  const auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return Json::parse(text);
}

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

toda::json::InputConfig input(const std::string& family, int rank, const py::object& gamma, const py::object& lambda,
                              const py::object& coords) {
  Json j{{"family", family}, {"rank", rank}};
  if (!gamma.is_none()) j["gamma"] = from_python(gamma);
  if (!lambda.is_none()) j["lambda"] = from_python(lambda);
  if (!coords.is_none()) j["coords"] = from_python(coords);
  return toda::json::parse_input_config(j);
}

toda::SolutionParams params_of(const toda::json::InputConfig& in) {
  toda::SolutionParams p = toda::default_params(in.algebra);
  if (in.lambda) p.lambda = *in.lambda;
  p.coords = toda::make_coords(in.algebra, in.coords);
  return p;
}

}  // namespace

PYBIND11_MODULE(_toda, m) {
  m.doc() = "Toda systems of types A, B and C with singular sources";

  py::register_exception<toda::Error>(m, "TodaError", PyExc_RuntimeError);
  py::register_exception<toda::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<toda::ProductConditionViolation>(m, "ProductConditionViolation", PyExc_ValueError);

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = toda::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command line and return (exit_code, stdout, stderr).");

  m.def("cartan", [](const std::string& family, int rank) {
    const toda::AlgebraType a{toda::parse_family(family), rank};
    a.validate();
    const auto cd = toda::cartan(a);
    std::vector<std::vector<long>> rows(static_cast<size_t>(cd.a.rows()));
    for (int i = 0; i < cd.a.rows(); ++i)
      for (int j = 0; j < cd.a.cols(); ++j) rows[static_cast<size_t>(i)].push_back(cd.a(i, j));
    return rows;
  }, py::arg("family"), py::arg("rank"));

  m.def("positive_roots", [](const std::string& family, int rank) {
    const toda::AlgebraType a{toda::parse_family(family), rank};
    a.validate();
    return toda::positive_roots(a);
  }, py::arg("family"), py::arg("rank"));

  m.def("delta_gamma", [](const std::string& family, int rank, const py::object& gamma) {
    const auto in = input(family, rank, gamma, py::none(), py::none());
    std::vector<std::string> out;
    for (const auto& r : toda::delta_gamma(in.algebra, in.gamma)) out.push_back(toda::format_root(r));
    return out;
  }, py::arg("family"), py::arg("rank"), py::arg("gamma"), "Roots with integral value on gamma.");

  m.def("config", [](const std::string& family, int rank, const py::object& gamma) {
    const auto in = input(family, rank, gamma, py::none(), py::none());
    return to_python(toda::json::config(toda::TodaConfig(in.algebra, in.gamma)));
  }, py::arg("family"), py::arg("rank"), py::arg("gamma"));

  m.def("wronskian_determinant", [](const std::string& family, int rank, const py::object& gamma) {
    const auto in = input(family, rank, gamma, py::none(), py::none());
    const toda::TodaConfig config(in.algebra, in.gamma);
    return toda::determinant(toda::wronskian(toda::nu_vector(config))).to_string();
  }, py::arg("family"), py::arg("rank"), py::arg("gamma"));

  m.def("solve", [](const std::string& family, int rank, const py::object& gamma, const py::object& lambda,
                    const py::object& coords, bool all) {
    const auto in = input(family, rank, gamma, lambda, coords);
    const toda::TodaConfig config(in.algebra, in.gamma);
    return to_python(toda::json::bundle(toda::assemble(config, params_of(in)), all));
  }, py::arg("family"), py::arg("rank"), py::arg("gamma") = py::none(), py::arg("lambda_") = py::none(),
     py::arg("coords") = py::none(), py::arg("all") = false);

  m.def("verify", [](const std::string& family, int rank, const py::object& gamma, const py::object& lambda,
                     const py::object& coords, int points, double tol, uint64_t seed) {
    const auto in = input(family, rank, gamma, lambda, coords);
    const toda::TodaConfig config(in.algebra, in.gamma);
    const auto b = toda::assemble(config, params_of(in));
    Json checks = Json::array();
    bool ok = true;
    auto add = [&](Json j) {
      ok = ok && j["pass"].get<bool>();
      checks.push_back(std::move(j));
    };
    const auto sym = toda::verify_symmetry(b);
    if (sym.applicable) add(toda::json::symmetry(sym));
    add(toda::json::monodromy(toda::verify_monodromy(b)));
    add(toda::json::characteristic(toda::characteristic_data(config)));
    add(toda::json::pde(toda::verify_pde(b, toda::annulus_points(points, seed), tol)));
    add(toda::json::integrability(toda::verify_integrability(b)));
    return to_python(Json{{"pass", ok}, {"checks", checks}});
  }, py::arg("family"), py::arg("rank"), py::arg("gamma") = py::none(), py::arg("lambda_") = py::none(),
     py::arg("coords") = py::none(), py::arg("points") = 20, py::arg("tol") = 1e-9, py::arg("seed") = 0);

  m.def("minors", [](const std::string& family, int rank, uint64_t seed, int magnitude) {
    const toda::AlgebraType a{toda::parse_family(family), rank};
    a.validate();
    if (a.family == toda::Family::A) throw toda::ConfigError("minors needs family C or B");
    const auto g = toda::sample_group_element(a, seed, magnitude);
    return to_python(Json{{"in_group", toda::is_in_group(g)},
                          {"minor_identity", toda::json::minor_identity(toda::check_minor_identity(g.entries))},
                          {"classified", toda::to_string(toda::classify_by_minors(g.entries))}});
  }, py::arg("family"), py::arg("rank"), py::arg("seed") = 0, py::arg("magnitude") = 3);

  m.def("characteristic", [](const std::string& family, int rank, const py::object& gamma) {
    const auto in = input(family, rank, gamma, py::none(), py::none());
    return to_python(toda::json::characteristic(toda::characteristic_data(toda::TodaConfig(in.algebra, in.gamma))));
  }, py::arg("family"), py::arg("rank"), py::arg("gamma"));
}
