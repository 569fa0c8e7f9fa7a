#include "toda/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "toda/errors.hpp"
#include "toda/json_io.hpp"
#include "toda/toda_solutions.hpp"

namespace toda::cli {

namespace {

using json::Json;

struct Options {
  std::string family;
  int rank = 0;
  std::string gamma;
  std::string lambda;
  std::string coords;
  std::string config;
  int points = 20;
  double tol = 1e-9;
  uint64_t seed = 0;
  int magnitude = 3;
  bool json = false;
  bool all = false;
  bool timing = false;
  std::string target;
};

struct Outcome {
  Json report;
  std::string text;
  int exit_code = kPass;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed JSON in " + what + ": " + e.what());
  }
}

json::InputConfig resolve(const Options& opt, bool need_gamma = true) {
  json::InputConfig in;
  bool have_algebra = false;
  if (!opt.config.empty()) {
    in = json::parse_input_config(parse_json_text(read_file(opt.config), opt.config));
    have_algebra = true;
  }
  if (!opt.family.empty()) {
    in.algebra.family = parse_family(opt.family);
    have_algebra = have_algebra || opt.rank > 0;
  }
  if (opt.rank > 0) in.algebra.rank = opt.rank;
  if (!have_algebra && (opt.family.empty() || opt.rank <= 0)) throw ConfigError("--family and --rank are required");
  in.algebra.validate();
  if (!opt.gamma.empty()) {
    in.gamma = parse_rational_list(opt.gamma);
  } else if (opt.config.empty()) {
    if (need_gamma) throw ConfigError("--gamma is required");
    in.gamma.assign(static_cast<size_t>(in.algebra.rank), Rational(0));
  }
  if (!opt.lambda.empty()) in.lambda = parse_rational_list(opt.lambda);
  if (!opt.coords.empty()) {
    const std::string text = opt.coords[0] == '@' ? read_file(opt.coords.substr(1)) : opt.coords;
    in.coords = json::parse_coords(parse_json_text(text, "--coords"));
  }
  return in;
}

std::string join(const RationalVector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string join_forms(const std::vector<RationalVector>& forms, const std::string& symbol) {
  std::string s = "(";
  for (size_t i = 0; i < forms.size(); ++i) s += (i ? ", " : "") + format_linear_form(forms[i], symbol);
  return s + ")";
}

std::string pass_word(bool ok) { return ok ? "pass" : "FAIL"; }

void print_matrix(std::ostream& os, const Matrix<long>& m) {
  for (int i = 0; i < m.rows(); ++i) {
    os << " ";
    for (int j = 0; j < m.cols(); ++j) os << std::setw(4) << m(i, j);
    os << "\n";
  }
}

void print_matrix(std::ostream& os, const Matrix<Rational>& m) {
  for (int i = 0; i < m.rows(); ++i) {
    os << " ";
    for (int j = 0; j < m.cols(); ++j) os << std::setw(6) << to_string(m(i, j));
    os << "\n";
  }
}

std::string power_of_two(const Rational& e) {
  if (sgn(e) == 0) return "";
  if (is_integer(e)) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, e.get_num().get_ui());
    return v.get_str() + " * ";
  }
  return "2^(" + to_string(e) + ") * ";
}

std::string reduction_line(const ReducedUnknown& r) {
  const std::string i = std::to_string(r.index);
  const Rational shift = r.log2_offset / r.power;
  std::string inner = "U~" + i;
  if (sgn(shift) != 0) inner += " - " + (shift == 1 ? std::string() : to_string(shift) + " ") + "ln 2";
  std::string lhs = r.power == 1 ? inner : "(" + inner + ")/" + to_string(1 / r.power);
  std::string exp = "e^-U" + i + " = " + power_of_two(r.log2_offset) + "F" + i;
  if (r.power != 1) exp += "^(" + to_string(r.power) + ")";
  return "U" + i + " = " + lhs + ",  " + exp;
}

Rational tau_value(const Root& root, const RationalVector& gamma) { return root_value(root, gamma); }

std::string slot_for_root(const AlgebraType& algebra, const Root& root) {
  for (const auto& s : free_slots(algebra))
    if (s.root == root) return s.name();
  return "-";
}

// --- commands ---------------------------------------------------------------

Outcome cmd_roots(const Options& opt) {
  const auto in = resolve(opt, false);
  const AlgebraType& a = in.algebra;
  const CartanData cd = cartan(a);
  Outcome o;
  std::ostringstream os;
  os << "Cartan matrix of " << a.name() << "\n";
  print_matrix(os, cd.a);
  os << "inverse\n";
  print_matrix(os, cd.a_inv);
  const auto roots = positive_roots(a);
  os << "positive roots (" << roots.size() << ")\n";
  Json rows = Json::array();
  for (const auto& r : roots) {
    const std::string s = slot_for_root(a, r);
    os << "  " << std::left << std::setw(26) << format_root(r) << s << "\n";
    rows.push_back(Json{{"root", json::root(r)}, {"text", format_root(r)}, {"coordinate", s}});
  }
  os << std::right;
  Json cart = Json::array();
  for (int i = 0; i < cd.a.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < cd.a.cols(); ++j) row.push_back(cd.a(i, j));
    cart.push_back(row);
  }
  Json inv = Json::array();
  for (int i = 0; i < cd.a_inv.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < cd.a_inv.cols(); ++j) row.push_back(json::rational(cd.a_inv(i, j)));
    inv.push_back(row);
  }
  o.report = Json{{"algebra", json::algebra(a)}, {"cartan", cart}, {"cartan_inverse", inv}, {"roots", rows}};
  o.text = os.str();
  return o;
}

Outcome cmd_ngamma(const Options& opt) {
  const auto in = resolve(opt);
  const TodaConfig config(in.algebra, in.gamma);
  const AlgebraType& a = in.algebra;
  const auto roots = positive_roots(a);
  const auto dg = delta_gamma(a, in.gamma);
  const std::set<Root> members(dg.begin(), dg.end());
  Outcome o;
  std::ostringstream os;
  os << a.name() << "  gamma = " << join(in.gamma) << "\n";
  os << "  " << std::left << std::setw(26) << "root" << std::setw(10) << "value" << std::setw(10) << "member"
     << "coordinate\n";
  Json rows = Json::array();
  for (const auto& r : roots) {
    const Rational v = tau_value(r, in.gamma);
    const bool member = members.count(r) > 0;
    os << "  " << std::setw(26) << format_root(r) << std::setw(10) << to_string(v) << std::setw(10)
       << (member ? "yes" : "no") << slot_for_root(a, r) << "\n";
    rows.push_back(Json{{"root", json::root(r)},
                        {"text", format_root(r)},
                        {"value", json::rational(v)},
                        {"member", member},
                        {"coordinate", slot_for_root(a, r)}});
  }
  os << std::right;
  os << "dim N = " << roots.size() << ", dim N_Gamma = " << dg.size() << "\n";
  const bool closed = is_closed_under_addition(dg, roots);
  os << "closed under addition: " << (closed ? "yes" : "no") << "\n";
  o.report = Json{{"config", json::config(config)},
                  {"rows", rows},
                  {"dim_n", roots.size()},
                  {"dim_n_gamma", dg.size()},
                  {"closed", closed}};
  o.exit_code = closed ? kPass : kCheckFailed;
  o.text = os.str();
  return o;
}

SolutionParams params_from(const json::InputConfig& in) {
  SolutionParams p = default_params(in.algebra);
  if (in.lambda) p.lambda = *in.lambda;
  p.coords = make_coords(in.algebra, in.coords);
  return p;
}

void describe_params(std::ostream& os, const SolutionBundle& b, const SolutionParams& p) {
  os << "lambda = " << join(b.lambda) << "\n";
  std::string nz;
  for (const auto& [key, v] : p.coords)
    if (!v.is_zero()) nz += (nz.empty() ? "" : ", ") + slot_name(key.first, key.second) + " = " + to_string(v);
  os << "nonzero coordinates: " << (nz.empty() ? "none" : nz) << "\n";
}

Outcome cmd_solve(const Options& opt) {
  const auto in = resolve(opt);
  const TodaConfig config(in.algebra, in.gamma);
  const SolutionParams params = params_from(in);
  Outcome o;
  std::ostringstream os;
  os << config.algebra().name() << "  gamma = " << join(config.gamma()) << "  alpha = " << join(config.alpha()) << "\n";
  try {
    restrict_to_ngamma(config.algebra(), params.coords, delta_gamma(config.algebra(), config.gamma()), true);
  } catch (const NonzeroForbiddenCoordinate& e) {
    o.report = Json{{"config", json::config(config)}, {"error", e.what()}};
    os << "not single valued: " << e.what() << "\n";
    o.text = os.str();
    o.exit_code = kCheckFailed;
    return o;
  }
  const SolutionBundle b = assemble(config, params);
  describe_params(os, b, params);
  const int last = opt.all ? config.k() - 1 : 1;
  for (int m = 1; m <= last; ++m) os << "F" << m << " = " << b.F(m).to_string() << "\n";
  for (const auto& r : b.reduced) os << reduction_line(r) << "\n";
  o.report = Json{{"config", json::config(config)}, {"solution", json::bundle(b, opt.all)}};
  o.text = os.str();
  return o;
}

Outcome cmd_verify(const Options& opt) {
  const auto in = resolve(opt);
  const TodaConfig config(in.algebra, in.gamma);
  const SolutionParams params = params_from(in);
  const SolutionBundle b = assemble(config, params);
  Outcome o;
  std::ostringstream os;
  os << config.algebra().name() << "  gamma = " << join(config.gamma()) << "\n";
  describe_params(os, b, params);
  Json checks = Json::array();
  bool ok = true;
  auto record = [&](const std::string& label, bool pass, Json j, const std::string& detail = "") {
    ok = ok && pass;
    os << "  " << std::left << std::setw(16) << label << std::right << pass_word(pass);
    if (!detail.empty()) os << "  " << detail;
    os << "\n";
    checks.push_back(std::move(j));
  };

  const SymmetryReport sym = verify_symmetry(b);
  if (sym.applicable)
    record("symmetry", sym.pass, json::symmetry(sym),
           sym.first_failure ? "F" + std::to_string(*sym.first_failure) + " differs" : "");
  const MonodromyReport mono = verify_monodromy(b);
  record("monodromy", mono.pass(), json::monodromy(mono),
         mono.algebraic_witness ? "witness " + slot_name(mono.algebraic_witness->first, mono.algebraic_witness->second)
                                : "");
  const CharacteristicData ch = characteristic_data(config);
  const bool ch_ok = ch.annihilates_powers && ch.annihilates_nu && ch.matches_partial_sums && ch.strictly_increasing;
  record("w-symmetry", ch_ok, json::characteristic(ch));
  const PdeReport pde = verify_pde(b, annulus_points(opt.points, opt.seed), opt.tol);
  std::ostringstream pd;
  pd << opt.points << " points, max relative residual " << std::setprecision(3) << pde.max_residual;
  record("pde", pde.pass, json::pde(pde), pd.str());
  const IntegrabilityReport integ = verify_integrability(b);
  record("integrability", integ.pass, json::integrability(integ));
  if (config.family() == Family::A) {
    const ACaseForm form = a_case_form(config, params);
    record("a-case form",
           form.product_matches && form.det_h_is_one && form.matches_bundle && form.forbidden_coordinates_zero,
           json::a_case(form));
  }
  o.report = Json{{"config", json::config(config)},
                  {"params", Json{{"lambda", json::rationals(b.lambda)}, {"coords", json::coords(params.coords)}}},
                  {"checks", checks}};
  o.exit_code = ok ? kPass : kCheckFailed;
  o.text = os.str();
  return o;
}

Outcome cmd_minors(const Options& opt) {
  const auto in = resolve(opt, false);
  if (in.algebra.family == Family::A) throw ConfigError("minors needs family C or B");
  const GroupElement g = sample_group_element(in.algebra, opt.seed, opt.magnitude);
  const bool member = is_in_group(g);
  const MinorIdentityReport rep = check_minor_identity(g.entries, 7, opt.seed);
  const FormTag tag = classify_by_minors(g.entries);
  Outcome o;
  std::ostringstream os;
  os << "sample in " << to_string(natural_group(g.dim())) << "(" << g.dim() << "), seed " << opt.seed
     << ", magnitude " << opt.magnitude << "\n";
  for (int i = 0; i < g.dim(); ++i) {
    os << " ";
    for (int j = 0; j < g.dim(); ++j) os << " " << to_string(g.entries(i, j));
    os << "\n";
  }
  os << "  in group        " << pass_word(member) << "\n";
  os << "  minor identity  " << pass_word(rep.holds) << "  " << rep.pairs_checked << " pairs"
     << (rep.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
  os << "  classified as   " << to_string(tag) << "\n";
  o.report = Json{{"algebra", json::algebra(in.algebra)},
                  {"seed", opt.seed},
                  {"magnitude", opt.magnitude},
                  {"element", json::matrix(g.entries)},
                  {"in_group", member},
                  {"minor_identity", json::minor_identity(rep)},
                  {"classified", to_string(tag)}};
  o.exit_code = member && rep.holds && tag == natural_group(g.dim()) ? kPass : kCheckFailed;
  o.text = os.str();
  return o;
}

Outcome cmd_wsym(const Options& opt) {
  const auto in = resolve(opt);
  const TodaConfig config(in.algebra, in.gamma);
  const CharacteristicData ch = characteristic_data(config);
  Outcome o;
  std::ostringstream os;
  os << config.algebra().name() << "  gamma = " << join(config.gamma()) << "\n";
  os << "alpha~ = " << join(config.alpha_tilde()) << "\n";
  for (size_t j = 0; j < ch.w.size(); ++j)
    os << "  W" << j + 1 << " = " << to_string(ch.w[j]) << " / z^" << j + 2 << "\n";
  os << "beta = " << join(ch.beta) << "\n";
  os << "  annihilates z^beta   " << pass_word(ch.annihilates_powers) << "\n";
  os << "  annihilates nu       " << pass_word(ch.annihilates_nu) << "\n";
  os << "  partial sums of mu   " << pass_word(ch.matches_partial_sums) << "\n";
  os << "  strictly increasing  " << pass_word(ch.strictly_increasing) << "\n";
  const bool ok = ch.annihilates_powers && ch.annihilates_nu && ch.matches_partial_sums && ch.strictly_increasing;
  o.report = Json{{"config", json::config(config)}, {"characteristic", json::characteristic(ch)}};
  o.exit_code = ok ? kPass : kCheckFailed;
  o.text = os.str();
  return o;
}

struct DemoSetup {
  AlgebraType algebra;
  RationalVector gamma;
  RationalVector lambda;
  std::map<std::string, ExactScalar> coords;
};

Outcome cmd_demo(const Options& opt) {
  DemoSetup d;
  if (opt.target == "c3") {
    d = {{Family::C, 3}, {Rational(-1, 2), Rational(1, 4), Rational(1)}, {Rational(2), Rational(1, 3), Rational(1)},
         {{"c32", ExactScalar(1)}, {"c40", ExactScalar(Rational(1, 2), Rational(-1))}}};
  } else if (opt.target == "b2") {
    d = {{Family::B, 2}, {Rational(-1, 2), Rational(1, 4)}, {Rational(1), Rational(2)}, {{"c30", ExactScalar(1, 1)}}};
  } else {
    throw ConfigError("demo target must be c3 or b2");
  }
  const AlgebraType& a = d.algebra;
  const int k = a.k();
  const CartanData cd = cartan(a);
  Outcome o;
  std::ostringstream os;
  os << "Toda system of type " << a.name() << " (k = " << k << ")\n\n";
  os << "Cartan matrix\n";
  print_matrix(os, cd.a);
  os << "inverse Cartan matrix\n";
  print_matrix(os, cd.a_inv);

  os << "\ndependent entries of C from C^t J" << k << " C = J" << k << "\n";
  const Matrix<Poly> sym = symbolic_unipotent(a);
  const auto slots = coordinate_map(a);
  Json formulas = Json::object();
  for (const auto& s : slots) {
    if (s.free) continue;
    os << "  " << s.name() << " = " << sym(s.row, s.col).to_string() << "\n";
    formulas[s.name()] = sym(s.row, s.col).to_string();
  }

  const auto forms_alpha = monodromy_forms_in_alpha(a);
  const auto forms_gamma = monodromy_forms_in_gamma(a);
  os << "\nexponents of g (diagonal over 2 pi i)\n";
  os << "  in alpha: " << join_forms(forms_alpha, "alpha") << "\n";
  os << "  in gamma: " << join_forms(forms_gamma, "gamma") << "\n";

  os << "\ncoordinates and roots\n";
  Json table = Json::array();
  for (const auto& r : positive_roots(a)) {
    os << "  " << std::left << std::setw(6) << slot_for_root(a, r) << format_root(r) << std::right << "\n";
    table.push_back(Json{{"coordinate", slot_for_root(a, r)}, {"root", json::root(r)}, {"text", format_root(r)}});
  }

  const TodaConfig config(a, d.gamma);
  os << "\nexample gamma = " << join(d.gamma) << "\n";
  os << "  alpha = " << join(config.alpha()) << "\n";
  const NuVector nu = nu_vector(config);
  os << "  nu = (";
  for (size_t i = 0; i < nu.nu.size(); ++i) os << (i ? ", " : "") << nu.nu[i].to_string();
  os << ")\n";
  const MonodromyElement g = monodromy_element(a, d.gamma);
  os << "  g exponents = " << join(g.exponents()) << "\n";
  const auto dg = delta_gamma(a, d.gamma);
  std::string members;
  std::string survivors;
  Json dg_json = Json::array();
  for (const auto& r : dg) {
    members += (members.empty() ? "" : ", ") + format_root(r);
    survivors += (survivors.empty() ? "" : ", ") + slot_for_root(a, r);
    dg_json.push_back(json::root(r));
  }
  os << "  Delta_Gamma = {" << members << "}\n";
  os << "  nonzero coordinates allowed: " << survivors << "\n";

  os << "\nreduction to A" << k - 1 << "\n";
  const auto reduced = reduce(config);
  Json red = Json::array();
  for (const auto& r : reduced) {
    os << "  " << reduction_line(r) << "\n";
    red.push_back(reduction_line(r));
  }
  if (a.family == Family::B) {
    RationalVector offsets;
    RationalVector last_column;
    for (const auto& r : reduced) offsets.push_back(r.log2_offset);
    for (int i = 0; i < a.rank; ++i) last_column.push_back(cd.a_inv(i, a.rank - 1));
    os << "  ln 2 coefficients " << join(offsets) << " = last column of the inverse Cartan matrix: "
       << (offsets == last_column ? "yes" : "no") << "\n";
  }

  SolutionParams params{d.lambda, make_coords(a, d.coords)};
  const SolutionBundle b = assemble(config, params);
  os << "\nsolution with lambda = " << join(d.lambda);
  for (const auto& [name, v] : d.coords) os << ", " << name << " = " << to_string(v);
  os << "\n";
  os << "  F1 = " << b.F(1).to_string() << "\n";
  const SymmetryReport symr = verify_symmetry(b);
  const MonodromyReport mono = verify_monodromy(b);
  const PdeReport pde = verify_pde(b, annulus_points(opt.points, opt.seed), opt.tol);
  const IntegrabilityReport integ = verify_integrability(b);
  std::ostringstream tol;
  tol << opt.tol;
  os << "  symmetry F_m = F_(k-m)  " << pass_word(symr.pass) << "\n";
  os << "  monodromy               " << pass_word(mono.pass()) << "\n";
  os << "  pde (" << opt.points << " points, tol " << tol.str() << ")  " << pass_word(pde.pass) << "\n";
  os << "  integrability           " << pass_word(integ.pass) << "\n";
  const bool ok = symr.pass && mono.pass() && pde.pass && integ.pass;

  o.report = Json{{"target", opt.target},
                  {"algebra", json::algebra(a)},
                  {"dependent_entries", formulas},
                  {"g_in_alpha", join_forms(forms_alpha, "alpha")},
                  {"g_in_gamma", join_forms(forms_gamma, "gamma")},
                  {"coordinate_roots", table},
                  {"config", json::config(config)},
                  {"g_exponents", json::rationals(g.exponents())},
                  {"delta_gamma", dg_json},
                  {"reduction", red},
                  {"solution", json::bundle(b, false)},
                  {"checks", Json::array({json::symmetry(symr), json::monodromy(mono), json::pde(pde),
                                          json::integrability(integ)})}};
  o.exit_code = ok ? kPass : kCheckFailed;
  o.text = os.str();
  return o;
}

void add_config_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--family", opt.family, "A, B or C");
  sub->add_option("--rank", opt.rank, "rank n >= 1");
  sub->add_option("--gamma", opt.gamma, "comma separated rationals, e.g. -1/2,1/4");
  sub->add_option("--config", opt.config, "JSON configuration file");
  sub->add_flag("--json", opt.json, "emit the JSON report");
  sub->add_flag("--timing", opt.timing, "print elapsed time to stderr");
}

void add_solution_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--lambda", opt.lambda, "comma separated positive rationals");
  sub->add_option("--coords", opt.coords, "JSON object of free coordinates, or @file");
}

void add_check_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--points", opt.points, "number of sample points")->check(CLI::Range(1, 100000));
  sub->add_option("--tol", opt.tol, "relative residual tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--seed", opt.seed, "seed for sample points");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Toda systems of types A, B and C with singular sources", "toda"};
  app.require_subcommand(1, 1);

  auto* solve = app.add_subcommand("solve", "assemble e^-U_m for given gamma, lambda and coordinates");
  add_config_flags(solve, opt);
  add_solution_flags(solve, opt);
  solve->add_flag("--all", opt.all, "print every F_m, not just F_1");

  auto* verify = app.add_subcommand("verify", "assemble a solution and run every check");
  add_config_flags(verify, opt);
  add_solution_flags(verify, opt);
  add_check_flags(verify, opt);

  auto* roots = app.add_subcommand("roots", "Cartan data and positive roots");
  add_config_flags(roots, opt);

  auto* ngamma = app.add_subcommand("ngamma", "roots with integral value on gamma");
  add_config_flags(ngamma, opt);

  auto* minors = app.add_subcommand("minors", "minor identities on a sampled group element");
  add_config_flags(minors, opt);
  minors->add_option("--seed", opt.seed, "sampler seed");
  minors->add_option("--magnitude", opt.magnitude, "bound on sampled numerators and denominators")
      ->check(CLI::Range(0, 1000));

  auto* wsym = app.add_subcommand("wsym", "characteristic operator and exponents");
  add_config_flags(wsym, opt);

  auto* demo = app.add_subcommand("demo", "worked examples");
  demo->add_option("target", opt.target, "c3 or b2")->required()->check(CLI::IsMember({"c3", "b2"}));
  demo->add_flag("--json", opt.json, "emit the JSON report");
  add_check_flags(demo, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::string command;
  try {
    if (*solve) {
      command = "solve";
      o = cmd_solve(opt);
    } else if (*verify) {
      command = "verify";
      o = cmd_verify(opt);
    } else if (*roots) {
      command = "roots";
      o = cmd_roots(opt);
    } else if (*ngamma) {
      command = "ngamma";
      o = cmd_ngamma(opt);
    } else if (*minors) {
      command = "minors";
      o = cmd_minors(opt);
    } else if (*wsym) {
      command = "wsym";
      o = cmd_wsym(opt);
    } else {
      command = "demo";
      o = cmd_demo(opt);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ProductConditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }

  if (opt.json) {
    Json report{{"schema", json::kSchema}, {"command", command}};
    for (auto& [key, value] : o.report.items()) report[key] = value;
    report["pass"] = o.exit_code == kPass;
    report["exit_code"] = o.exit_code;
    out << report.dump(2) << "\n";
  } else {
    out << o.text;
  }
  if (opt.timing) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    err << "elapsed " << ms << " ms\n";
  }
  return o.exit_code;
}

}  // namespace toda::cli
