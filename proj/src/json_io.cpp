#include "toda/json_io.hpp"

#include "toda/errors.hpp"

namespace toda::json {

Json rational(const Rational& q) { return to_string(q); }

Json rationals(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational(q));
  return out;
}

Json scalar(const ExactScalar& x) { return Json{{"re", rational(x.re())}, {"im", rational(x.im())}}; }

Json matrix(const ExactMatrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json zexpr(const ZExpr& e) {
  Json out = Json::array();
  for (const auto& t : e.monomials())
    out.push_back(Json{{"coeff", scalar(t.coeff)}, {"z", rational(t.exp_z)}, {"zbar", rational(t.exp_zbar)}});
  return out;
}

Json zmatrix(const ZMatrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(zexpr(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json algebra(const AlgebraType& a) {
  return Json{{"family", std::string(1, family_letter(a.family))}, {"rank", a.rank}};
}

Json root(const Root& r) {
  Json out = Json::array();
  for (int m : r) out.push_back(m);
  return out;
}

Json coords(const UnipotentCoords& c) {
  Json out = Json::object();
  for (const auto& [key, value] : c) out[slot_name(key.first, key.second)] = to_string(value);
  return out;
}

Json slot(const SlotKey& key) { return slot_name(key.first, key.second); }

Json complex(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Rational parse_rational_value(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ConfigError("expected a rational as a \"p/q\" string or an integer, got " + j.dump());
}

RationalVector parse_rational_array(const Json& j) {
  if (j.is_string()) return parse_rational_list(j.get<std::string>());
  if (!j.is_array()) throw ConfigError("expected an array of rationals, got " + j.dump());
  RationalVector out;
  for (const auto& x : j) out.push_back(parse_rational_value(x));
  return out;
}

ExactScalar parse_scalar_value(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return ExactScalar(j.get<long>());
  if (j.is_object()) {
    Rational re = j.contains("re") ? parse_rational_value(j.at("re")) : Rational(0);
    Rational im = j.contains("im") ? parse_rational_value(j.at("im")) : Rational(0);
    return {re, im};
  }
  throw ConfigError("expected a scalar, got " + j.dump());
}

ZExpr parse_zexpr(const Json& j) {
  if (!j.is_array()) throw ConfigError("expected an array of monomials");
  ZExpr out;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff")) throw ConfigError("malformed monomial " + t.dump());
    out += ZExpr::monomial(parse_scalar_value(t.at("coeff")), t.contains("z") ? parse_rational_value(t.at("z")) : 0,
                           t.contains("zbar") ? parse_rational_value(t.at("zbar")) : 0);
  }
  return out;
}

std::map<std::string, ExactScalar> parse_coords(const Json& j) {
  if (!j.is_object()) throw ConfigError("coords must be an object like {\"c10\": \"1/2\"}");
  std::map<std::string, ExactScalar> out;
  for (const auto& [name, value] : j.items()) out[name] = parse_scalar_value(value);
  return out;
}

InputConfig parse_input_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  InputConfig in;
  try {
    if (!j.contains("family") || !j.contains("rank")) throw ConfigError("configuration needs family and rank");
    in.algebra.family = parse_family(j.at("family").get<std::string>());
    in.algebra.rank = j.at("rank").get<int>();
    in.algebra.validate();
    in.gamma = j.contains("gamma") ? parse_rational_array(j.at("gamma"))
                                   : RationalVector(static_cast<size_t>(in.algebra.rank), Rational(0));
    if (j.contains("lambda")) in.lambda = parse_rational_array(j.at("lambda"));
    if (j.contains("coords")) in.coords = parse_coords(j.at("coords"));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
  return in;
}

Json config(const TodaConfig& c) {
  return Json{{"algebra", algebra(c.algebra())},
              {"k", c.k()},
              {"gamma", rationals(c.gamma())},
              {"alpha", rationals(c.alpha())},
              {"gamma_tilde", rationals(c.gamma_tilde())},
              {"mu_tilde", rationals(c.mu_tilde())},
              {"alpha_tilde", rationals(c.alpha_tilde())}};
}

Json bundle(const SolutionBundle& b, bool all_minors) {
  Json out;
  out["lambda"] = rationals(b.lambda);
  if (b.c.rows() > 0) out["C"] = matrix(b.c);
  out["H"] = matrix(b.h);
  Json nu = Json::array();
  for (const auto& e : b.nu.nu) nu.push_back(zexpr(e));
  out["nu"] = std::move(nu);
  out["F1"] = zexpr(b.F(1));
  out["F1_text"] = b.F(1).to_string();
  if (all_minors) {
    Json f = Json::array();
    for (const auto& e : b.f) f.push_back(zexpr(e));
    out["F"] = std::move(f);
  }
  Json reduced = Json::array();
  for (const auto& r : b.reduced)
    reduced.push_back(Json{{"index", r.index}, {"power", rational(r.power)}, {"log2_offset", rational(r.log2_offset)}});
  out["reduced"] = std::move(reduced);
  return out;
}

Json symmetry(const SymmetryReport& r) {
  Json out{{"name", "symmetry"}, {"applicable", r.applicable}, {"pass", r.pass}};
  if (r.first_failure) out["first_failure"] = *r.first_failure;
  return out;
}

Json monodromy(const MonodromyReport& r) {
  Json out{{"name", "monodromy"},
           {"pass", r.pass()},
           {"algebraic_pass", r.algebraic_pass},
           {"analytic_pass", r.analytic_pass},
           {"agree", r.agree()}};
  if (r.algebraic_witness) out["algebraic_witness"] = slot(*r.algebraic_witness);
  if (r.analytic_witness)
    out["analytic_witness"] = Json{{"z", rational(r.analytic_witness->first)}, {"zbar", rational(r.analytic_witness->second)}};
  return out;
}

Json characteristic(const CharacteristicData& d) {
  return Json{{"name", "characteristic"},
              {"pass", d.annihilates_powers && d.annihilates_nu && d.matches_partial_sums && d.strictly_increasing},
              {"w", rationals(d.w)},
              {"beta", rationals(d.beta)},
              {"annihilates_powers", d.annihilates_powers},
              {"annihilates_nu", d.annihilates_nu},
              {"matches_partial_sums", d.matches_partial_sums},
              {"strictly_increasing", d.strictly_increasing}};
}

Json pde(const PdeReport& r) {
  Json out{{"name", "pde"},
           {"pass", r.pass},
           {"exact_pass", r.exact_pass},
           {"points", r.points},
           {"tol", r.tol},
           {"max_residual", r.max_residual}};
  if (r.reduced_checked) {
    out["reduced_pass"] = r.reduced_pass;
    out["max_reduced_residual"] = r.max_reduced_residual;
  }
  if (r.worst) out["worst"] = Json{{"point", complex(r.worst->point)}, {"m", r.worst->m}};
  return out;
}

Json integrability(const IntegrabilityReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"m", row.m},
                        {"exponent_at_zero", rational(row.exponent_at_zero)},
                        {"expected_at_zero", rational(row.expected_at_zero)},
                        {"exponent_at_infinity", rational(row.exponent_at_infinity)},
                        {"pass", row.pass}});
  return Json{{"name", "integrability"}, {"pass", r.pass}, {"rows", std::move(rows)}};
}

Json a_case(const ACaseForm& f) {
  Json chat = Json::object();
  for (const auto& [key, value] : f.c_hat) chat[slot_name(key.first, key.second)] = to_string(value);
  Json p = Json::array();
  for (const auto& e : f.p) p.push_back(e.to_string());
  return Json{{"name", "a_case_form"},
              {"pass", f.product_matches && f.det_h_is_one && f.matches_bundle && f.forbidden_coordinates_zero},
              {"lambda_hat", rationals(f.lambda_hat)},
              {"lambda_hat_product", rational(f.lambda_hat_product)},
              {"expected_product", rational(f.expected_product)},
              {"product_matches", f.product_matches},
              {"det_h_is_one", f.det_h_is_one},
              {"matches_bundle", f.matches_bundle},
              {"forbidden_coordinates_zero", f.forbidden_coordinates_zero},
              {"c_hat", std::move(chat)},
              {"P", std::move(p)}};
}

Json minor_identity(const MinorIdentityReport& r) {
  Json out{{"name", "minor_identity"}, {"pass", r.holds}, {"exhaustive", r.exhaustive}, {"pairs_checked", r.pairs_checked}};
  if (r.witness) out["witness"] = Json{{"S", r.witness->first.to_string()}, {"T", r.witness->second.to_string()}};
  return out;
}

}  // namespace toda::json
