#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "toda/lie_data.hpp"
#include "toda/matrix_groups.hpp"
#include "toda/nu_basis.hpp"
#include "toda/toda_solutions.hpp"

namespace toda::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "toda-report/1";

Json rational(const Rational& q);
Json rationals(const RationalVector& v);
Json scalar(const ExactScalar& x);
Json matrix(const ExactMatrix& m);
Json zexpr(const ZExpr& e);
Json zmatrix(const ZMatrix& m);
Json algebra(const AlgebraType& a);
Json root(const Root& r);
Json coords(const UnipotentCoords& c);
Json slot(const SlotKey& key);
Json complex(std::complex<double> z);

// Rationals given as strings ("p/q", "0.25") or JSON integers.
Rational parse_rational_value(const Json& j);
RationalVector parse_rational_array(const Json& j);
// "1/2+3i/4" or {"re": ..., "im": ...}.
ExactScalar parse_scalar_value(const Json& j);
ZExpr parse_zexpr(const Json& j);

struct InputConfig {
  AlgebraType algebra;
  RationalVector gamma;
  std::optional<RationalVector> lambda;
  std::map<std::string, ExactScalar> coords;
};

// {"family":"B","rank":2,"gamma":["-1/2","1/4"],"lambda":["1","2"],"coords":{"c30":"1+i"}}
// Throws ConfigError on malformed input.
InputConfig parse_input_config(const Json& j);
std::map<std::string, ExactScalar> parse_coords(const Json& j);

Json config(const TodaConfig& c);
Json bundle(const SolutionBundle& b, bool all_minors);
Json symmetry(const SymmetryReport& r);
Json monodromy(const MonodromyReport& r);
Json characteristic(const CharacteristicData& d);
Json pde(const PdeReport& r);
Json integrability(const IntegrabilityReport& r);
Json a_case(const ACaseForm& f);
Json minor_identity(const MinorIdentityReport& r);

}  // namespace toda::json
