#include "toda/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "toda/errors.hpp"

namespace toda {

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Term{}, c);
}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.terms_.emplace(Term{{name, 1}}, Rational(1));
  return p;
}

void Poly::add_term(const Term& t, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      Poly::Term t = ta;
      for (const auto& [v, p] : tb) t[v] += p;
      out.add_term(t, ca * cb);
    }
  }
  return out;
}

ExactScalar Poly::evaluate(const std::map<std::string, ExactScalar>& values) const {
  ExactScalar sum;
  for (const auto& [t, c] : terms_) {
    ExactScalar term(c);
    for (const auto& [v, p] : t) {
      auto it = values.find(v);
      if (it == values.end()) throw ConfigError("no value for variable " + v);
      for (int i = 0; i < p; ++i) term *= it->second;
    }
    sum += term;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Term, Rational>> ordered(terms_.begin(), terms_.end());
  auto degree = [](const Term& t) {
    int d = 0;
    for (const auto& [v, p] : t) d += p;
    return d;
  };
  std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
    return degree(a.first) > degree(b.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (mag != 1 || t.empty()) factors.push_back(toda::to_string(mag));
    for (const auto& [v, p] : t) factors.push_back(p == 1 ? v : v + "^" + std::to_string(p));
    for (size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace toda
