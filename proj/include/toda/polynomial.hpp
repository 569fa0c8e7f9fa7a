#pragma once

#include <map>
#include <string>
#include <vector>

#include "toda/exact_scalar.hpp"
#include "toda/rational.hpp"

namespace toda {

// Polynomial with rational coefficients in named commuting variables. Used to
// carry the unipotent constraint solution symbolically in the free
// coordinates.
class Poly {
 public:
  // variable name -> positive power
  using Term = std::map<std::string, int>;

  Poly() = default;
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);             // NOLINT(google-explicit-constructor)
  static Poly variable(const std::string& name);

  const std::map<Term, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rational& c) { return a * Poly(c); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Throws ConfigError if a variable has no value.
  ExactScalar evaluate(const std::map<std::string, ExactScalar>& values) const;

  // Terms ordered by total degree, then lexicographically: "c10*c41 - c40".
  std::string to_string() const;

 private:
  void add_term(const Term& t, const Rational& c);
  std::map<Term, Rational> terms_;
};

}  // namespace toda
