#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toda/exact_scalar.hpp"
#include "toda/rational.hpp"

namespace toda {

// Exponent pair (a, b) of z^a zbar^b.
using ExponentPair = std::pair<Rational, Rational>;

struct Monomial {
  ExactScalar coeff;
  Rational exp_z;
  Rational exp_zbar;
};

// Finite sum of monomials c z^a zbar^b with rational exponents and Gaussian
// rational coefficients. Terms are kept in lexicographic (exp_z, exp_zbar)
// order with zero coefficients removed, so equality is structural.
class ZExpr {
 public:
  using TermMap = std::map<ExponentPair, ExactScalar>;

  ZExpr() = default;
  ZExpr(ExactScalar constant);  // NOLINT(google-explicit-constructor)
  ZExpr(long constant) : ZExpr(ExactScalar(constant)) {}  // NOLINT

  static ZExpr monomial(ExactScalar coeff, Rational exp_z, Rational exp_zbar = 0);
  // z^a
  static ZExpr z_pow(Rational a) { return monomial(ExactScalar(1), std::move(a)); }
  // zbar^b
  static ZExpr zbar_pow(Rational b) { return monomial(ExactScalar(1), 0, std::move(b)); }

  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // True when zero or a single term with both exponents zero.
  bool is_constant() const;
  // Coefficient of z^0 zbar^0.
  ExactScalar constant_term() const;
  // True when every term has exp_zbar == 0.
  bool is_holomorphic() const;
  std::vector<Monomial> monomials() const;
  // Precondition: is_monomial().
  Monomial single_term() const;

  ZExpr& operator+=(const ZExpr& o);
  ZExpr& operator-=(const ZExpr& o);
  ZExpr& operator*=(const ZExpr& o);
  ZExpr& operator*=(const ExactScalar& c);

  friend ZExpr operator+(ZExpr a, const ZExpr& b) { return a += b; }
  friend ZExpr operator-(ZExpr a, const ZExpr& b) { return a -= b; }
  friend ZExpr operator*(const ZExpr& a, const ZExpr& b);
  friend ZExpr operator*(ZExpr a, const ExactScalar& c) { return a *= c; }
  friend ZExpr operator*(const ExactScalar& c, ZExpr a) { return a *= c; }
  friend ZExpr operator-(const ZExpr& a);

  friend bool operator==(const ZExpr& a, const ZExpr& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ZExpr& a, const ZExpr& b) { return !(a == b); }

  // Exact quotient by a single-term divisor. Throws StructureError otherwise.
  ZExpr divided_by(const ZExpr& divisor) const;

  ZExpr conjugate() const;
  ZExpr diff_z() const;
  ZExpr diff_zbar() const;

  // Principal branch: z^a zbar^b = |z|^(a+b) exp(i (a-b) arg z), arg in (-pi, pi].
  // Throws OriginError at 0 with a negative exponent and BranchCutError on
  // (-inf, 0) when some exponent is not an integer.
  std::complex<double> eval(std::complex<double> point) const;

  // Smallest and largest a+b among the terms. Precondition: !is_zero().
  Rational min_total_degree() const;
  Rational max_total_degree() const;

  std::string to_string() const;

 private:
  void add_term(const ExponentPair& key, const ExactScalar& c);

  TermMap terms_;
};

ZExpr add(const ZExpr& a, const ZExpr& b);
ZExpr mul(const ZExpr& a, const ZExpr& b);
ZExpr conjugate(const ZExpr& a);
ZExpr diff_z(const ZExpr& a);
ZExpr diff_zbar(const ZExpr& a);
std::complex<double> eval(const ZExpr& a, std::complex<double> point);

// The operator d/dz + shift, with a holomorphic shift.
class FirstOrderOp {
 public:
  explicit FirstOrderOp(ZExpr shift);
  const ZExpr& shift() const { return shift_; }

 private:
  ZExpr shift_;
};

// sum_j coefficients[j] * d^(order - j)/dz^(order - j), coefficients[0] == 1.
class OrdinaryOp {
 public:
  explicit OrdinaryOp(std::vector<ZExpr> coefficients);
  int order() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<ZExpr>& coefficients() const { return coefficients_; }
  // Coefficient multiplying the p-th derivative.
  const ZExpr& coefficient_of_derivative(int p) const {
    return coefficients_[static_cast<size_t>(order() - p)];
  }

 private:
  std::vector<ZExpr> coefficients_;
};

// Expands (d + s_1)(d + s_2)...(d + s_m), leftmost factor applied last.
OrdinaryOp compose(const std::vector<FirstOrderOp>& ops);
ZExpr apply(const OrdinaryOp& op, const ZExpr& f);
ZExpr apply(const FirstOrderOp& op, const ZExpr& f);

std::ostream& operator<<(std::ostream& os, const ZExpr& e);

}  // namespace toda
