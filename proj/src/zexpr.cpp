#include "toda/zexpr.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "toda/errors.hpp"

namespace toda {

ZExpr::ZExpr(ExactScalar constant) {
  if (!constant.is_zero()) terms_.emplace(ExponentPair{0, 0}, std::move(constant));
}

ZExpr ZExpr::monomial(ExactScalar coeff, Rational exp_z, Rational exp_zbar) {
  ZExpr out;
  exp_z.canonicalize();
  exp_zbar.canonicalize();
  if (!coeff.is_zero())
    out.terms_.emplace(ExponentPair{std::move(exp_z), std::move(exp_zbar)}, std::move(coeff));
  return out;
}

bool ZExpr::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& key = terms_.begin()->first;
  return sgn(key.first) == 0 && sgn(key.second) == 0;
}

ExactScalar ZExpr::constant_term() const {
  auto it = terms_.find(ExponentPair{0, 0});
  return it == terms_.end() ? ExactScalar() : it->second;
}

bool ZExpr::is_holomorphic() const {
  for (const auto& [key, c] : terms_)
    if (sgn(key.second) != 0) return false;
  return true;
}

std::vector<Monomial> ZExpr::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({c, key.first, key.second});
  return out;
}

Monomial ZExpr::single_term() const {
  if (!is_monomial()) throw StructureError("expression is not a single monomial: " + to_string());
  const auto& [key, c] = *terms_.begin();
  return {c, key.first, key.second};
}

void ZExpr::add_term(const ExponentPair& key, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ZExpr& ZExpr::operator+=(const ZExpr& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

ZExpr& ZExpr::operator-=(const ZExpr& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

ZExpr operator*(const ZExpr& a, const ZExpr& b) {
  ZExpr out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(ExponentPair{ka.first + kb.first, ka.second + kb.second}, ca * cb);
    }
  }
  return out;
}

ZExpr& ZExpr::operator*=(const ZExpr& o) {
  *this = *this * o;
  return *this;
}

ZExpr& ZExpr::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= c;
  return *this;
}

ZExpr operator-(const ZExpr& a) {
  ZExpr out = a;
  for (auto& [key, coeff] : out.terms_) coeff = -coeff;
  return out;
}

ZExpr ZExpr::divided_by(const ZExpr& divisor) const {
  if (!divisor.is_monomial())
    throw StructureError("exact division needs a single-term divisor, got " + divisor.to_string());
  Monomial d = divisor.single_term();
  ExactScalar inv = d.coeff.inverse();
  ZExpr out;
  for (const auto& [key, c] : terms_)
    out.terms_.emplace(ExponentPair{key.first - d.exp_z, key.second - d.exp_zbar}, c * inv);
  return out;
}

ZExpr ZExpr::conjugate() const {
  ZExpr out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(ExponentPair{key.second, key.first}, c.conj());
  return out;
}

ZExpr ZExpr::diff_z() const {
  ZExpr out;
  for (const auto& [key, c] : terms_) {
    if (sgn(key.first) == 0) continue;
    out.terms_.emplace(ExponentPair{key.first - 1, key.second}, c * ExactScalar(key.first));
  }
  return out;
}

ZExpr ZExpr::diff_zbar() const {
  ZExpr out;
  for (const auto& [key, c] : terms_) {
    if (sgn(key.second) == 0) continue;
    out.terms_.emplace(ExponentPair{key.first, key.second - 1}, c * ExactScalar(key.second));
  }
  return out;
}

std::complex<double> ZExpr::eval(std::complex<double> point) const {
  if (point == std::complex<double>(0.0, 0.0)) {
    std::complex<double> value = 0.0;
    for (const auto& [key, c] : terms_) {
      if (sgn(key.first) < 0 || sgn(key.second) < 0)
        throw OriginError("negative exponent evaluated at the origin");
      if (sgn(key.first) == 0 && sgn(key.second) == 0) value += c.to_complex();
    }
    return value;
  }
  if (point.imag() == 0.0 && point.real() < 0.0) {
    for (const auto& [key, c] : terms_)
      if (!is_integer(key.first) || !is_integer(key.second))
        throw BranchCutError("fractional exponent evaluated on the negative real axis");
  }
  const double log_r = std::log(std::abs(point));
  const double theta = std::arg(point);
  std::complex<double> value = 0.0;
  for (const auto& [key, c] : terms_) {
    const double total = to_double(Rational(key.first + key.second));
    const double twist = to_double(Rational(key.first - key.second));
    value += c.to_complex() * std::polar(std::exp(total * log_r), twist * theta);
  }
  return value;
}

Rational ZExpr::min_total_degree() const {
  if (terms_.empty()) throw StructureError("degree of the zero expression");
  Rational best = terms_.begin()->first.first + terms_.begin()->first.second;
  for (const auto& [key, c] : terms_) {
    Rational d = key.first + key.second;
    if (d < best) best = d;
  }
  return best;
}

Rational ZExpr::max_total_degree() const {
  if (terms_.empty()) throw StructureError("degree of the zero expression");
  Rational best = terms_.begin()->first.first + terms_.begin()->first.second;
  for (const auto& [key, c] : terms_) {
    Rational d = key.first + key.second;
    if (d > best) best = d;
  }
  return best;
}

namespace {

std::string power(const char* var, const Rational& e) {
  if (e == 1) return var;
  std::string s = toda::to_string(e);
  if (is_integer(e) && sgn(e) > 0) return std::string(var) + "^" + s;
  return std::string(var) + "^(" + s + ")";
}

}  // namespace

std::string ZExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> factors;
    bool unit = c.is_one();
    if (!unit || (sgn(key.first) == 0 && sgn(key.second) == 0)) {
      std::string cs = toda::to_string(c);
      factors.push_back(c.is_real() && cs.find('/') == std::string::npos ? cs : "(" + cs + ")");
    }
    if (sgn(key.first) != 0) factors.push_back(power("z", key.first));
    if (sgn(key.second) != 0) factors.push_back(power("zb", key.second));
    for (size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ZExpr& e) { return os << e.to_string(); }

ZExpr add(const ZExpr& a, const ZExpr& b) { return a + b; }
ZExpr mul(const ZExpr& a, const ZExpr& b) { return a * b; }
ZExpr conjugate(const ZExpr& a) { return a.conjugate(); }
ZExpr diff_z(const ZExpr& a) { return a.diff_z(); }
ZExpr diff_zbar(const ZExpr& a) { return a.diff_zbar(); }
std::complex<double> eval(const ZExpr& a, std::complex<double> point) { return a.eval(point); }

FirstOrderOp::FirstOrderOp(ZExpr shift) : shift_(std::move(shift)) {
  if (!shift_.is_holomorphic())
    throw StructureError("first-order operator shift must be holomorphic: " + shift_.to_string());
}

OrdinaryOp::OrdinaryOp(std::vector<ZExpr> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty() || coefficients_.front() != ZExpr(1))
    throw StructureError("ordinary operator must have leading coefficient 1");
}

OrdinaryOp compose(const std::vector<FirstOrderOp>& ops) {
  // by_power[p] multiplies d^p. Start from the identity and prepend factors
  // from the right: (d + s) o sum c_p d^p = sum (c_p' + s c_p) d^p + c_p d^(p+1).
  std::vector<ZExpr> by_power{ZExpr(1)};
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    std::vector<ZExpr> next(by_power.size() + 1);
    for (size_t p = 0; p < by_power.size(); ++p) {
      next[p] += by_power[p].diff_z();
      next[p] += it->shift() * by_power[p];
      next[p + 1] += by_power[p];
    }
    by_power = std::move(next);
  }
  std::vector<ZExpr> coefficients(by_power.rbegin(), by_power.rend());
  return OrdinaryOp(std::move(coefficients));
}

ZExpr apply(const OrdinaryOp& op, const ZExpr& f) {
  ZExpr out;
  ZExpr derivative = f;
  for (int p = 0; p <= op.order(); ++p) {
    out += op.coefficient_of_derivative(p) * derivative;
    derivative = derivative.diff_z();
  }
  return out;
}

ZExpr apply(const FirstOrderOp& op, const ZExpr& f) { return f.diff_z() + op.shift() * f; }

}  // namespace toda
