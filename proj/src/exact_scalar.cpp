#include "toda/exact_scalar.hpp"

#include <cctype>

#include "toda/errors.hpp"

namespace toda {

ExactScalar ExactScalar::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero ExactScalar");
  Rational re = re_ / n;
  Rational im = -im_ / n;
  return {re, im};
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero ExactScalar");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

ExactScalar parse_scalar(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ConfigError("empty scalar");

  // Split into signed terms at '+'/'-' that do not start the string.
  ExactScalar out;
  size_t start = 0;
  while (start < s.size()) {
    size_t end = start + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(start, end - start);
    start = end;

    bool negative = false;
    if (term.front() == '+' || term.front() == '-') {
      negative = term.front() == '-';
      term.erase(0, 1);
    }
    auto ipos = term.find('i');
    bool imaginary = ipos != std::string::npos;
    if (imaginary) {
      term.erase(ipos, 1);
      if (term.find('i') != std::string::npos)
        throw ConfigError("malformed scalar '" + s + "'");
      // "i/4" -> "1/4", "3i" -> "3"
      if (term.empty() || term.front() == '/') term.insert(0, "1");
      if (term.find('*') != std::string::npos) term.erase(term.find('*'), 1);
    }
    Rational value = parse_rational(term);
    if (negative) value = -value;
    out += imaginary ? ExactScalar(Rational(0), value) : ExactScalar(value);
  }
  return out;
}

std::string to_string(const ExactScalar& x) {
  if (x.is_real()) return to_string(x.re());
  std::string im;
  if (x.im() == 1) {
    im = "i";
  } else if (x.im() == -1) {
    im = "-i";
  } else {
    im = to_string(x.im()) + "i";
  }
  if (sgn(x.re()) == 0) return im;
  return to_string(x.re()) + (im.front() == '-' ? "" : "+") + im;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
  return os << to_string(x);
}

}  // namespace toda
