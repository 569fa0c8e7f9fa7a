#include "toda/lie_data.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "toda/errors.hpp"

namespace toda {

int AlgebraType::k() const {
  switch (family) {
    case Family::A:
      return rank + 1;
    case Family::C:
      return 2 * rank;
    case Family::B:
      return 2 * rank + 1;
  }
  return 0;
}

std::string AlgebraType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

void AlgebraType::validate() const {
  if (rank < 1) throw ConfigError("rank must be at least 1, got " + std::to_string(rank));
}

char family_letter(Family f) {
  switch (f) {
    case Family::A:
      return 'A';
    case Family::B:
      return 'B';
    case Family::C:
      return 'C';
  }
  return '?';
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  throw ConfigError("unknown family '" + s + "' (expected A, B or C)");
}

std::string slot_name(int row, int col) {
  if (row < 10 && col < 10) return "c" + std::to_string(row) + std::to_string(col);
  return "c" + std::to_string(row) + "_" + std::to_string(col);
}

std::string CoordinateSlot::name() const { return slot_name(row, col); }

std::pair<int, int> parse_slot_name(const std::string& name) {
  if (name.size() < 3 || name[0] != 'c') throw ConfigError("bad coordinate name '" + name + "'");
  std::string body = name.substr(1);
  auto digits = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ConfigError("bad coordinate name '" + name + "'");
    return std::stoi(s);
  };
  if (auto sep = body.find_first_of("_,"); sep != std::string::npos)
    return {digits(body.substr(0, sep)), digits(body.substr(sep + 1))};
  if (body.size() != 2) throw ConfigError("ambiguous coordinate name '" + name + "', use c<i>_<j>");
  return {digits(body.substr(0, 1)), digits(body.substr(1, 1))};
}

CartanData cartan(const AlgebraType& algebra) {
  algebra.validate();
  const int n = algebra.rank;
  Matrix<long> a(n, n, 0);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 2;
    if (i > 0) a(i, i - 1) = -1;
    if (i + 1 < n) a(i, i + 1) = -1;
  }
  if (n >= 2) {
    if (algebra.family == Family::C) a(n - 1, n - 2) = -2;
    if (algebra.family == Family::B) a(n - 2, n - 1) = -2;
  }
  Matrix<Rational> ar = a.map([](long v) { return Rational(v); });
  return {a, inverse(ar)};
}

Matrix<Rational> inverse(const Matrix<Rational>& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = m.rows();
  Matrix<Rational> work = m;
  Matrix<Rational> inv = Matrix<Rational>::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && sgn(work(pivot, col)) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    Rational p = work(col, col);
    for (int j = 0; j < n; ++j) {
      work(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(work(r, col)) == 0) continue;
      Rational f = work(r, col);
      for (int j = 0; j < n; ++j) {
        work(r, j) -= f * work(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RationalVector alpha_from_gamma(const AlgebraType& algebra, const RationalVector& gamma) {
  if (static_cast<int>(gamma.size()) != algebra.rank)
    throw ConfigError("gamma has " + std::to_string(gamma.size()) + " entries, rank is " + std::to_string(algebra.rank));
  const auto data = cartan(algebra);
  RationalVector alpha(gamma.size(), Rational(0));
  for (int i = 0; i < algebra.rank; ++i)
    for (int j = 0; j < algebra.rank; ++j) alpha[i] += data.a_inv(i, j) * gamma[j];
  return alpha;
}

namespace {

// tau_from + ... + tau_to (1-based, inclusive) added into root.
void add_range(Root& root, int from, int to) {
  for (int m = from; m <= to; ++m) root[m - 1] += 1;
}

// L_a in the simple-root basis, doubled so that the C_n half-integers stay
// integral.
std::vector<int> doubled_L(const AlgebraType& algebra, int a) {
  const int n = algebra.rank;
  std::vector<int> v(n, 0);
  if (a > n) return v;  // L_{n+1} = 0 for B_n
  for (int m = a; m <= n; ++m) v[m - 1] = 2;
  if (algebra.family == Family::C) v[n - 1] = 1;  // 2 L_n = tau_n
  return v;
}

Root combine_L(const AlgebraType& algebra, int a, int b, int sign) {
  auto la = doubled_L(algebra, a);
  auto lb = doubled_L(algebra, b);
  Root out(la.size());
  for (size_t i = 0; i < la.size(); ++i) out[i] = (la[i] + sign * lb[i]) / 2;
  return out;
}

int height(const Root& r) {
  int h = 0;
  for (int m : r) h += m;
  return h;
}

void sort_roots(std::vector<Root>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
    if (height(x) != height(y)) return height(x) < height(y);
    return x > y;
  });
}

// Root of a free slot, from the L_i description of positive roots.
Root free_slot_root(const AlgebraType& algebra, int i, int j) {
  const int n = algebra.rank;
  if (algebra.family == Family::A) {
    Root r(n, 0);
    add_range(r, j + 1, i);
    return r;
  }
  if (algebra.family == Family::C) {
    if (i <= n - 1) return combine_L(algebra, j + 1, i + 1, -1);
    return combine_L(algebra, j + 1, 2 * n - i, +1);
  }
  if (i <= n) return combine_L(algebra, j + 1, i + 1, -1);
  return combine_L(algebra, j + 1, 2 * n + 1 - i, +1);
}

}  // namespace

std::vector<Root> positive_roots(const AlgebraType& algebra) {
  algebra.validate();
  const int n = algebra.rank;
  std::vector<Root> roots;
  switch (algebra.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          Root r(n, 0);
          add_range(r, i, j);
          roots.push_back(r);
        }
      break;
    case Family::C:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) roots.push_back(combine_L(algebra, i, j, -1));
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) roots.push_back(combine_L(algebra, i, j, +1));
      break;
    case Family::B:
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) roots.push_back(combine_L(algebra, i, j + 1, -1));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) roots.push_back(combine_L(algebra, i, j, +1));
      break;
  }
  sort_roots(roots);
  return roots;
}

int fold_index(const AlgebraType& algebra, int m) {
  if (algebra.family == Family::A) return m;
  return std::min(m, algebra.k() - m);
}

std::vector<CoordinateSlot> coordinate_map(const AlgebraType& algebra) {
  algebra.validate();
  const int k = algebra.k();
  std::vector<CoordinateSlot> slots;
  for (int i = 1; i < k; ++i) {
    for (int j = 0; j < i; ++j) {
      CoordinateSlot s;
      s.row = i;
      s.col = j;
      switch (algebra.family) {
        case Family::A:
          s.free = true;
          break;
        case Family::C:
          s.free = i + j <= k - 1;
          break;
        case Family::B:
          s.free = i + j <= k - 2;
          break;
      }
      if (s.free) {
        s.root = free_slot_root(algebra, i, j);
      } else {
        s.root.assign(algebra.rank, 0);
        for (int m = j + 1; m <= i; ++m) s.root[fold_index(algebra, m) - 1] += 1;
      }
      slots.push_back(std::move(s));
    }
  }
  return slots;
}

std::vector<CoordinateSlot> free_slots(const AlgebraType& algebra) {
  auto all = coordinate_map(algebra);
  std::vector<CoordinateSlot> out;
  for (auto& s : all)
    if (s.free) out.push_back(std::move(s));
  return out;
}

Rational root_value(const Root& root, const RationalVector& gamma) {
  Rational v(0);
  for (size_t i = 0; i < root.size() && i < gamma.size(); ++i)
    if (root[i] != 0) v += Rational(root[i]) * gamma[i];
  return v;
}

std::vector<Root> delta_gamma(const AlgebraType& algebra, const RationalVector& gamma) {
  if (static_cast<int>(gamma.size()) != algebra.rank) throw ConfigError("gamma length does not match rank");
  std::vector<Root> out;
  for (auto& r : positive_roots(algebra))
    if (is_integer(root_value(r, gamma))) out.push_back(r);
  return out;
}

bool is_closed_under_addition(const std::vector<Root>& subset, const std::vector<Root>& universe) {
  std::set<Root> sub(subset.begin(), subset.end());
  std::set<Root> all(universe.begin(), universe.end());
  for (const auto& a : subset)
    for (const auto& b : subset) {
      Root c(a.size());
      for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
      if (all.count(c) && !sub.count(c)) return false;
    }
  return true;
}

std::vector<std::complex<double>> MonodromyElement::diagonal() const {
  std::vector<std::complex<double>> out;
  for (const auto& e : exponents_) {
    // Reduce mod 1 before converting so large exponents keep full accuracy.
    Rational frac = e - Rational(floor(e));
    out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * frac.get_d()));
  }
  return out;
}

bool MonodromyElement::is_identity() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](const Rational& e) { return is_integer(e); });
}

bool MonodromyElement::is_central() const {
  for (int i = 0; i < dim(); ++i)
    if (!entry_allowed(i, 0)) return false;
  return true;
}

bool MonodromyElement::entry_allowed(int i, int j) const { return is_integer(Rational(exponents_[i] - exponents_[j])); }

namespace {

// alpha-tilde_m (m = 1..k-1) as a multiple of alpha_{fold(m)}.
Rational alpha_tilde_multiplier(const AlgebraType& algebra, int m) {
  if (algebra.family == Family::B && fold_index(algebra, m) == algebra.rank) return 2;
  return 1;
}

std::vector<RationalVector> alpha_tilde_forms(const AlgebraType& algebra) {
  const int k = algebra.k();
  std::vector<RationalVector> forms(static_cast<size_t>(k + 1), RationalVector(algebra.rank, Rational(0)));
  // forms[0] and forms[k] are alpha-tilde_0 = alpha-tilde_k = 0.
  for (int m = 1; m < k; ++m) forms[m][fold_index(algebra, m) - 1] = alpha_tilde_multiplier(algebra, m);
  return forms;
}

}  // namespace

std::vector<RationalVector> monodromy_forms_in_alpha(const AlgebraType& algebra) {
  algebra.validate();
  const int k = algebra.k();
  auto at = alpha_tilde_forms(algebra);
  std::vector<RationalVector> out;
  // d_i = alpha-tilde_{i+1} - alpha-tilde_i, so d_0 = alpha-tilde_1 and d_{k-1} = -alpha-tilde_{k-1}.
  for (int i = 0; i < k; ++i) {
    RationalVector d(algebra.rank);
    for (int r = 0; r < algebra.rank; ++r) d[r] = at[i + 1][r] - at[i][r];
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<RationalVector> monodromy_forms_in_gamma(const AlgebraType& algebra) {
  auto in_alpha = monodromy_forms_in_alpha(algebra);
  auto data = cartan(algebra);
  std::vector<RationalVector> out;
  for (const auto& form : in_alpha) {
    RationalVector g(algebra.rank, Rational(0));
    for (int i = 0; i < algebra.rank; ++i)
      for (int j = 0; j < algebra.rank; ++j) g[j] += form[i] * data.a_inv(i, j);
    out.push_back(std::move(g));
  }
  return out;
}

MonodromyElement monodromy_element(const AlgebraType& algebra, const RationalVector& gamma) {
  auto alpha = alpha_from_gamma(algebra, gamma);
  RationalVector exps;
  for (const auto& form : monodromy_forms_in_alpha(algebra)) {
    Rational e(0);
    for (int r = 0; r < algebra.rank; ++r) e += form[r] * alpha[r];
    exps.push_back(e);
  }
  return MonodromyElement(std::move(exps));
}

std::string format_linear_form(const RationalVector& coeffs, const std::string& symbol) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](size_t idx, const Rational& c) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << to_string(mag) << "*";
    os << symbol << idx + 1;
  };
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) > 0) emit(i, coeffs[i]);
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) < 0) emit(i, coeffs[i]);
  return first ? "0" : os.str();
}

std::string format_root(const Root& root) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < root.size(); ++i) {
    if (root[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (root[i] != 1) os << root[i] << "*";
    os << "tau" << i + 1;
  }
  return first ? "0" : os.str();
}

}  // namespace toda
