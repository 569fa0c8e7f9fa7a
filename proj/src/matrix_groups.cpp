#include "toda/matrix_groups.hpp"

#include <algorithm>
#include <complex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "toda/errors.hpp"

namespace toda {

std::string to_string(FormTag tag) {
  switch (tag) {
    case FormTag::Sp:
      return "Sp";
    case FormTag::SO:
      return "SO";
    case FormTag::None:
      break;
  }
  return "none";
}

FormTag natural_group(int k) { return k % 2 == 0 ? FormTag::Sp : FormTag::SO; }

GroupElement form_matrix(int k) {
  if (k < 1) throw ConfigError("form_matrix needs k >= 1");
  ExactMatrix j(k, k, ExactScalar(0));
  for (int i = 0; i < k; ++i) j(i, k - 1 - i) = ExactScalar(form_sign(i));
  return {j, natural_group(k)};
}

ExactScalar determinant(const ExactMatrix& m) {
  if (!m.square()) throw CardinalityError("determinant of a non-square matrix");
  const int n = m.rows();
  ExactMatrix a = m;
  ExactScalar det(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!a(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return ExactScalar(0);
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(a(c, j), a(pivot, j));
      det = -det;
    }
    det *= a(c, c);
    const ExactScalar inv = a(c, c).inverse();
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const ExactScalar f = a(r, c) * inv;
      for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

bool is_in_group(const ExactMatrix& a) {
  if (!a.square()) return false;
  return preserves_form(a) && determinant(a).is_one();
}

bool is_in_group(const GroupElement& a) {
  if (a.tag == FormTag::None) return a.entries.square() && determinant(a.entries).is_one();
  if (a.tag != natural_group(a.dim())) return false;
  return is_in_group(a.entries);
}

bool is_hermitian(const ExactMatrix& m) {
  if (!m.square()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j)
      if (m(i, j) != m(j, i).conj()) return false;
  return true;
}

ExactMatrix conjugate_transpose(const ExactMatrix& m) {
  return m.transpose().map([](const ExactScalar& x) { return x.conj(); });
}

// --- index sets -----------------------------------------------------------

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw ConfigError("index set has repeated entries");
  if (!indices_.empty() && indices_.front() < 1) throw ConfigError("index sets are 1-based");
}

IndexSet IndexSet::from_mask(uint32_t mask) {
  std::vector<int> idx;
  for (int b = 0; b < 32; ++b)
    if (mask & (1u << b)) idx.push_back(b + 1);
  return IndexSet(std::move(idx));
}

IndexSet IndexSet::full(int k) { return from_mask(k >= 32 ? ~0u : (1u << k) - 1); }

uint32_t IndexSet::mask() const {
  uint32_t m = 0;
  for (int i : indices_) m |= 1u << (i - 1);
  return m;
}

IndexSet IndexSet::complement(int k) const {
  std::vector<int> out;
  for (int i = 1; i <= k; ++i)
    if (!std::binary_search(indices_.begin(), indices_.end(), i)) out.push_back(i);
  return IndexSet(std::move(out));
}

IndexSet IndexSet::inverted(int k) const {
  std::vector<int> out;
  for (int i : indices_) {
    if (i > k) throw ConfigError("index " + std::to_string(i) + " exceeds " + std::to_string(k));
    out.push_back(k + 1 - i);
  }
  return IndexSet(std::move(out));
}

std::vector<int> IndexSet::zero_based() const {
  std::vector<int> out;
  for (int i : indices_) out.push_back(i - 1);
  return out;
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < indices_.size(); ++i) os << (i ? "," : "") << indices_[i];
  os << '}';
  return os.str();
}

ExactScalar minor(const ExactMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size())
    throw CardinalityError("minor needs |S| = |T|, got " + std::to_string(rows.size()) + " and " +
                           std::to_string(cols.size()));
  for (int i : rows.indices())
    if (i > a.rows()) throw ConfigError("row index out of range");
  for (int j : cols.indices())
    if (j > a.cols()) throw ConfigError("column index out of range");
  if (rows.size() == 0) return ExactScalar(1);
  return determinant(a.submatrix(rows.zero_based(), cols.zero_based()));
}

namespace {

class MinorCache {
 public:
  explicit MinorCache(const ExactMatrix& a) : a_(a) {}

  const ExactScalar& get(uint32_t rows, uint32_t cols) {
    const uint64_t key = (static_cast<uint64_t>(rows) << 32) | cols;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, minor(a_, IndexSet::from_mask(rows), IndexSet::from_mask(cols))).first->second;
  }

 private:
  const ExactMatrix& a_;
  std::unordered_map<uint64_t, ExactScalar> cache_;
};

uint32_t mirror_complement(uint32_t mask, int k) {
  const uint32_t full = (1u << k) - 1;
  const uint32_t comp = full & ~mask;
  uint32_t out = 0;
  for (int b = 0; b < k; ++b)
    if (comp & (1u << b)) out |= 1u << (k - 1 - b);
  return out;
}

}  // namespace

MinorIdentityReport check_minor_identity(const ExactMatrix& a, int exhaustive_limit, uint64_t seed, int samples) {
  const int k = a.rows();
  if (!a.square() || k > 30) throw ConfigError("minor identity check needs a square matrix of size <= 30");
  MinorIdentityReport report;
  MinorCache cache(a);
  auto test = [&](uint32_t s, uint32_t t) {
    ++report.pairs_checked;
    if (cache.get(s, t) != cache.get(mirror_complement(s, k), mirror_complement(t, k))) {
      report.holds = false;
      report.witness = std::make_pair(IndexSet::from_mask(s), IndexSet::from_mask(t));
      return false;
    }
    return true;
  };

  if (k <= exhaustive_limit) {
    std::vector<std::vector<uint32_t>> by_size(static_cast<size_t>(k) + 1);
    for (uint32_t m = 1; m < (1u << k); ++m) by_size[static_cast<size_t>(__builtin_popcount(m))].push_back(m);
    for (int size = 1; size <= k; ++size)
      for (uint32_t s : by_size[static_cast<size_t>(size)])
        for (uint32_t t : by_size[static_cast<size_t>(size)])
          if (!test(s, t)) return report;
    return report;
  }

  report.exhaustive = false;
  Sampler rng(seed);
  for (int trial = 0; trial < samples; ++trial) {
    const int size = static_cast<int>(rng.uniform_int(1, k));
    auto pick = [&]() {
      std::vector<int> perm(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) perm[static_cast<size_t>(i)] = i;
      for (int i = k - 1; i > 0; --i) std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(rng.uniform_int(0, i))]);
      uint32_t m = 0;
      for (int i = 0; i < size; ++i) m |= 1u << perm[static_cast<size_t>(i)];
      return m;
    };
    const uint32_t s = pick();
    const uint32_t t = pick();
    if (!test(s, t)) return report;
  }
  return report;
}

FormTag classify_by_minors(const ExactMatrix& a) {
  if (!a.square()) throw CardinalityError("classify_by_minors needs a square matrix");
  const int k = a.rows();
  if (!determinant(a).is_one()) throw StructureError("classify_by_minors needs det A = 1");
  for (int s = 1; s <= k; ++s) {
    const IndexSet rows = IndexSet({k + 1 - s}).complement(k);
    for (int t = 1; t <= k; ++t) {
      const IndexSet cols = IndexSet({k + 1 - t}).complement(k);
      if (a(s - 1, t - 1) != minor(a, rows, cols)) return FormTag::None;
    }
  }
  const FormTag tag = natural_group(k);
  if (!is_in_group(a)) throw std::logic_error("minor characterization accepted a matrix outside the group");
  return tag;
}

std::vector<ExactScalar> leading_principal_minors(const ExactMatrix& h) {
  std::vector<ExactScalar> out;
  for (int m = 1; m <= h.rows(); ++m) {
    std::vector<int> idx(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;
    out.push_back(determinant(h.submatrix(idx, idx)));
  }
  return out;
}

UlFactors ul_factor(const ExactMatrix& h) {
  if (!is_hermitian(h)) throw StructureError("matrix is not Hermitian");
  const int k = h.rows();
  const auto minors = leading_principal_minors(h);
  for (int m = 0; m < k; ++m) {
    // Hermitian, so every principal minor is real.
    if (minors[static_cast<size_t>(m)].re() <= 0)
      throw NotPositiveDefinite("leading principal minor of order " + std::to_string(m + 1) + " is " +
                                    to_string(minors[static_cast<size_t>(m)]),
                                m + 1);
  }

  ExactMatrix c = ExactMatrix::identity(k);
  RationalVector d(static_cast<size_t>(k));
  for (int l = k - 1; l >= 0; --l) {
    Rational dl = h(l, l).re();
    for (int m = l + 1; m < k; ++m) dl -= d[static_cast<size_t>(m)] * c(m, l).norm();
    if (dl <= 0) throw NotPositiveDefinite("non-positive pivot at row " + std::to_string(l), k - l);
    d[static_cast<size_t>(l)] = dl;
    for (int i = 0; i < l; ++i) {
      ExactScalar acc = h(i, l);
      for (int m = l + 1; m < k; ++m) acc -= c(m, i).conj() * ExactScalar(d[static_cast<size_t>(m)]) * c(m, l);
      c(l, i) = (acc / ExactScalar(dl)).conj();
    }
  }
  return {c, d};
}

ExactMatrix ul_cholesky(const ExactMatrix& h) {
  UlFactors f = ul_factor(h);
  const int k = h.rows();
  ExactMatrix b = f.unipotent;
  for (int l = 0; l < k; ++l) {
    Rational root;
    if (!exact_sqrt(f.pivots[static_cast<size_t>(l)], root))
      throw NonSquarePivot("pivot " + to_string(f.pivots[static_cast<size_t>(l)]) + " at row " + std::to_string(l) +
                           " is not a rational square");
    for (int j = 0; j <= l; ++j) b(l, j) *= ExactScalar(root);
  }
  return b;
}

DiagonalUnipotent split_diagonal_unipotent(const ExactMatrix& b) {
  if (!b.square()) throw StructureError("split needs a square matrix");
  const int k = b.rows();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!b(i, j).is_zero()) throw StructureError("matrix is not lower triangular");
  ExactMatrix lambda(k, k, ExactScalar(0));
  ExactMatrix c = b;
  for (int i = 0; i < k; ++i) {
    if (b(i, i).is_zero()) throw SingularDiagonal("zero diagonal entry at " + std::to_string(i));
    lambda(i, i) = b(i, i);
    const ExactScalar inv = b(i, i).inverse();
    for (int j = 0; j <= i; ++j) c(i, j) *= inv;
  }
  return {lambda, c};
}

// --- coordinates on N -------------------------------------------------------

UnipotentCoords make_coords(const AlgebraType& algebra, const std::map<std::string, ExactScalar>& by_name) {
  UnipotentCoords coords;
  for (const auto& slot : free_slots(algebra)) coords[{slot.row, slot.col}] = ExactScalar(0);
  for (const auto& [name, value] : by_name) {
    const SlotKey key = parse_slot_name(name);
    auto it = coords.find(key);
    if (it == coords.end()) throw ConfigError(name + " is not a free coordinate of " + algebra.name());
    it->second = value;
  }
  return coords;
}

std::map<std::string, ExactScalar> coords_by_name(const UnipotentCoords& coords) {
  std::map<std::string, ExactScalar> out;
  for (const auto& [key, value] : coords) out[slot_name(key.first, key.second)] = value;
  return out;
}

namespace {

template <typename T>
T half_of(const T& x) {
  return x * Rational(1, 2);
}

std::complex<double> half_of(const std::complex<double>& x) { return x * 0.5; }

bool is_free_slot(const AlgebraType& algebra, int row, int col) {
  const int k = algebra.k();
  switch (algebra.family) {
    case Family::A:
      return true;
    case Family::C:
      return row + col <= k - 1;
    case Family::B:
      return row + col <= k - 2;
  }
  return false;
}

}  // namespace

template <typename T>
Matrix<T> solve_unipotent(const AlgebraType& algebra, const std::map<SlotKey, T>& free_values) {
  algebra.validate();
  const int k = algebra.k();
  for (const auto& [key, value] : free_values) {
    (void)value;
    if (key.first <= key.second || key.first >= k || key.second < 0 || !is_free_slot(algebra, key.first, key.second))
      throw ConfigError(slot_name(key.first, key.second) + " is not a free coordinate of " + algebra.name());
  }
  Matrix<T> c = Matrix<T>::identity(k);
  Matrix<T> cinv = Matrix<T>::identity(k);
  auto free_value = [&](int i, int j) {
    auto it = free_values.find({i, j});
    return it == free_values.end() ? T(0) : it->second;
  };

  for (int band = 1; band < k; ++band) {
    for (int j = 0; j + band < k; ++j) {
      const int i = j + band;
      if (is_free_slot(algebra, i, j)) {
        c(i, j) = free_value(i, j);
      } else {
        const int p = k - 1 - j;
        const int q = k - 1 - i;
        if (p == i && q == j) {
          // Self-mirrored entry (B_n anti-diagonal): c = rest - c with the
          // band parity even, so c = rest / 2.
          T rest(0);
          for (int r = j + 1; r < i; ++r) rest -= c(i, r) * cinv(r, j);
          c(i, j) = half_of(rest);
        } else {
          c(i, j) = band % 2 == 0 ? cinv(p, q) : T(0) - cinv(p, q);
        }
      }
      T acc(0);
      for (int r = j; r < i; ++r) acc -= c(i, r) * cinv(r, j);
      cinv(i, j) = acc;
    }
  }
  return c;
}

template Matrix<ExactScalar> solve_unipotent<ExactScalar>(const AlgebraType&, const std::map<SlotKey, ExactScalar>&);
template Matrix<Poly> solve_unipotent<Poly>(const AlgebraType&, const std::map<SlotKey, Poly>&);
template Matrix<std::complex<double>> solve_unipotent<std::complex<double>>(
    const AlgebraType&, const std::map<SlotKey, std::complex<double>>&);

GroupElement unipotent_from_coords(const AlgebraType& algebra, const UnipotentCoords& coords) {
  for (const auto& slot : free_slots(algebra))
    if (!coords.count({slot.row, slot.col})) throw ConfigError("missing coordinate " + slot.name());
  ExactMatrix c = solve_unipotent<ExactScalar>(algebra, coords);
  const FormTag tag = algebra.family == Family::A ? FormTag::None : natural_group(algebra.k());
  return {c, tag};
}

Matrix<Poly> symbolic_unipotent(const AlgebraType& algebra) {
  std::map<SlotKey, Poly> vars;
  for (const auto& slot : free_slots(algebra)) vars[{slot.row, slot.col}] = Poly::variable(slot.name());
  return solve_unipotent<Poly>(algebra, vars);
}

UnipotentCoords coords_from_unipotent(const AlgebraType& algebra, const ExactMatrix& c) {
  const int k = algebra.k();
  if (c.rows() != k || c.cols() != k) throw StructureError("unipotent matrix has the wrong size");
  for (int i = 0; i < k; ++i) {
    if (!c(i, i).is_one()) throw StructureError("matrix is not unipotent");
    for (int j = i + 1; j < k; ++j)
      if (!c(i, j).is_zero()) throw StructureError("matrix is not lower triangular");
  }
  UnipotentCoords coords;
  for (const auto& slot : free_slots(algebra)) coords[{slot.row, slot.col}] = c(slot.row, slot.col);
  return coords;
}

RestrictionResult restrict_to_ngamma(const AlgebraType& algebra, const UnipotentCoords& coords,
                                     const std::vector<Root>& allowed_roots, bool strict) {
  const std::set<Root> allowed(allowed_roots.begin(), allowed_roots.end());
  RestrictionResult out;
  out.coords = coords;
  for (const auto& slot : free_slots(algebra)) {
    if (allowed.count(slot.root)) continue;
    auto it = out.coords.find({slot.row, slot.col});
    if (it == out.coords.end()) continue;
    if (!it->second.is_zero()) {
      if (strict)
        throw NonzeroForbiddenCoordinate(slot.name() + " = " + to_string(it->second) + " sits on root " +
                                         format_root(slot.root) + " outside the allowed set");
      out.zeroed.push_back(it->first);
    }
    it->second = ExactScalar(0);
  }
  return out;
}

// --- sampling ---------------------------------------------------------------

long Sampler::uniform_int(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  const auto span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Sampler::rational(int magnitude) {
  if (magnitude <= 0) return Rational(0);
  Rational q(uniform_int(-magnitude, magnitude), uniform_int(1, magnitude));
  q.canonicalize();
  return q;
}

Rational Sampler::positive_rational(int magnitude) {
  if (magnitude <= 0) return Rational(1);
  Rational q(uniform_int(1, magnitude + 1), uniform_int(1, magnitude + 1));
  q.canonicalize();
  return q;
}

ExactScalar Sampler::scalar(int magnitude, bool complex_values) {
  Rational re = rational(magnitude);
  Rational im = complex_values ? rational(magnitude) : Rational(0);
  return {re, im};
}

RationalVector Sampler::gamma(int rank, const std::vector<int>& denominators) {
  RationalVector g;
  for (int i = 0; i < rank; ++i) {
    const long q = denominators.empty() ? 1 : denominators[static_cast<size_t>(uniform_int(0, static_cast<long>(denominators.size()) - 1))];
    Rational v(uniform_int(-q + 1, 3 * q), q);
    v.canonicalize();
    g.push_back(v);
  }
  return g;
}

UnipotentCoords Sampler::coords(const AlgebraType& algebra, int magnitude) {
  UnipotentCoords c;
  for (const auto& slot : free_slots(algebra)) c[{slot.row, slot.col}] = scalar(magnitude);
  return c;
}

RationalVector Sampler::lambda(const AlgebraType& algebra, int magnitude) {
  const int k = algebra.k();
  RationalVector l(static_cast<size_t>(k), Rational(1));
  if (algebra.family == Family::A) {
    Rational prod(1);
    for (int i = 0; i + 1 < k; ++i) {
      l[static_cast<size_t>(i)] = positive_rational(magnitude);
      prod *= l[static_cast<size_t>(i)];
    }
    l[static_cast<size_t>(k - 1)] = 1 / prod;
    return l;
  }
  for (int i = 0; i < k / 2; ++i) {
    l[static_cast<size_t>(i)] = positive_rational(magnitude);
    l[static_cast<size_t>(k - 1 - i)] = 1 / l[static_cast<size_t>(i)];
  }
  return l;
}

ExactMatrix diagonal_matrix(const RationalVector& diag) {
  const int k = static_cast<int>(diag.size());
  ExactMatrix m(k, k, ExactScalar(0));
  for (int i = 0; i < k; ++i) m(i, i) = ExactScalar(diag[static_cast<size_t>(i)]);
  return m;
}

GroupElement sample_group_element(const AlgebraType& algebra, uint64_t seed, int magnitude) {
  Sampler rng(seed);
  const GroupElement c1 = unipotent_from_coords(algebra, rng.coords(algebra, magnitude));
  const ExactMatrix lam = diagonal_matrix(rng.lambda(algebra, magnitude));
  const GroupElement c2 = unipotent_from_coords(algebra, rng.coords(algebra, magnitude));
  const FormTag tag = algebra.family == Family::A ? FormTag::None : natural_group(algebra.k());
  return {c1.entries * lam * c2.entries.transpose(), tag};
}

}  // namespace toda
