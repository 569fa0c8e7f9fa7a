#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "toda/exact_scalar.hpp"
#include "toda/lie_data.hpp"
#include "toda/matrix.hpp"
#include "toda/polynomial.hpp"

namespace toda {

using ExactMatrix = Matrix<ExactScalar>;

enum class FormTag { None, Sp, SO };

std::string to_string(FormTag tag);

// Sp for even k, SO for odd k: the group preserving J_k.
FormTag natural_group(int k);

struct GroupElement {
  ExactMatrix entries;
  FormTag tag = FormTag::None;

  int dim() const { return entries.rows(); }
};

// (J_k)_{i, k-1-i} = (-1)^i with 0-based rows: +1 in the top-right corner,
// alternating down the anti-diagonal.
GroupElement form_matrix(int k);
inline int form_sign(int row) { return row % 2 == 0 ? 1 : -1; }

// A^t J_k A == J_k, for any entry type with 0, +, -, * and ==.
template <typename T>
bool preserves_form(const Matrix<T>& a) {
  const int k = a.rows();
  if (!a.square()) return false;
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q < k; ++q) {
      T sum(0);
      for (int r = 0; r < k; ++r) {
        const T& x = a(r, p);
        if (x == T(0)) continue;
        const int c = k - 1 - r;
        if (form_sign(r) > 0) {
          sum += x * a(c, q);
        } else {
          sum -= x * a(c, q);
        }
      }
      const T expected = (p + q == k - 1) ? T(form_sign(p)) : T(0);
      if (!(sum == expected)) return false;
    }
  }
  return true;
}

ExactScalar determinant(const ExactMatrix& m);

// Exact A^t J A = J test plus det A = 1. A tagged element is tested against
// its tag and an untagged one against SL(k); a bare matrix against the group
// natural to its dimension.
bool is_in_group(const GroupElement& a);
bool is_in_group(const ExactMatrix& a);

bool is_hermitian(const ExactMatrix& m);
ExactMatrix conjugate_transpose(const ExactMatrix& m);

// Sorted strictly increasing 1-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> indices);
  static IndexSet from_mask(uint32_t mask);
  static IndexSet full(int k);

  const std::vector<int>& indices() const { return indices_; }
  size_t size() const { return indices_.size(); }
  uint32_t mask() const;
  IndexSet complement(int k) const;
  // iota(S) = {k + 1 - s}
  IndexSet inverted(int k) const;
  std::vector<int> zero_based() const;
  std::string to_string() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.indices_ == b.indices_; }

 private:
  std::vector<int> indices_;
};

// Throws CardinalityError when |S| != |T|. The empty minor is 1.
ExactScalar minor(const ExactMatrix& a, const IndexSet& rows, const IndexSet& cols);

struct MinorIdentityReport {
  bool holds = true;
  bool exhaustive = true;
  long pairs_checked = 0;
  std::optional<std::pair<IndexSet, IndexSet>> witness;
};

// A_{S,T} = A_{iota(S^c), iota(T^c)} for every nonempty S, T with |S| = |T|.
// Exhaustive for k <= exhaustive_limit, otherwise `samples` random pairs.
MinorIdentityReport check_minor_identity(const ExactMatrix& a, int exhaustive_limit = 7, uint64_t seed = 0,
                                         int samples = 4000);

// Converse characterization from the 1x1 identities a_st = minor with row
// iota(s) and column iota(t) deleted. Precondition det A = 1.
FormTag classify_by_minors(const ExactMatrix& a);

// Leading principal minors of orders 1..k.
std::vector<ExactScalar> leading_principal_minors(const ExactMatrix& h);

struct UlFactors {
  ExactMatrix unipotent;  // lower triangular, unit diagonal
  RationalVector pivots;  // positive, H = C^dagger diag(pivots) C
};

// Root-free UL factorization of a Hermitian positive definite matrix,
// eliminating from the last row upward. Throws StructureError if H is not
// Hermitian and NotPositiveDefinite (with the failing order) otherwise.
UlFactors ul_factor(const ExactMatrix& h);

// H = B^dagger B with B lower triangular and positive diagonal. Throws
// NonSquarePivot when a pivot is not a rational square.
ExactMatrix ul_cholesky(const ExactMatrix& h);

struct DiagonalUnipotent {
  ExactMatrix lambda;
  ExactMatrix unipotent;
};

// B = Lambda C. Throws StructureError if B is not lower triangular and
// SingularDiagonal on a zero diagonal entry.
DiagonalUnipotent split_diagonal_unipotent(const ExactMatrix& b);

// Values of the free coordinates c_ij, keyed by (row, col).
using SlotKey = std::pair<int, int>;
using UnipotentCoords = std::map<SlotKey, ExactScalar>;

// Accepts names like "c10"; missing free slots become 0. Throws ConfigError
// for names that are not free slots of the algebra.
UnipotentCoords make_coords(const AlgebraType& algebra, const std::map<std::string, ExactScalar>& by_name);
std::map<std::string, ExactScalar> coords_by_name(const UnipotentCoords& coords);

// Unique unipotent lower triangular C with C^t J C = J extending the free
// coordinates. Dependent entries are filled by increasing band i - j, then
// increasing j, from the fixed-point form C = J^{-1} C^{-t} J: each one is
// +-(C^{-1}) at the mirrored position, or half of it on the B_n
// anti-diagonal. For A_n every lower entry is free.
template <typename T>
Matrix<T> solve_unipotent(const AlgebraType& algebra, const std::map<SlotKey, T>& free_values);

GroupElement unipotent_from_coords(const AlgebraType& algebra, const UnipotentCoords& coords);

// Dependent entries as polynomials in the free coordinate names.
Matrix<Poly> symbolic_unipotent(const AlgebraType& algebra);

UnipotentCoords coords_from_unipotent(const AlgebraType& algebra, const ExactMatrix& c);

struct RestrictionResult {
  UnipotentCoords coords;
  std::vector<SlotKey> zeroed;  // forbidden slots that held a nonzero value
};

// Zeroes every free coordinate whose root is outside allowed_roots. In strict
// mode a nonzero forbidden coordinate throws NonzeroForbiddenCoordinate.
RestrictionResult restrict_to_ngamma(const AlgebraType& algebra, const UnipotentCoords& coords,
                                     const std::vector<Root>& allowed_roots, bool strict = false);

// Deterministic small-rational sampling. Magnitude 0 gives zeros (and
// lambda = 1), magnitude m draws numerators in [-m, m] and denominators in
// [1, m].
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }
  long uniform_int(long lo, long hi);
  Rational rational(int magnitude);
  Rational positive_rational(int magnitude);
  ExactScalar scalar(int magnitude, bool complex_values = true);
  // gamma_i > -1 with small denominators.
  RationalVector gamma(int rank, const std::vector<int>& denominators);
  UnipotentCoords coords(const AlgebraType& algebra, int magnitude);
  // Diagonal of Lambda: lambda_i lambda_{k-1-i} = 1 for C/B (middle entry 1),
  // product 1 for A.
  RationalVector lambda(const AlgebraType& algebra, int magnitude);

 private:
  std::mt19937_64 engine_;
};

ExactMatrix diagonal_matrix(const RationalVector& diag);

// C1 * Lambda * C2^t with C1, C2 constraint-solved unipotents: exactly in
// the group by construction (SL for A_n).
GroupElement sample_group_element(const AlgebraType& algebra, uint64_t seed, int magnitude);

}  // namespace toda
