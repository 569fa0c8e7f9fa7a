#pragma once

#include <complex>
#include <string>
#include <vector>

#include "toda/exact_scalar.hpp"
#include "toda/matrix.hpp"
#include "toda/rational.hpp"

namespace toda {

enum class Family { A, B, C };

struct AlgebraType {
  Family family = Family::A;
  int rank = 1;

  // Ambient matrix size: n+1 for A_n, 2n for C_n, 2n+1 for B_n.
  int k() const;
  // "A3", "C2", ...
  std::string name() const;
  // Throws ConfigError for rank < 1.
  void validate() const;

  friend bool operator==(const AlgebraType& a, const AlgebraType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

char family_letter(Family f);
Family parse_family(const std::string& s);

struct CartanData {
  Matrix<long> a;
  Matrix<Rational> a_inv;
};

// Coefficients m_i in the simple-root basis.
using Root = std::vector<int>;

struct CoordinateSlot {
  int row = 0;  // 0-based, row > col
  int col = 0;
  // For free slots the positive root of the coordinate; for dependent slots
  // the weight of the entry under the diagonal torus, which need not be a root.
  Root root;
  bool free = false;

  // "c10", or "c12_3" once an index has two digits.
  std::string name() const;
};

std::string slot_name(int row, int col);
// Inverse of slot_name; throws ConfigError.
std::pair<int, int> parse_slot_name(const std::string& name);

CartanData cartan(const AlgebraType& algebra);

// Exact inverse of a square rational matrix by Gauss-Jordan elimination.
Matrix<Rational> inverse(const Matrix<Rational>& m);

// alpha = a^{-1} gamma
RationalVector alpha_from_gamma(const AlgebraType& algebra, const RationalVector& gamma);

// Ordered by height, then tau_1 before tau_2.
std::vector<Root> positive_roots(const AlgebraType& algebra);

// Every strictly lower entry of the ambient k x k unipotent matrix, by
// increasing row then column. Free slots biject onto positive_roots.
std::vector<CoordinateSlot> coordinate_map(const AlgebraType& algebra);
std::vector<CoordinateSlot> free_slots(const AlgebraType& algebra);

// Index m in 1..k-1 of the A_{k-1} diagram folded onto the C_n/B_n diagram.
int fold_index(const AlgebraType& algebra, int m);

// tau(Gamma) = sum m_i gamma_i
Rational root_value(const Root& root, const RationalVector& gamma);

std::vector<Root> delta_gamma(const AlgebraType& algebra, const RationalVector& gamma);

// True when a + b in universe implies a + b in subset for all a, b in subset.
bool is_closed_under_addition(const std::vector<Root>& subset, const std::vector<Root>& universe);

// The diagonal element g_Gamma = exp(2 pi i diag(exponents)). Stored through
// its rational exponent vector so commutation tests are exact.
class MonodromyElement {
 public:
  explicit MonodromyElement(RationalVector exponents) : exponents_(std::move(exponents)) {}

  const RationalVector& exponents() const { return exponents_; }
  int dim() const { return static_cast<int>(exponents_.size()); }

  std::vector<std::complex<double>> diagonal() const;
  bool is_identity() const;
  // Ad(g) is trivial: all exponent differences are integers.
  bool is_central() const;
  // Entry (i, j) of a matrix may be nonzero in a commuting matrix iff the
  // exponent difference is an integer.
  bool entry_allowed(int i, int j) const;
  template <typename T>
  bool commutes_with(const Matrix<T>& m) const {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!(m(i, j) == T(0)) && !entry_allowed(i, j)) return false;
    return true;
  }

 private:
  RationalVector exponents_;
};

MonodromyElement monodromy_element(const AlgebraType& algebra, const RationalVector& gamma);

// Exponents of g_Gamma as linear forms in (alpha_1..alpha_n) and in
// (gamma_1..gamma_n): row i holds the coefficients of diagonal entry i.
std::vector<RationalVector> monodromy_forms_in_alpha(const AlgebraType& algebra);
std::vector<RationalVector> monodromy_forms_in_gamma(const AlgebraType& algebra);

// "alpha1", "2*alpha2 - alpha1", "0"
std::string format_linear_form(const RationalVector& coeffs, const std::string& symbol);

std::string format_root(const Root& root);

}  // namespace toda
