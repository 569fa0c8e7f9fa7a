#pragma once

#include <vector>

#include "toda/config.hpp"
#include "toda/matrix.hpp"
#include "toda/matrix_groups.hpp"
#include "toda/rational.hpp"
#include "toda/zexpr.hpp"

namespace toda {

using ZMatrix = Matrix<ZExpr>;

// sigma_0 = 1, sigma_i = z^(mu_1+...+mu_i) / prod_{j=1..i} (mu_j + ... + mu_i).
// Throws ConfigError unless every mu_i > 0.
std::vector<ZExpr> sigma_vector(const RationalVector& mu);

struct NuVector {
  std::vector<ZExpr> nu;  // nu_i = chi_i z^beta_i
  RationalVector chi;
  RationalVector beta;
  Rational xi_exponent;  // nu = sigma / z^xi_exponent
};

NuVector nu_vector(const TodaConfig& config);

// W(i, j) = d^j nu_i / dz^j: row i follows one function, column j one
// derivative order.
ZMatrix wronskian(const NuVector& nu);

// Exact determinant over the ZExpr ring.
ZExpr determinant(const ZMatrix& m);

ZMatrix transpose_times_form_times(const ZMatrix& a, const ZMatrix& b);

// P = W^t J W. Throws StructureError unless P vanishes above the
// anti-diagonal and on the first sub-anti-diagonal and has (-1)^i on it.
ZMatrix pairing_matrix(const ZMatrix& w);

// Unipotent upper triangular U with (W U)^t J (W U) = J. Planes (a, k-1-a)
// are normalized outermost first: the far vector is corrected by a multiple
// of the near one so it pairs to zero with itself (odd k), and each inner
// vector is cleared against both ends.
ZMatrix gram_schmidt_normalizer(const ZMatrix& w);

// Leading (rows S, columns 1..m) minors of the Wronskian; S is 1-based.
ZExpr wronskian_minor(const ZMatrix& w, const IndexSet& rows);

}  // namespace toda
