#include "toda/nu_basis.hpp"

#include "toda/errors.hpp"

namespace toda {

std::vector<ZExpr> sigma_vector(const RationalVector& mu) {
  for (const auto& m : mu)
    if (m <= 0) throw ConfigError("mu values must be positive, got " + to_string(m));
  std::vector<ZExpr> sigma{ZExpr(1)};
  Rational exponent = 0;
  for (size_t i = 0; i < mu.size(); ++i) {
    exponent += mu[i];
    Rational denom = 1;
    Rational tail = 0;
    for (size_t j = i + 1; j-- > 0;) {
      tail += mu[j];
      denom *= tail;
    }
    sigma.push_back(ZExpr::monomial(ExactScalar(Rational(1 / denom)), exponent));
  }
  return sigma;
}

NuVector nu_vector(const TodaConfig& config) {
  NuVector out;
  out.xi_exponent = config.alpha_tilde().front();
  const auto sigma = sigma_vector(config.mu_tilde());
  for (const auto& s : sigma) {
    const Monomial m = s.single_term();
    out.chi.push_back(m.coeff.re());
    out.beta.push_back(m.exp_z - out.xi_exponent);
    out.nu.push_back(ZExpr::monomial(m.coeff, out.beta.back()));
  }
  return out;
}

ZMatrix wronskian(const NuVector& nu) {
  const int k = static_cast<int>(nu.nu.size());
  ZMatrix w(k, k);
  for (int i = 0; i < k; ++i) {
    ZExpr f = nu.nu[static_cast<size_t>(i)];
    for (int j = 0; j < k; ++j) {
      w(i, j) = f;
      f = f.diff_z();
    }
  }
  return w;
}

ZExpr determinant(const ZMatrix& m) { return determinant_by_expansion(m); }

ZMatrix transpose_times_form_times(const ZMatrix& a, const ZMatrix& b) {
  const int k = a.rows();
  ZMatrix out(a.cols(), b.cols());
  for (int p = 0; p < a.cols(); ++p)
    for (int q = 0; q < b.cols(); ++q) {
      ZExpr sum;
      for (int r = 0; r < k; ++r) {
        if (a(r, p).is_zero()) continue;
        const ZExpr term = a(r, p) * b(k - 1 - r, q);
        if (form_sign(r) > 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      out(p, q) = std::move(sum);
    }
  return out;
}

ZMatrix pairing_matrix(const ZMatrix& w) {
  const int k = w.rows();
  ZMatrix p = transpose_times_form_times(w, w);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int s = i + j;
      const std::string where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (s < k - 1 && !p(i, j).is_zero())
        throw StructureError("pairing entry " + where + " should vanish, got " + p(i, j).to_string());
      if (s == k - 1 && p(i, j) != ZExpr(form_sign(i)))
        throw StructureError("pairing entry " + where + " should be " + std::to_string(form_sign(i)) + ", got " +
                             p(i, j).to_string());
      if (s == k && !p(i, j).is_zero())
        throw StructureError("pairing entry " + where + " should vanish, got " + p(i, j).to_string());
    }
  return p;
}

namespace {

// v_t -= c v_s, tracked through the pairing matrix q and the transform u.
void subtract_column(ZMatrix& q, ZMatrix& u, int t, int s, const ZExpr& c) {
  const int k = q.rows();
  for (int r = 0; r < k; ++r) u(r, t) -= c * u(r, s);
  for (int j = 0; j < k; ++j) q(t, j) -= c * q(s, j);
  for (int j = 0; j < k; ++j) q(j, t) -= c * q(j, s);
}

}  // namespace

ZMatrix gram_schmidt_normalizer(const ZMatrix& w) {
  const int k = w.rows();
  ZMatrix q = pairing_matrix(w);
  ZMatrix u = ZMatrix::identity(k);
  for (int a = 0, b = k - 1; a < b; ++a, --b) {
    const ExactScalar sign(form_sign(a));
    if (q(a, b) != ZExpr(sign)) throw StructureError("plane pairing lost its normalization");
    if (!q(a, a).is_zero()) throw StructureError("near vector is not isotropic");
    if (!q(b, b).is_zero()) subtract_column(q, u, b, a, q(b, b) * (sign * ExactScalar(2)).inverse());
    for (int i = a + 1; i < b; ++i) {
      if (!q(i, a).is_zero()) throw StructureError("inner vector pairs with the near end of its plane");
      if (!q(i, b).is_zero()) subtract_column(q, u, i, a, q(i, b) * sign.inverse());
    }
  }
  if (k % 2 == 1) {
    const int m = (k - 1) / 2;
    if (q(m, m) != ZExpr(form_sign(m))) throw StructureError("middle vector has the wrong self-pairing");
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const ZExpr expected = i + j == k - 1 ? ZExpr(form_sign(i)) : ZExpr();
      if (q(i, j) != expected) throw StructureError("normalized basis does not reproduce the form");
    }
  return u;
}

ZExpr wronskian_minor(const ZMatrix& w, const IndexSet& rows) {
  std::vector<int> cols;
  for (size_t j = 0; j < rows.size(); ++j) cols.push_back(static_cast<int>(j));
  if (rows.size() == 0) return ZExpr(1);
  return determinant_by_expansion(w.submatrix(rows.zero_based(), cols));
}

}  // namespace toda
