#include "toda/toda_solutions.hpp"

#include <cmath>
#include <random>

#include "toda/errors.hpp"

namespace toda {

namespace {

bool is_folded(Family f) { return f == Family::B || f == Family::C; }

std::vector<std::vector<uint32_t>> masks_by_size(int k) {
  std::vector<std::vector<uint32_t>> out(static_cast<size_t>(k) + 1);
  for (uint32_t m = 1; m < (1u << k); ++m) out[static_cast<size_t>(__builtin_popcount(m))].push_back(m);
  return out;
}

ZMatrix to_zmatrix(const ExactMatrix& m) {
  return m.map([](const ExactScalar& x) { return ZExpr(x); });
}

ZMatrix conjugate_transpose(const ZMatrix& m) {
  return m.transpose().map([](const ZExpr& x) { return x.conjugate(); });
}

// F_m = sum_{|S|=|T|=m} H_{S,T} conj(W_{S,[m]}) W_{T,[m]}.
std::vector<ZExpr> leading_minors_cauchy_binet(const ZMatrix& w, const ExactMatrix& h) {
  const int k = w.rows();
  const auto by_size = masks_by_size(k);
  std::vector<ZExpr> f;
  for (int m = 1; m < k; ++m) {
    const auto& masks = by_size[static_cast<size_t>(m)];
    std::vector<ZExpr> wm;
    std::vector<ZExpr> wm_conj;
    for (uint32_t s : masks) {
      wm.push_back(wronskian_minor(w, IndexSet::from_mask(s)));
      wm_conj.push_back(wm.back().conjugate());
    }
    ZExpr fm;
    for (size_t a = 0; a < masks.size(); ++a) {
      if (wm_conj[a].is_zero()) continue;
      for (size_t b = 0; b < masks.size(); ++b) {
        if (wm[b].is_zero()) continue;
        const ExactScalar hst = minor(h, IndexSet::from_mask(masks[a]), IndexSet::from_mask(masks[b]));
        if (hst.is_zero()) continue;
        fm += (wm_conj[a] * wm[b]) * hst;
      }
    }
    f.push_back(std::move(fm));
  }
  return f;
}

SolutionBundle make_bundle(const TodaConfig& config, ExactMatrix c, RationalVector lambda, ExactMatrix h) {
  NuVector nu = nu_vector(config);
  const ZMatrix w = wronskian(nu);
  std::vector<ZExpr> f = leading_minors_cauchy_binet(w, h);
  return SolutionBundle{config, std::move(nu), std::move(c), std::move(lambda), std::move(h), std::move(f),
                        reduce(config)};
}

double positive_value(const ZExpr& e, std::complex<double> z) { return e.eval(z).real(); }

}  // namespace

SolutionParams default_params(const AlgebraType& algebra) {
  const int count = algebra.family == Family::A ? algebra.k() : algebra.rank;
  return {RationalVector(static_cast<size_t>(count), Rational(1)), make_coords(algebra, {})};
}

RationalVector expand_lambda(const AlgebraType& algebra, const RationalVector& lambda) {
  const int k = algebra.k();
  const int n = algebra.rank;
  for (const auto& l : lambda)
    if (l <= 0) throw ConfigError("lambda values must be positive, got " + to_string(l));
  if (algebra.family == Family::A) {
    if (static_cast<int>(lambda.size()) != k)
      throw ConfigError(algebra.name() + " needs " + std::to_string(k) + " lambda values");
    Rational prod(1);
    for (const auto& l : lambda) prod *= l;
    if (prod != 1) throw ProductConditionViolation("product of lambda is " + to_string(prod) + ", not 1");
    return lambda;
  }
  RationalVector head = lambda;
  if (algebra.family == Family::B && static_cast<int>(head.size()) == n + 1) {
    if (head.back() != 1) throw ConfigError("the middle lambda of " + algebra.name() + " must be 1");
    head.pop_back();
  }
  if (static_cast<int>(head.size()) != n)
    throw ConfigError(algebra.name() + " needs " + std::to_string(n) + " lambda values");
  RationalVector full(static_cast<size_t>(k), Rational(1));
  for (int i = 0; i < n; ++i) {
    full[static_cast<size_t>(i)] = head[static_cast<size_t>(i)];
    full[static_cast<size_t>(k - 1 - i)] = 1 / head[static_cast<size_t>(i)];
  }
  return full;
}

SolutionBundle assemble(const TodaConfig& config, const SolutionParams& params) {
  const RationalVector lambda = expand_lambda(config.algebra(), params.lambda);
  ExactMatrix c = unipotent_from_coords(config.algebra(), params.coords).entries;
  RationalVector squares;
  for (const auto& l : lambda) squares.push_back(l * l);
  ExactMatrix h = conjugate_transpose(c) * diagonal_matrix(squares) * c;
  return make_bundle(config, std::move(c), lambda, std::move(h));
}

SolutionBundle assemble_from_hermitian(const TodaConfig& config, const ExactMatrix& h) {
  if (h.rows() != config.k() || !is_hermitian(h))
    throw StructureError("expected a Hermitian " + std::to_string(config.k()) + "x" + std::to_string(config.k()) +
                         " matrix");
  return make_bundle(config, ExactMatrix(), RationalVector(), h);
}

std::vector<ZExpr> principal_minors_direct(const ZMatrix& w, const ExactMatrix& h) {
  const ZMatrix r = conjugate_transpose(w) * to_zmatrix(h) * w;
  std::vector<ZExpr> out;
  for (int m = 1; m < r.rows(); ++m) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i) idx.push_back(i);
    out.push_back(determinant_by_expansion(r.submatrix(idx, idx)));
  }
  return out;
}

ZExpr first_minor_from_rows(const NuVector& nu, const RationalVector& lambda, const ExactMatrix& c) {
  const int k = static_cast<int>(nu.nu.size());
  ZExpr out;
  for (int i = 0; i < k; ++i) {
    ZExpr row;
    for (int j = 0; j <= i; ++j) row += nu.nu[static_cast<size_t>(j)] * c(i, j);
    const Rational sq = lambda[static_cast<size_t>(i)] * lambda[static_cast<size_t>(i)];
    out += (row.conjugate() * row) * ExactScalar(sq);
  }
  return out;
}

std::vector<ReducedUnknown> reduce(const TodaConfig& config) {
  std::vector<ReducedUnknown> out;
  const int n = config.rank();
  if (config.family() == Family::C) {
    for (int i = 1; i <= n; ++i) out.push_back({i, Rational(1), Rational(0)});
  } else if (config.family() == Family::B) {
    for (int i = 1; i <= n; ++i) {
      const Rational scale = i == n ? Rational(1, 2) : Rational(1);
      out.push_back({i, scale, scale * i});
    }
  }
  return out;
}

double reduced_value(const SolutionBundle& bundle, const ReducedUnknown& u, std::complex<double> z) {
  const double f = positive_value(bundle.F(u.index), z);
  return -(to_double(u.power) * std::log(f) + to_double(u.log2_offset) * std::log(2.0));
}

SymmetryReport verify_symmetry(const SolutionBundle& bundle) {
  SymmetryReport report;
  if (!is_folded(bundle.config.family())) return report;
  report.applicable = true;
  const int k = bundle.config.k();
  for (int m = 1; m < k; ++m) {
    if (bundle.F(m) != bundle.F(k - m)) {
      report.pass = false;
      report.first_failure = m;
      return report;
    }
  }
  return report;
}

MonodromyReport verify_monodromy(const TodaConfig& config, const SolutionParams& params) {
  return verify_monodromy(assemble(config, params));
}

MonodromyReport verify_monodromy(const SolutionBundle& bundle) {
  MonodromyReport report;
  const TodaConfig& config = bundle.config;
  const MonodromyElement g = monodromy_element(config.algebra(), config.gamma());
  const ExactMatrix& m = bundle.c.rows() > 0 ? bundle.c : bundle.h;
  const int k = config.k();
  // Prefer a free coordinate as the witness; band order otherwise.
  for (const auto& slot : free_slots(config.algebra())) {
    if (!m(slot.row, slot.col).is_zero() && !g.entry_allowed(slot.row, slot.col)) {
      report.algebraic_pass = false;
      report.algebraic_witness = SlotKey{slot.row, slot.col};
      break;
    }
  }
  if (report.algebraic_pass) {
    for (int i = 0; i < k && report.algebraic_pass; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j && !m(i, j).is_zero() && !g.entry_allowed(i, j)) {
          report.algebraic_pass = false;
          report.algebraic_witness = SlotKey{std::max(i, j), std::min(i, j)};
          break;
        }
  }
  for (const auto& [key, coeff] : bundle.F(1).terms()) {
    (void)coeff;
    if (!is_integer(key.first - key.second)) {
      report.analytic_pass = false;
      report.analytic_witness = key;
      break;
    }
  }
  return report;
}

CharacteristicData characteristic_data(const TodaConfig& config) {
  const int k = config.k();
  const RationalVector& at = config.alpha_tilde();
  auto alpha_at = [&](int i) { return (i <= 0 || i >= k) ? Rational(0) : at[static_cast<size_t>(i - 1)]; };

  std::vector<FirstOrderOp> factors;
  for (int i = k - 1; i >= 0; --i)
    factors.emplace_back(ZExpr::monomial(ExactScalar(Rational(alpha_at(i + 1) - alpha_at(i))), -1));
  CharacteristicData data;
  data.op = compose(factors);
  const auto& coeffs = data.op.coefficients();
  if (!coeffs[1].is_zero()) throw StructureError("first-order coefficient does not vanish: " + coeffs[1].to_string());
  for (int j = 1; j < k; ++j) {
    const ZExpr& wj = coeffs[static_cast<size_t>(j + 1)];
    if (wj.is_zero()) {
      data.w.push_back(Rational(0));
      continue;
    }
    const Monomial t = wj.single_term();
    if (t.exp_z != -(j + 1) || t.exp_zbar != 0 || !t.coeff.is_real())
      throw StructureError("coefficient W_" + std::to_string(j) + " = " + wj.to_string() +
                           " is not a real multiple of z^-" + std::to_string(j + 1));
    data.w.push_back(t.coeff.re());
  }

  for (int i = 0; i < k; ++i) data.beta.push_back(alpha_at(i) - alpha_at(i + 1) + i);

  data.annihilates_powers = true;
  for (const auto& b : data.beta)
    if (!apply(data.op, ZExpr::z_pow(b)).is_zero()) data.annihilates_powers = false;
  const NuVector nu = nu_vector(config);
  data.annihilates_nu = true;
  for (const auto& v : nu.nu)
    if (!apply(data.op, v).is_zero()) data.annihilates_nu = false;
  data.matches_partial_sums = true;
  Rational partial = 0;
  for (int i = 1; i < k; ++i) {
    partial += config.mu_tilde()[static_cast<size_t>(i - 1)];
    if (data.beta[static_cast<size_t>(i)] - data.beta[0] != partial) data.matches_partial_sums = false;
  }
  data.strictly_increasing = true;
  for (int i = 1; i < k; ++i)
    if (data.beta[static_cast<size_t>(i)] <= data.beta[static_cast<size_t>(i - 1)]) data.strictly_increasing = false;
  return data;
}

std::vector<std::complex<double>> annulus_points(int count, uint64_t seed) {
  std::mt19937_64 engine(seed);
  auto unit = [&]() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
  const double pi = std::acos(-1.0);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < count; ++i) {
    const double r = 0.3 + 2.7 * unit();
    const double theta = (2 * unit() - 1) * (pi - 0.1);
    out.push_back(std::polar(r, theta));
  }
  return out;
}

PdeReport verify_pde(const SolutionBundle& bundle, const std::vector<std::complex<double>>& points, double tol,
                     bool exact) {
  PdeReport report;
  report.tol = tol;
  report.points = static_cast<int>(points.size());
  const TodaConfig& config = bundle.config;
  const int k = config.k();
  const CartanData a_side = cartan(config.a_side());

  std::vector<ZExpr> numerators;
  for (int m = 1; m < k; ++m) {
    const ZExpr& f = bundle.F(m);
    ZExpr num = f * f.diff_z().diff_zbar() - f.diff_z() * f.diff_zbar();
    if (exact) {
      const ZExpr below = m == 1 ? ZExpr(1) : bundle.F(m - 1);
      const ZExpr above = m == k - 1 ? ZExpr(1) : bundle.F(m + 1);
      if (num != below * above) report.exact_pass = false;
    }
    numerators.push_back(std::move(num));
  }

  const std::vector<ReducedUnknown>& reduced = bundle.reduced;
  std::optional<CartanData> own;
  if (!reduced.empty()) {
    own = cartan(config.algebra());
    report.reduced_checked = true;
  }

  for (const auto& z : points) {
    std::vector<double> fv;
    for (int m = 1; m < k; ++m) fv.push_back(positive_value(bundle.F(m), z));
    for (int m = 1; m < k; ++m) {
      const double fm = fv[static_cast<size_t>(m - 1)];
      const double lhs = numerators[static_cast<size_t>(m - 1)].eval(z).real() / (fm * fm);
      double log_rhs = 0;
      for (int j = 1; j < k; ++j)
        log_rhs -= static_cast<double>(a_side.a(m - 1, j - 1)) * std::log(fv[static_cast<size_t>(j - 1)]);
      const double rhs = std::exp(log_rhs);
      const double residual = std::abs(lhs - rhs) / std::abs(rhs);
      if (!(residual <= report.max_residual)) {
        report.max_residual = residual;
        report.worst = PdeSample{z, m, residual};
      }
    }
    if (own) {
      const int n = config.rank();
      std::vector<double> u;
      for (const auto& r : reduced) u.push_back(reduced_value(bundle, r, z));
      for (int i = 1; i <= n; ++i) {
        const auto& r = reduced[static_cast<size_t>(i - 1)];
        const double fi = fv[static_cast<size_t>(i - 1)];
        const double lap = -to_double(r.power) * numerators[static_cast<size_t>(i - 1)].eval(z).real() / (fi * fi);
        double exponent = 0;
        for (int j = 1; j <= n; ++j)
          exponent += static_cast<double>(own->a(i - 1, j - 1)) * u[static_cast<size_t>(j - 1)];
        const double source = std::exp(exponent);
        const double residual = std::abs(lap + source) / source;
        if (!(residual <= report.max_reduced_residual)) report.max_reduced_residual = residual;
      }
    }
  }
  report.reduced_pass = report.max_reduced_residual < tol;
  report.pass = report.max_residual < tol && report.exact_pass && report.reduced_pass;
  return report;
}

IntegrabilityReport verify_integrability(const SolutionBundle& bundle) {
  IntegrabilityReport report;
  const TodaConfig& config = bundle.config;
  const int k = config.k();
  const CartanData a_side = cartan(config.a_side());
  for (int m = 1; m < k; ++m) {
    IntegrabilityRow row;
    row.m = m;
    row.exponent_at_zero = 0;
    row.exponent_at_infinity = 0;
    for (int j = 1; j < k; ++j) {
      const long a = a_side.a(m - 1, j - 1);
      if (a == 0) continue;
      row.exponent_at_zero -= Rational(a) * bundle.F(j).min_total_degree();
      row.exponent_at_infinity -= Rational(a) * bundle.F(j).max_total_degree();
    }
    row.expected_at_zero = 2 * config.gamma_tilde()[static_cast<size_t>(m - 1)];
    row.pass = row.exponent_at_zero == row.expected_at_zero && row.exponent_at_zero > -2 &&
               row.exponent_at_infinity < -2;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

ACaseForm a_case_form(const TodaConfig& config, const SolutionParams& params) {
  if (config.family() != Family::A) throw ConfigError("a_case_form needs an A_n configuration");
  const SolutionBundle bundle = assemble(config, params);
  const int k = config.k();
  const RationalVector& chi = bundle.nu.chi;
  const RationalVector& mu = config.mu_tilde();

  ACaseForm out;
  out.lambda_hat_product = 1;
  for (int i = 0; i < k; ++i) {
    const Rational l = bundle.lambda[static_cast<size_t>(i)] * chi[static_cast<size_t>(i)];
    out.lambda_hat.push_back(l * l);
    out.lambda_hat_product *= l * l;
  }
  out.expected_product = 1;
  for (int i = 1; i < k; ++i) {
    Rational s = 0;
    for (int j = i; j < k; ++j) {
      s += mu[static_cast<size_t>(j - 1)];
      out.expected_product /= s * s;
    }
  }
  out.product_matches = out.lambda_hat_product == out.expected_product;
  out.det_h_is_one = determinant(bundle.h).is_one();

  Rational s = 0;
  out.leading_exponents.push_back(0);
  for (int i = 1; i < k; ++i) {
    s += mu[static_cast<size_t>(i - 1)];
    out.leading_exponents.push_back(s);
  }
  out.forbidden_coordinates_zero = true;
  for (int i = 0; i < k; ++i) {
    ZExpr p = ZExpr::z_pow(out.leading_exponents[static_cast<size_t>(i)]);
    for (int j = 0; j < i; ++j) {
      const ExactScalar cij = bundle.c(i, j);
      if (cij.is_zero()) continue;
      const ExactScalar chat = cij * ExactScalar(Rational(chi[static_cast<size_t>(j)] / chi[static_cast<size_t>(i)]));
      out.c_hat[{i, j}] = chat;
      p += ZExpr::monomial(chat, out.leading_exponents[static_cast<size_t>(j)]);
      if (!is_integer(out.leading_exponents[static_cast<size_t>(i)] - out.leading_exponents[static_cast<size_t>(j)]))
        out.forbidden_coordinates_zero = false;
    }
    out.p.push_back(std::move(p));
  }
  ZExpr sum;
  for (int i = 0; i < k; ++i)
    sum += (out.p[static_cast<size_t>(i)].conjugate() * out.p[static_cast<size_t>(i)]) *
           ExactScalar(out.lambda_hat[static_cast<size_t>(i)]);
  const Rational a1 = config.alpha().front();
  out.matches_bundle = ZExpr::monomial(ExactScalar(1), -a1, -a1) * sum == bundle.F(1);
  return out;
}

double evaluate_f1_numeric(const AlgebraType& algebra, const std::vector<double>& gamma,
                           const std::vector<double>& lambda,
                           const std::map<SlotKey, std::complex<double>>& coords, std::complex<double> z) {
  algebra.validate();
  const int k = algebra.k();
  const int n = algebra.rank;
  if (static_cast<int>(gamma.size()) != n) throw ConfigError("wrong number of gamma values");
  for (double g : gamma)
    if (!(g > -1)) throw ConfigError("gamma values must be > -1");
  std::vector<double> gt;
  for (int m = 1; m < k; ++m) gt.push_back(gamma[static_cast<size_t>(fold_index(algebra, m) - 1)]);
  const CartanData a_side = cartan({Family::A, k - 1});
  std::vector<double> at(static_cast<size_t>(k - 1), 0.0);
  for (int i = 0; i < k - 1; ++i)
    for (int j = 0; j < k - 1; ++j)
      at[static_cast<size_t>(i)] += to_double(a_side.a_inv(i, j)) * gt[static_cast<size_t>(j)];

  std::vector<double> full(static_cast<size_t>(k), 1.0);
  if (algebra.family == Family::A) {
    if (static_cast<int>(lambda.size()) != k) throw ConfigError("wrong number of lambda values");
    full = lambda;
  } else {
    if (static_cast<int>(lambda.size()) < n) throw ConfigError("wrong number of lambda values");
    for (int i = 0; i < n; ++i) {
      full[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)];
      full[static_cast<size_t>(k - 1 - i)] = 1.0 / lambda[static_cast<size_t>(i)];
    }
  }

  if (z == 0.0) throw OriginError("numeric evaluation at the origin");
  if (z.imag() == 0.0 && z.real() < 0) throw BranchCutError("numeric evaluation on the branch cut");
  const std::complex<double> log_z = std::log(z);
  std::vector<std::complex<double>> nu;
  double exponent = 0;
  for (int i = 0; i < k; ++i) {
    double denom = 1;
    if (i > 0) {
      exponent += gt[static_cast<size_t>(i - 1)] + 1;
      double tail = 0;
      for (int j = i; j >= 1; --j) {
        tail += gt[static_cast<size_t>(j - 1)] + 1;
        denom *= tail;
      }
    }
    nu.push_back(std::exp((exponent - at[0]) * log_z) / denom);
  }
  const Matrix<std::complex<double>> c = solve_unipotent<std::complex<double>>(algebra, coords);
  double f = 0;
  for (int i = 0; i < k; ++i) {
    std::complex<double> row = 0;
    for (int j = 0; j <= i; ++j) row += c(i, j) * nu[static_cast<size_t>(j)];
    f += full[static_cast<size_t>(i)] * full[static_cast<size_t>(i)] * std::norm(row);
  }
  return f;
}

}  // namespace toda
