#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toda/config.hpp"
#include "toda/matrix_groups.hpp"
#include "toda/nu_basis.hpp"
#include "toda/zexpr.hpp"

namespace toda {

// Lambda and the free coordinates of C. For C_n and B_n lambda holds
// lambda_0..lambda_{n-1}; the rest follows from lambda_i lambda_{k-1-i} = 1
// (a trailing 1 for the B_n middle entry is accepted). For A_n lambda has all
// k entries with product 1.
struct SolutionParams {
  RationalVector lambda;
  UnipotentCoords coords;
};

// Identity Lambda and C for the algebra.
SolutionParams default_params(const AlgebraType& algebra);

// The full diagonal of Lambda. Throws ConfigError for non-positive or
// wrongly sized input and ProductConditionViolation for A_n when the product
// is not 1.
RationalVector expand_lambda(const AlgebraType& algebra, const RationalVector& lambda);

// e^{-U_i} = F_i^power * 2^log2_offset for the reduced C_n / B_n unknown U_i.
struct ReducedUnknown {
  int index = 1;  // 1-based
  Rational power{1};
  Rational log2_offset{0};
};

struct SolutionBundle {
  TodaConfig config;
  NuVector nu;
  ExactMatrix c;  // unipotent factor (empty for assemble_from_hermitian)
  RationalVector lambda;  // full diagonal of Lambda
  ExactMatrix h;          // H = C^dagger Lambda^2 C
  std::vector<ZExpr> f;   // f[m-1] = e^{-U~_m}, m = 1..k-1
  std::vector<ReducedUnknown> reduced;  // empty for A_n

  const ZExpr& F(int m) const { return f[static_cast<size_t>(m - 1)]; }
};

// Leading principal minors of R = W^dagger H W by Cauchy-Binet over the
// monomial Wronskian minors.
SolutionBundle assemble(const TodaConfig& config, const SolutionParams& params);
SolutionBundle assemble_from_hermitian(const TodaConfig& config, const ExactMatrix& h);

// The same minors computed from the full ZExpr matrix R; slow, for checks.
std::vector<ZExpr> principal_minors_direct(const ZMatrix& w, const ExactMatrix& h);

// Sum_i lambda_i^2 |nu_i + sum_{j<i} c_ij nu_j|^2 expanded directly.
ZExpr first_minor_from_rows(const NuVector& nu, const RationalVector& lambda, const ExactMatrix& c);

std::vector<ReducedUnknown> reduce(const TodaConfig& config);

// U_i at a point (real part of the logarithm of the positive value).
double reduced_value(const SolutionBundle& bundle, const ReducedUnknown& u, std::complex<double> z);

struct SymmetryReport {
  bool applicable = false;  // false for A_n
  bool pass = true;
  std::optional<int> first_failure;  // m with F_m != F_{k-m}
};

SymmetryReport verify_symmetry(const SolutionBundle& bundle);

struct MonodromyReport {
  bool algebraic_pass = true;
  bool analytic_pass = true;
  std::optional<SlotKey> algebraic_witness;  // a nonzero entry of C not fixed by g
  std::optional<ExponentPair> analytic_witness;  // a term of F_1 that is not single valued
  bool agree() const { return algebraic_pass == analytic_pass; }
  bool pass() const { return algebraic_pass && analytic_pass; }
};

// (a) C commutes with g_Gamma, tested entrywise on exponent differences.
// (b) every term z^a zbar^b of F_1 has a - b integral.
MonodromyReport verify_monodromy(const TodaConfig& config, const SolutionParams& params);
MonodromyReport verify_monodromy(const SolutionBundle& bundle);

struct CharacteristicData {
  OrdinaryOp op{std::vector<ZExpr>{ZExpr(1)}};
  RationalVector w;     // w[j-1] with W_j = w_j / z^{j+1}, j = 1..k-1
  RationalVector beta;  // characteristic exponents, length k
  bool annihilates_powers = false;  // op z^beta_i = 0 for all i
  bool annihilates_nu = false;      // op nu_i = 0 for all i
  bool matches_partial_sums = false;  // beta_i - beta_0 = mu_1 + ... + mu_i
  bool strictly_increasing = false;
};

// Throws StructureError when a composed coefficient is not a single
// w_j z^{-(j+1)} term.
CharacteristicData characteristic_data(const TodaConfig& config);

struct PdeSample {
  std::complex<double> point;
  int m = 1;
  double residual = 0;
};

struct PdeReport {
  bool pass = true;
  bool exact_pass = true;  // N_m == F_{m-1} F_{m+1} as expressions
  bool reduced_checked = false;
  bool reduced_pass = true;
  double max_residual = 0;
  double max_reduced_residual = 0;
  double tol = 1e-9;
  int points = 0;
  std::optional<PdeSample> worst;
};

// Points in 0.3 <= |z| <= 3 with |arg z| <= pi - 0.1, deterministic in seed.
std::vector<std::complex<double>> annulus_points(int count, uint64_t seed);

// Compares d dbar ln F_m = (F dd F - dF dbF) / F^2 with prod_j F_j^{-a_mj} on
// the A_{k-1} side, and the reduced C_n / B_n system for m <= n.
PdeReport verify_pde(const SolutionBundle& bundle, const std::vector<std::complex<double>>& points,
                     double tol = 1e-9, bool exact = true);

struct IntegrabilityRow {
  int m = 1;
  Rational exponent_at_zero;
  Rational exponent_at_infinity;
  Rational expected_at_zero;  // 2 gamma~_m
  bool pass = false;
};

struct IntegrabilityReport {
  bool pass = true;
  std::vector<IntegrabilityRow> rows;
};

IntegrabilityReport verify_integrability(const SolutionBundle& bundle);

struct ACaseForm {
  RationalVector lambda_hat;  // lambda_i^2 chi_i^2
  std::map<SlotKey, ExactScalar> c_hat;  // c_ij chi_j / chi_i
  RationalVector leading_exponents;  // mu_1 + ... + mu_i
  Rational lambda_hat_product;
  Rational expected_product;  // prod (sum mu)^{-2}
  bool product_matches = false;
  bool det_h_is_one = false;
  bool matches_bundle = false;  // |z|^{-2 alpha_1} (sum lambda^ |P_i|^2) == F_1
  bool forbidden_coordinates_zero = false;  // c_ij = 0 unless mu_{j+1}+...+mu_i integral
  std::vector<ZExpr> p;  // P_i(z)
};

// Throws ConfigError for non-A configurations and ProductConditionViolation
// when prod lambda != 1.
ACaseForm a_case_form(const TodaConfig& config, const SolutionParams& params);

// Float evaluation of F_1 for real (possibly irrational) gamma. Bypasses the
// exact machinery; coordinates are complex doubles keyed like UnipotentCoords.
double evaluate_f1_numeric(const AlgebraType& algebra, const std::vector<double>& gamma,
                           const std::vector<double>& lambda,
                           const std::map<SlotKey, std::complex<double>>& coords, std::complex<double> z);

}  // namespace toda
