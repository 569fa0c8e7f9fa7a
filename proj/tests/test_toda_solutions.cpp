#include <gtest/gtest.h>

#include "toda/errors.hpp"
#include "toda/toda_solutions.hpp"

using namespace toda;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

const AlgebraType kA1{Family::A, 1};
const AlgebraType kA2{Family::A, 2};
const AlgebraType kB2{Family::B, 2};
const AlgebraType kC2{Family::C, 2};
const AlgebraType kC3{Family::C, 3};

SolutionParams params(const AlgebraType& a, RationalVector lambda, std::map<std::string, ExactScalar> coords) {
  return {std::move(lambda), make_coords(a, coords)};
}

SolutionBundle c3_worked() {
  const TodaConfig config(kC3, {q(-1, 2), q(1, 4), 1});
  return assemble(config, params(kC3, {2, q(1, 3), 1}, {{"c32", ExactScalar(1)}, {"c40", ExactScalar(q(1, 2), -1)}}));
}

SolutionBundle b2_worked() {
  const TodaConfig config(kB2, {q(-1, 2), q(1, 4)});
  return assemble(config, params(kB2, {1, 2}, {{"c30", ExactScalar(1, 1)}}));
}

// Random (gamma, Lambda, C in N_Gamma).
SolutionBundle random_bundle(const AlgebraType& a, uint64_t seed) {
  Sampler s(seed);
  const TodaConfig config(a, s.gamma(a.rank, {1, 2, 4}));
  SolutionParams p = default_params(a);
  RationalVector lam = s.lambda(a, 3);
  if (a.family == Family::A) {
    p.lambda = lam;
  } else {
    p.lambda.assign(lam.begin(), lam.begin() + a.rank);
  }
  p.coords = restrict_to_ngamma(a, s.coords(a, 3), delta_gamma(a, config.gamma())).coords;
  return assemble(config, p);
}

}  // namespace

TEST(Assemble, Liouville) {
  const auto b = assemble(TodaConfig(kA1, {0}), default_params(kA1));
  EXPECT_EQ(b.F(1), ZExpr(1) + ZExpr::monomial(1, 1, 1));
  EXPECT_TRUE(b.reduced.empty());
}

TEST(Assemble, RadialB2) {
  const auto b = assemble(TodaConfig(kB2, {0, 0}), default_params(kB2));
  const long den[] = {1, 1, 2, 6, 24};
  ZExpr expected;
  for (int i = 0; i < 5; ++i) expected += ZExpr::monomial(ExactScalar(Rational(1, den[i] * den[i])), i, i);
  EXPECT_EQ(b.F(1), expected);
}

TEST(Assemble, AgreesWithDirectExpansion) {
  const auto b = b2_worked();
  EXPECT_EQ(first_minor_from_rows(b.nu, b.lambda, b.c), b.F(1));
  const auto direct = principal_minors_direct(wronskian(b.nu), b.h);
  ASSERT_EQ(direct.size(), b.f.size());
  for (size_t m = 0; m < direct.size(); ++m) EXPECT_EQ(direct[m], b.f[m]) << m + 1;
}

TEST(Assemble, FromHermitianMatchesFactored) {
  const auto b = b2_worked();
  const auto again = assemble_from_hermitian(b.config, b.h);
  EXPECT_EQ(again.f, b.f);
}

TEST(Lambda, Expansion) {
  EXPECT_EQ(expand_lambda(kB2, {2, 3}), (RationalVector{2, 3, 1, q(1, 3), q(1, 2)}));
  EXPECT_EQ(expand_lambda(kB2, {2, 3, 1}), (RationalVector{2, 3, 1, q(1, 3), q(1, 2)}));
  EXPECT_EQ(expand_lambda(kC2, {2, 3}), (RationalVector{2, 3, q(1, 3), q(1, 2)}));
  EXPECT_THROW(expand_lambda(kC2, {2, 0}), ConfigError);
  EXPECT_THROW(expand_lambda(kA2, {1, 2, 3}), ProductConditionViolation);
  EXPECT_EQ(expand_lambda(kA2, {2, q(1, 4), 2}).size(), 3u);
}

TEST(Reduce, C3IsIdentity) {
  for (const auto& r : reduce(TodaConfig(kC3, {0, 0, 0}))) {
    EXPECT_EQ(r.power, 1);
    EXPECT_EQ(r.log2_offset, 0);
  }
}

TEST(Reduce, BOffsetsAreLastInverseCartanColumn) {
  for (int n = 2; n <= 5; ++n) {
    const AlgebraType a{Family::B, n};
    const auto red = reduce(TodaConfig(a, RationalVector(static_cast<size_t>(n), Rational(0))));
    const auto inv = cartan(a).a_inv;
    ASSERT_EQ(red.size(), static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(red[static_cast<size_t>(i)].log2_offset, inv(i, n - 1));
      EXPECT_EQ(red[static_cast<size_t>(i)].log2_offset, i + 1 < n ? Rational(i + 1) : q(n, 2));
      EXPECT_EQ(red[static_cast<size_t>(i)].power, i + 1 < n ? Rational(1) : q(1, 2));
    }
  }
}

TEST(Reduce, B2FirstUnknownDoublesF1) {
  const auto b = b2_worked();
  const std::complex<double> z(0.8, 0.6);
  const double f1 = eval(b.F(1), z).real();
  EXPECT_NEAR(std::exp(-reduced_value(b, b.reduced[0], z)), 2 * f1, 1e-12 * f1);
}

TEST(Symmetry, SymplecticPassesAndVacuousForA) {
  EXPECT_TRUE(verify_symmetry(c3_worked()).pass);
  const auto a1 = verify_symmetry(assemble(TodaConfig(kA1, {0}), default_params(kA1)));
  EXPECT_FALSE(a1.applicable);
}

TEST(Symmetry, NonSymplecticHermitianBreaksIt) {
  // k = 4, a unipotent C that is only in SL(4)
  ExactMatrix c = ExactMatrix::identity(4);
  c(1, 0) = ExactScalar(1);
  c(3, 2) = ExactScalar(2);
  const ExactMatrix h = conjugate_transpose(c) * c;
  const auto b = assemble_from_hermitian(TodaConfig(kC2, {0, 0}), h);
  const auto rep = verify_symmetry(b);
  EXPECT_TRUE(rep.applicable);
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.first_failure, 1);
}

TEST(Monodromy, B2WorkedCoordinates) {
  const TodaConfig config(kB2, {q(-1, 2), q(1, 4)});
  EXPECT_TRUE(verify_monodromy(config, params(kB2, {1, 1}, {{"c30", ExactScalar(3)}})).pass());
  const auto bad = verify_monodromy(config, params(kB2, {1, 1}, {{"c10", ExactScalar(1)}}));
  EXPECT_FALSE(bad.algebraic_pass);
  EXPECT_FALSE(bad.analytic_pass);
  ASSERT_TRUE(bad.algebraic_witness.has_value());
  EXPECT_EQ(*bad.algebraic_witness, SlotKey(1, 0));
}

TEST(Monodromy, IntegralGammaAcceptsAnyC) {
  Sampler s(1);
  for (const AlgebraType& a : {kB2, kC3, kA2}) {
    const TodaConfig config(a, RationalVector(static_cast<size_t>(a.rank), Rational(1)));
    SolutionParams p = default_params(a);
    p.coords = s.coords(a, 3);
    EXPECT_TRUE(verify_monodromy(config, p).pass());
  }
}

TEST(Characteristic, Liouville) {
  const Rational g = q(2, 3);
  const TodaConfig config(kA1, {g});
  const Rational a = g / 2;
  const auto d = characteristic_data(config);
  ASSERT_EQ(d.w.size(), 1u);
  EXPECT_EQ(d.w[0], -a * (a + 1));
  EXPECT_EQ(d.beta, (RationalVector{-a, a + 1}));
}

TEST(Characteristic, ZeroGamma) {
  const auto d = characteristic_data(TodaConfig(kC3, {0, 0, 0}));
  for (const auto& w : d.w) EXPECT_EQ(w, 0);
  EXPECT_EQ(d.beta, (RationalVector{0, 1, 2, 3, 4, 5}));
}

TEST(CharacteristicProperty, PartialSumsAndAnnihilation) {
  Sampler s(77);
  for (Family f : {Family::A, Family::B, Family::C})
    for (int n = 1; n <= 3; ++n)
      for (int t = 0; t < 8; ++t) {
        const TodaConfig config({f, n}, s.gamma(n, {1, 2, 3, 5}));
        const auto d = characteristic_data(config);
        EXPECT_TRUE(d.annihilates_powers && d.annihilates_nu && d.matches_partial_sums && d.strictly_increasing);
        Rational partial = 0;
        for (size_t i = 1; i < d.beta.size(); ++i) {
          partial += config.mu_tilde()[i - 1];
          EXPECT_EQ(d.beta[i] - d.beta[0], partial);
        }
        for (size_t j = 1; j < d.op.coefficients().size(); ++j) {
          const auto& c = d.op.coefficients()[j];
          if (c.is_zero()) continue;
          ASSERT_TRUE(c.is_monomial());
          EXPECT_EQ(c.single_term().exp_z, -Rational(static_cast<long>(j)));
        }
      }
}

TEST(Pde, LiouvilleClosedForm) {
  const auto b = assemble(TodaConfig(kA1, {0}), default_params(kA1));
  const std::complex<double> z(1, 1);
  const double f = eval(b.F(1), z).real();
  EXPECT_NEAR(f, 3.0, 1e-14);
  const auto rep = verify_pde(b, {z});
  EXPECT_TRUE(rep.pass);
  EXPECT_TRUE(rep.exact_pass);
  EXPECT_LT(rep.max_residual, 1e-12);
}

TEST(Pde, WorkedConfigurations) {
  for (const auto& b : {c3_worked(), b2_worked()}) {
    const auto rep = verify_pde(b, annulus_points(20, 3));
    EXPECT_TRUE(rep.pass) << b.config.algebra().name() << " " << rep.max_residual;
    EXPECT_TRUE(rep.reduced_checked);
    EXPECT_TRUE(rep.reduced_pass);
    EXPECT_LT(rep.max_residual, 1e-9);
  }
}

TEST(Pde, RadialNonIntegralB2) {
  const auto b = assemble(TodaConfig(kB2, {q(1, 3), q(-1, 5)}), default_params(kB2));
  EXPECT_TRUE(verify_pde(b, annulus_points(20, 1)).pass);
}

TEST(Pde, BrokenSolutionIsCaught) {
  auto b = b2_worked();
  b.f[0] += ZExpr::monomial(1, 1, 0) + ZExpr::monomial(1, 0, 1);
  const auto rep = verify_pde(b, annulus_points(10, 2));
  EXPECT_FALSE(rep.pass);
  EXPECT_FALSE(rep.exact_pass);
  EXPECT_TRUE(rep.worst.has_value());
}

TEST(AnnulusPoints, StayInsideRegion) {
  for (auto z : annulus_points(200, 5)) {
    EXPECT_GE(std::abs(z), 0.3 - 1e-12);
    EXPECT_LE(std::abs(z), 3.0 + 1e-12);
    EXPECT_LE(std::abs(std::arg(z)), M_PI - 0.1 + 1e-12);
  }
  EXPECT_EQ(annulus_points(5, 9), annulus_points(5, 9));
}

TEST(Integrability, Liouville) {
  const auto rep = verify_integrability(assemble(TodaConfig(kA1, {0}), default_params(kA1)));
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.rows[0].exponent_at_zero, 0);
  EXPECT_EQ(rep.rows[0].exponent_at_infinity, -4);
}

TEST(Integrability, ZeroExponentIsTwiceGamma) {
  const auto b = c3_worked();
  const auto rep = verify_integrability(b);
  EXPECT_TRUE(rep.pass);
  for (const auto& row : rep.rows) {
    EXPECT_EQ(row.exponent_at_zero, 2 * b.config.gamma_tilde()[static_cast<size_t>(row.m - 1)]);
    EXPECT_LT(row.exponent_at_infinity, -2);
  }
}

TEST(IntegrabilityProperty, ParametersDoNotMoveExponents) {
  for (const AlgebraType& a : {kC2, kB2, kA2}) {
    for (uint64_t seed = 0; seed < 5; ++seed) {
      const auto b = random_bundle(a, seed);
      const auto base = verify_integrability(assemble(b.config, default_params(a)));
      const auto rep = verify_integrability(b);
      ASSERT_EQ(base.rows.size(), rep.rows.size());
      for (size_t i = 0; i < rep.rows.size(); ++i) {
        EXPECT_EQ(rep.rows[i].exponent_at_zero, base.rows[i].exponent_at_zero);
        EXPECT_EQ(rep.rows[i].exponent_at_infinity, base.rows[i].exponent_at_infinity);
      }
    }
  }
}

TEST(ACase, ProductCondition) {
  const TodaConfig config(kA2, {0, 0});
  const auto form = a_case_form(config, default_params(kA2));
  EXPECT_EQ(form.lambda_hat_product, q(1, 4));
  EXPECT_EQ(form.expected_product, q(1, 4));
  EXPECT_TRUE(form.product_matches && form.det_h_is_one && form.matches_bundle && form.forbidden_coordinates_zero);
  EXPECT_THROW(a_case_form(TodaConfig(kB2, {0, 0}), default_params(kB2)), ConfigError);
}

TEST(ACase, LeadingTermsAndForbiddenCoordinates) {
  const AlgebraType a3{Family::A, 3};
  const TodaConfig config(a3, {q(1, 2), q(1, 3), 0});
  const auto form = a_case_form(config, params(a3, {2, q(1, 2), 3, q(1, 3)}, {{"c32", ExactScalar(5)}}));
  EXPECT_TRUE(form.forbidden_coordinates_zero);
  EXPECT_TRUE(form.matches_bundle);
  Rational partial = 0;
  for (size_t i = 0; i < form.p.size(); ++i) {
    if (i > 0) partial += config.mu_tilde()[i - 1];
    EXPECT_EQ(form.p[i].max_total_degree(), partial);
    EXPECT_EQ(form.leading_exponents[i], partial);
  }
  const auto bad = a_case_form(config, params(a3, {1, 1, 1, 1}, {{"c10", ExactScalar(1)}}));
  EXPECT_FALSE(bad.forbidden_coordinates_zero);
}

TEST(SolutionProperty, SymmetryRealityPositivityAndDeterminant) {
  const auto points = annulus_points(8, 4);
  for (const AlgebraType& a : {kC2, kC3, kB2}) {
    for (uint64_t seed = 0; seed < 6; ++seed) {
      const auto b = random_bundle(a, seed * 13 + 1);
      EXPECT_TRUE(verify_symmetry(b).pass);
      EXPECT_TRUE(is_in_group(b.h));
      EXPECT_EQ(determinant(b.h), ExactScalar(1));
      EXPECT_TRUE(verify_monodromy(b).pass());
      for (const auto& f : b.f) {
        EXPECT_EQ(conjugate(f), f);
        for (auto z : points) EXPECT_GT(eval(f, z).real(), 0);
      }
    }
  }
}

TEST(Numeric, MatchesExactF1) {
  const auto b = b2_worked();
  std::map<SlotKey, std::complex<double>> coords{{{3, 0}, {1, 1}}};
  for (auto z : annulus_points(5, 8)) {
    const double exact = eval(b.F(1), z).real();
    const double numeric = evaluate_f1_numeric(kB2, {-0.5, 0.25}, {1, 2}, coords, z);
    EXPECT_NEAR(numeric, exact, 1e-10 * exact);
  }
  // irrational gamma only goes through the float path
  const double v = evaluate_f1_numeric(kC2, {std::sqrt(2.0) - 1, 0.1}, {1, 1}, {}, {1.2, 0.3});
  EXPECT_GT(v, 0);
}
