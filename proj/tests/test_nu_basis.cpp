#include <gtest/gtest.h>

#include "toda/config.hpp"
#include "toda/errors.hpp"
#include "toda/matrix_groups.hpp"
#include "toda/nu_basis.hpp"

using namespace toda;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

ZMatrix form_as_zmatrix(int k) {
  const auto j = form_matrix(k).entries;
  ZMatrix out(k, k, ZExpr());
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) out(r, c) = ZExpr(j(r, c));
  return out;
}

bool is_unipotent_upper(const ZMatrix& u) {
  for (int i = 0; i < u.rows(); ++i)
    for (int j = 0; j <= i; ++j)
      if (u(i, j) != (i == j ? ZExpr(1) : ZExpr())) return false;
  return true;
}

std::vector<TodaConfig> sample_configs(uint64_t seed, int per_algebra) {
  Sampler s(seed);
  std::vector<TodaConfig> out;
  for (Family f : {Family::A, Family::B, Family::C})
    for (int n = 1; n <= 3; ++n)
      for (int t = 0; t < per_algebra; ++t) out.emplace_back(AlgebraType{f, n}, s.gamma(n, {1, 2, 3, 4, 5}));
  return out;
}

}  // namespace

TEST(Sigma, Liouville) {
  const auto s = sigma_vector({1});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], ZExpr(1));
  EXPECT_EQ(s[1], ZExpr::z_pow(1));
}

TEST(Sigma, EqualExponents) {
  const auto s = sigma_vector({1, 1});
  EXPECT_EQ(s[2], ZExpr::monomial(ExactScalar(q(1, 2)), 2));
}

TEST(Sigma, B2LastDenominator) {
  const Rational m1 = q(2, 3), m2 = q(5, 7);
  const auto s = sigma_vector({m1, m2, m2, m1});
  const Rational den = 2 * m1 * (m1 + m2) * (m1 + m2) * (m1 + 2 * m2);
  EXPECT_EQ(s[4], ZExpr::monomial(ExactScalar(1 / den), 2 * m1 + 2 * m2));
  EXPECT_EQ(s[3], ZExpr::monomial(ExactScalar(1 / (2 * m2 * m2 * (m1 + 2 * m2))), m1 + 2 * m2));
}

TEST(Sigma, RejectsNonPositiveMu) { EXPECT_THROW(sigma_vector({1, 0}), ConfigError); }

TEST(Nu, C3PrefactorAndDenominators) {
  const RationalVector g{q(-1, 2), q(1, 4), 1};
  const TodaConfig config({Family::C, 3}, g);
  const auto nu = nu_vector(config);
  const Rational m1 = g[0] + 1, m2 = g[1] + 1, m3 = g[2] + 1;
  const Rational shift = -(g[0] + g[1] + g[2] / 2);
  const std::vector<std::pair<Rational, Rational>> expected = {
      {1, 0},
      {1 / m1, m1},
      {1 / (m2 * (m1 + m2)), m1 + m2},
      {1 / (m3 * (m2 + m3) * (m1 + m2 + m3)), m1 + m2 + m3},
      {1 / (m2 * (m2 + m3) * (2 * m2 + m3) * (m1 + 2 * m2 + m3)), m1 + 2 * m2 + m3},
      {1 / (m1 * (m2 + m1) * (m1 + m2 + m3) * (m1 + 2 * m2 + m3) * (2 * m1 + 2 * m2 + m3)), 2 * m1 + 2 * m2 + m3}};
  ASSERT_EQ(nu.nu.size(), 6u);
  for (size_t i = 0; i < 6; ++i)
    EXPECT_EQ(nu.nu[i], ZExpr::monomial(ExactScalar(expected[i].first), expected[i].second + shift)) << i;
}

TEST(Nu, B2Example) {
  const TodaConfig config({Family::B, 2}, {q(-1, 2), q(1, 4)});
  const auto nu = nu_vector(config);
  EXPECT_EQ(nu.chi.back(), q(16, 147));
  EXPECT_EQ(nu.xi_exponent, q(-1, 4));
}

TEST(Nu, RadialCases) {
  const auto a1 = nu_vector(TodaConfig({Family::A, 1}, {0}));
  EXPECT_EQ(a1.nu, (std::vector<ZExpr>{ZExpr(1), ZExpr::z_pow(1)}));
  const auto b2 = nu_vector(TodaConfig({Family::B, 2}, {0, 0}));
  EXPECT_EQ(b2.chi, (RationalVector{1, 1, q(1, 2), q(1, 6), q(1, 24)}));
}

TEST(Wronskian, Liouville) {
  const auto w = wronskian(nu_vector(TodaConfig({Family::A, 1}, {0})));
  EXPECT_EQ(w(0, 0), ZExpr(1));
  EXPECT_EQ(w(0, 1), ZExpr());
  EXPECT_EQ(w(1, 0), ZExpr::z_pow(1));
  EXPECT_EQ(w(1, 1), ZExpr(1));
  EXPECT_EQ(determinant(w), ZExpr(1));
}

TEST(Wronskian, FirstColumnIsNu) {
  const TodaConfig config({Family::C, 2}, {q(1, 3), q(-1, 2)});
  const auto nu = nu_vector(config);
  const auto w = wronskian(nu);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(w(i, 0), nu.nu[static_cast<size_t>(i)]);
    EXPECT_EQ(w(i, 0), ZExpr::monomial(ExactScalar(nu.chi[static_cast<size_t>(i)]), nu.beta[static_cast<size_t>(i)]));
  }
  for (size_t i = 1; i < nu.beta.size(); ++i) EXPECT_LT(nu.beta[i - 1], nu.beta[i]);
}

TEST(Pairing, TwoByTwoIsForm) {
  const auto w = wronskian(nu_vector(TodaConfig({Family::A, 1}, {0})));
  EXPECT_EQ(pairing_matrix(w), form_as_zmatrix(2));
  EXPECT_EQ(gram_schmidt_normalizer(w), ZMatrix::identity(2));
}

TEST(Pairing, AntiDiagonalSigns) {
  const auto w = wronskian(nu_vector(TodaConfig({Family::C, 2}, {q(1, 2), q(-1, 3)})));
  const auto p = pairing_matrix(w);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(p(i, 3 - i), ZExpr(i % 2 == 0 ? 1 : -1));
}

TEST(Pairing, OrthogonalCornerEntry) {
  const auto w = wronskian(nu_vector(TodaConfig({Family::B, 2}, {q(1, 2), q(-1, 3)})));
  const auto p = pairing_matrix(w);
  EXPECT_FALSE(p(4, 4).is_zero());
  const auto u = gram_schmidt_normalizer(w);
  EXPECT_TRUE(is_unipotent_upper(u));
  const auto wu = w * u;
  EXPECT_EQ(transpose_times_form_times(wu, wu), form_as_zmatrix(5));
}

TEST(Pairing, RejectsBrokenSymmetry) {
  ZMatrix w = wronskian(nu_vector(TodaConfig({Family::C, 2}, {q(1, 2), q(-1, 3)})));
  w(3, 0) = w(3, 0) * ExactScalar(2);
  EXPECT_THROW(pairing_matrix(w), StructureError);
}

TEST(NuBasisProperty, DeterminantPairingAndGramSchmidt) {
  for (const auto& config : sample_configs(21, 6)) {
    const auto w = wronskian(nu_vector(config));
    EXPECT_EQ(determinant(w), ZExpr(1)) << config.algebra().name();
    if (config.family() == Family::A && config.k() > 2) continue;
    const int k = config.k();
    const auto p = pairing_matrix(w);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i + j < k - 1 || (i + j == k && k % 2 == 0)) EXPECT_TRUE(p(i, j).is_zero());
        if (i + j == k - 1) EXPECT_EQ(p(i, j), ZExpr(i % 2 == 0 ? 1 : -1));
      }
    const auto u = gram_schmidt_normalizer(w);
    EXPECT_TRUE(is_unipotent_upper(u));
    const auto wu = w * u;
    EXPECT_EQ(transpose_times_form_times(wu, wu), form_as_zmatrix(k));
  }
}

TEST(NuBasisProperty, WronskianMinorSymmetry) {
  Sampler s(4);
  for (Family f : {Family::B, Family::C})
    for (int n = 1; n <= 2; ++n)
      for (int trial = 0; trial < 4; ++trial) {
        const TodaConfig config({f, n}, s.gamma(n, {1, 2, 3}));
        const int k = config.k();
        const auto w = wronskian(nu_vector(config));
        for (uint32_t mask = 1; mask < (1u << k) - 1; ++mask) {
          const IndexSet rows = IndexSet::from_mask(mask);
          EXPECT_EQ(wronskian_minor(w, rows), wronskian_minor(w, rows.complement(k).inverted(k)))
              << config.algebra().name() << " " << rows.to_string();
        }
      }
}
