#include <gtest/gtest.h>

#include <set>

#include "toda/config.hpp"
#include "toda/errors.hpp"
#include "toda/lie_data.hpp"
#include "toda/matrix_groups.hpp"

using namespace toda;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

const AlgebraType kA1{Family::A, 1};
const AlgebraType kB2{Family::B, 2};
const AlgebraType kC2{Family::C, 2};
const AlgebraType kC3{Family::C, 3};

std::vector<std::string> slot_names_for(const AlgebraType& a, const std::vector<Root>& roots) {
  std::vector<std::string> out;
  for (const auto& r : roots)
    for (const auto& s : free_slots(a))
      if (s.root == r) out.push_back(s.name());
  return out;
}

}  // namespace

TEST(Cartan, C3Matrix) {
  const auto cd = cartan(kC3);
  const long expected[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(cd.a(i, j), expected[i][j]);
  const Rational inv[3][3] = {{1, 1, q(1, 2)}, {1, 2, 1}, {1, 2, q(3, 2)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(cd.a_inv(i, j), inv[i][j]);
}

TEST(Cartan, B2Inverse) {
  const auto cd = cartan(kB2);
  EXPECT_EQ(cd.a_inv(0, 0), 1);
  EXPECT_EQ(cd.a_inv(0, 1), 1);
  EXPECT_EQ(cd.a_inv(1, 0), q(1, 2));
  EXPECT_EQ(cd.a_inv(1, 1), 1);
}

TEST(Cartan, A1) {
  const auto cd = cartan(kA1);
  EXPECT_EQ(cd.a(0, 0), 2);
  EXPECT_EQ(cd.a_inv(0, 0), q(1, 2));
}

TEST(CartanProperty, InverseIsExact) {
  for (Family f : {Family::A, Family::B, Family::C})
    for (int n = 1; n <= 6; ++n) {
      const auto cd = cartan({f, n});
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Rational s = 0;
          for (int l = 0; l < n; ++l) s += Rational(cd.a(i, l)) * cd.a_inv(l, j);
          EXPECT_EQ(s, i == j ? 1 : 0) << family_letter(f) << n;
        }
    }
}

TEST(Alpha, FromGamma) {
  const auto a = alpha_from_gamma(kB2, {q(-1, 2), q(1, 4)});
  EXPECT_EQ(a, (RationalVector{q(-1, 4), 0}));
  EXPECT_EQ(alpha_from_gamma(kC3, {0, 0, 0}), (RationalVector{0, 0, 0}));
}

TEST(Roots, C2AndB2) {
  EXPECT_EQ(positive_roots(kC2).size(), 4u);
  const auto b2 = positive_roots(kB2);
  const std::set<Root> got(b2.begin(), b2.end());
  EXPECT_EQ(got, (std::set<Root>{{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
  const auto c2 = positive_roots(kC2);
  EXPECT_EQ(std::set<Root>(c2.begin(), c2.end()), (std::set<Root>{{1, 0}, {0, 1}, {1, 1}, {2, 1}}));
}

TEST(Roots, C3ContainsHighestRoot) {
  const auto roots = positive_roots(kC3);
  EXPECT_EQ(roots.size(), 9u);
  EXPECT_NE(std::find(roots.begin(), roots.end(), Root{2, 2, 1}), roots.end());
}

TEST(RootsProperty, CountIsRankSquaredAndMapIsBijective) {
  for (Family f : {Family::B, Family::C})
    for (int n = 1; n <= 6; ++n) {
      const AlgebraType a{f, n};
      const auto roots = positive_roots(a);
      EXPECT_EQ(roots.size(), static_cast<size_t>(n * n));
      std::set<Root> images;
      for (const auto& s : free_slots(a)) images.insert(s.root);
      EXPECT_EQ(images, std::set<Root>(roots.begin(), roots.end()));
      EXPECT_EQ(free_slots(a).size(), roots.size());
    }
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(positive_roots({Family::A, n}).size(), static_cast<size_t>(n * (n + 1) / 2));
}

TEST(CoordinateMap, WorkedTables) {
  auto root_of = [](const AlgebraType& a, const std::string& name) {
    for (const auto& s : free_slots(a))
      if (s.name() == name) return s.root;
    return Root{};
  };
  EXPECT_EQ(root_of(kB2, "c30"), (Root{1, 2}));
  EXPECT_EQ(root_of(kB2, "c10"), (Root{1, 0}));
  EXPECT_EQ(root_of(kB2, "c21"), (Root{0, 1}));
  EXPECT_EQ(root_of(kB2, "c20"), (Root{1, 1}));
  EXPECT_EQ(root_of(kC3, "c41"), (Root{0, 2, 1}));
  EXPECT_EQ(root_of(kC3, "c10"), (Root{1, 0, 0}));
  EXPECT_EQ(root_of(kC3, "c50"), (Root{2, 2, 1}));
  EXPECT_EQ(root_of(kC3, "c40"), (Root{1, 2, 1}));
  EXPECT_EQ(root_of(kC3, "c31"), (Root{0, 1, 1}));
}

TEST(SlotNames, RoundTrip) {
  EXPECT_EQ(slot_name(4, 1), "c41");
  EXPECT_EQ(parse_slot_name("c30"), std::make_pair(3, 0));
  EXPECT_EQ(parse_slot_name(slot_name(12, 3)), std::make_pair(12, 3));
  EXPECT_THROW(parse_slot_name("x30"), ConfigError);
}

TEST(DeltaGamma, WorkedExamples) {
  const auto c3 = delta_gamma(kC3, {q(-1, 2), q(1, 4), 1});
  EXPECT_EQ(std::set<Root>(c3.begin(), c3.end()), (std::set<Root>{{0, 0, 1}, {1, 2, 1}}));
  EXPECT_EQ(slot_names_for(kC3, c3), (std::vector<std::string>{"c32", "c40"}));
  const auto b2 = delta_gamma(kB2, {q(-1, 2), q(1, 4)});
  EXPECT_EQ(b2, (std::vector<Root>{{1, 2}}));
  EXPECT_EQ(slot_names_for(kB2, b2), (std::vector<std::string>{"c30"}));
}

TEST(DeltaGamma, IntegralGammaGivesEverything) {
  for (const AlgebraType& a : {kA1, kB2, kC3, AlgebraType{Family::A, 3}}) {
    RationalVector g(static_cast<size_t>(a.rank), Rational(1));
    EXPECT_EQ(delta_gamma(a, g).size(), positive_roots(a).size());
  }
}

TEST(DeltaGammaProperty, ClosedUnderAddition) {
  Sampler s(5);
  for (Family f : {Family::A, Family::B, Family::C})
    for (int n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        const AlgebraType a{f, n};
        const auto g = s.gamma(n, {1, 2, 3, 4});
        EXPECT_TRUE(is_closed_under_addition(delta_gamma(a, g), positive_roots(a)));
      }
}

// For C/B each free slot c_ij is also an A_{k-1} root e_j - e_i; its value on
// the symmetrized gamma must be integral exactly when the C/B root is in
// Delta_Gamma.
TEST(DeltaGammaProperty, AgreesWithSymmetrizedASide) {
  Sampler s(9);
  for (Family f : {Family::B, Family::C})
    for (int n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 15; ++trial) {
        const AlgebraType a{f, n};
        const auto g = s.gamma(n, {2, 3, 4});
        const TodaConfig config(a, g);
        const auto dg = delta_gamma(a, g);
        const std::set<Root> members(dg.begin(), dg.end());
        for (const auto& slot : free_slots(a)) {
          Rational tilde = 0;
          for (int m = slot.col; m < slot.row; ++m) tilde += config.gamma_tilde()[static_cast<size_t>(m)];
          EXPECT_EQ(is_integer(tilde), members.count(slot.root) > 0) << slot.name();
        }
      }
}

TEST(Monodromy, B2Exponents) {
  const auto g = monodromy_element(kB2, {q(-1, 2), q(1, 4)});
  EXPECT_EQ(g.exponents(), (RationalVector{q(-1, 4), q(1, 4), 0, q(-1, 4), q(1, 4)}));
  EXPECT_FALSE(g.is_identity());
  EXPECT_EQ(format_linear_form(monodromy_forms_in_gamma(kB2)[0], "gamma"), "gamma1 + gamma2");
  EXPECT_EQ(format_linear_form(monodromy_forms_in_alpha(kB2)[1], "alpha"), "2*alpha2 - alpha1");
}

TEST(Monodromy, C3FormsInAlpha) {
  const auto forms = monodromy_forms_in_alpha(kC3);
  std::vector<std::string> text;
  for (const auto& f : forms) text.push_back(format_linear_form(f, "alpha"));
  EXPECT_EQ(text, (std::vector<std::string>{"alpha1", "alpha2 - alpha1", "alpha3 - alpha2", "alpha2 - alpha3",
                                            "alpha1 - alpha2", "-alpha1"}));
}

TEST(Monodromy, IntegralGammaIsCentral) {
  for (const AlgebraType& a : {kB2, kC3, AlgebraType{Family::A, 2}}) {
    RationalVector g(static_cast<size_t>(a.rank), Rational(2));
    const auto el = monodromy_element(a, g);
    EXPECT_TRUE(el.is_central());
    EXPECT_TRUE(el.commutes_with(sample_group_element(a, 3, 2).entries));
  }
}

TEST(Config, DerivedQuantities) {
  const TodaConfig b2(kB2, {q(-1, 2), q(1, 4)});
  EXPECT_EQ(b2.k(), 5);
  EXPECT_EQ(b2.gamma_tilde(), (RationalVector{q(-1, 2), q(1, 4), q(1, 4), q(-1, 2)}));
  EXPECT_EQ(b2.mu_tilde(), (RationalVector{q(1, 2), q(5, 4), q(5, 4), q(1, 2)}));
  EXPECT_EQ(b2.a_side(), (AlgebraType{Family::A, 4}));
  EXPECT_THROW(TodaConfig(kB2, {q(-1), 0}), ConfigError);
  EXPECT_THROW(TodaConfig(kB2, {0}), ConfigError);
  EXPECT_THROW((AlgebraType{Family::C, 0}).validate(), ConfigError);
  EXPECT_THROW(parse_family("D"), ConfigError);
}
