#include <gtest/gtest.h>

#include <random>

#include "toda/errors.hpp"
#include "toda/polynomial.hpp"
#include "toda/zexpr.hpp"

using namespace toda;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

ZExpr random_expr(std::mt19937_64& rng, int terms) {
  ZExpr e;
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  for (int t = 0; t < terms; ++t) {
    ExactScalar c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    e += ZExpr::monomial(c, a, b);
  }
  return e;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(q(6, 4)), "3/2");
  EXPECT_EQ(to_string(parse_rational("-0.25")), "-1/4");
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_EQ(to_string(parse_rational("010/08")), "5/4");
  EXPECT_THROW(parse_rational("1/0"), ConfigError);
  EXPECT_THROW(parse_rational("abc"), ConfigError);
  const auto v = parse_rational_list("-1/2, 1/4,1");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], q(-1, 2));
  EXPECT_EQ(v[2], q(1));
}

TEST(Rational, ExactSqrt) {
  Rational r;
  EXPECT_TRUE(exact_sqrt(q(9, 4), r));
  EXPECT_EQ(r, q(3, 2));
  EXPECT_FALSE(exact_sqrt(q(2), r));
}

TEST(ExactScalar, FieldOperations) {
  const ExactScalar a(q(1, 2), q(3, 4));
  const ExactScalar b(q(-2), q(1, 3));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a * a.inverse(), ExactScalar(1));
  EXPECT_EQ(a.conj().conj(), a);
  EXPECT_EQ(a * a.conj(), ExactScalar(a.norm()));
  EXPECT_EQ(parse_scalar("1/2+3/4i"), a);
  EXPECT_EQ(parse_scalar("1+i"), ExactScalar(1, 1));
  EXPECT_EQ(parse_scalar("-3i/4"), ExactScalar(0, q(-3, 4)));
  EXPECT_EQ(to_string(ExactScalar(q(1, 2), q(-1))), "1/2-i");
}

TEST(ZExpr, Addition) {
  const ZExpr z = ZExpr::z_pow(1);
  EXPECT_TRUE((z + (-z)).is_zero());
  EXPECT_EQ((ZExpr(1) + ZExpr::monomial(1, 1, 1)).to_string(), "1 + z*zb");
  const ZExpr half = ZExpr::monomial(ExactScalar(q(1, 2)), q(1, 2));
  EXPECT_EQ(half + half, ZExpr::z_pow(q(1, 2)));
}

TEST(ZExpr, Multiplication) {
  EXPECT_EQ(ZExpr::z_pow(q(1, 2)) * ZExpr::z_pow(q(1, 2)), ZExpr::z_pow(1));
  const ZExpr one_plus = ZExpr(1) + ZExpr::z_pow(1);
  const ZExpr one_minus = ZExpr(1) - ZExpr::z_pow(1);
  EXPECT_EQ(one_plus * one_minus, ZExpr(1) - ZExpr::z_pow(2));
  const Rational mu = q(5, 4);
  const ZExpr prod = ZExpr::z_pow(mu) * ZExpr::zbar_pow(mu);
  ASSERT_TRUE(prod.is_monomial());
  EXPECT_EQ(prod.single_term().exp_z, mu);
  EXPECT_EQ(prod.single_term().exp_zbar, mu);
}

TEST(ZExpr, Conjugate) {
  const ZExpr e = ZExpr::monomial(ExactScalar::i(), 2);
  EXPECT_EQ(conjugate(e), ZExpr::monomial(-ExactScalar::i(), 0, 2));
  const ZExpr real = ZExpr(1) + ZExpr::monomial(1, 1, 1);
  EXPECT_EQ(conjugate(real), real);
}

TEST(ZExpr, Derivatives) {
  EXPECT_EQ(diff_z(ZExpr::z_pow(q(3, 2))), ZExpr::monomial(ExactScalar(q(3, 2)), q(1, 2)));
  EXPECT_TRUE(diff_zbar(ZExpr::z_pow(2)).is_zero());
  EXPECT_EQ(diff_z(diff_zbar(ZExpr::monomial(1, 1, 1))), ZExpr(1));
  EXPECT_TRUE(diff_z(ZExpr(7)).is_zero());
}

TEST(ZExpr, Evaluation) {
  EXPECT_NEAR(std::abs(eval(ZExpr::z_pow(q(1, 2)), {1, 0}) - std::complex<double>(1, 0)), 0, 1e-15);
  const ZExpr f = ZExpr(1) + ZExpr::monomial(1, 1, 1);
  EXPECT_NEAR(std::abs(eval(f, {0, 2}) - std::complex<double>(5, 0)), 0, 1e-14);
  EXPECT_THROW(eval(ZExpr::z_pow(q(1, 2)), {-1, 0}), BranchCutError);
  EXPECT_THROW(eval(ZExpr::z_pow(-1), {0, 0}), OriginError);
  EXPECT_NO_THROW(eval(ZExpr::z_pow(2), {-1, 0}));
}

TEST(ZExpr, DivisionByMonomial) {
  const ZExpr e = ZExpr::monomial(4, 3, 1) + ZExpr::monomial(2, 1, 1);
  EXPECT_EQ(e.divided_by(ZExpr::monomial(2, 1, 1)), ZExpr::monomial(2, 2) + ZExpr(1));
  EXPECT_THROW(e.divided_by(e), StructureError);
}

TEST(ZExpr, DegreeBounds) {
  const ZExpr e = ZExpr::monomial(1, q(-1, 2), 0) + ZExpr::monomial(3, 2, 2);
  EXPECT_EQ(e.min_total_degree(), q(-1, 2));
  EXPECT_EQ(e.max_total_degree(), 4);
}

TEST(ZExprProperty, RingAxioms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const ZExpr a = random_expr(rng, 3), b = random_expr(rng, 3), c = random_expr(rng, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(conjugate(conjugate(a)), a);
    EXPECT_EQ(conjugate(a * b), conjugate(a) * conjugate(b));
  }
}

TEST(ZExprProperty, DerivativesCommuteAndObeyLeibniz) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const ZExpr a = random_expr(rng, 4), b = random_expr(rng, 3);
    EXPECT_EQ(diff_z(diff_zbar(a)), diff_zbar(diff_z(a)));
    EXPECT_EQ(diff_z(a * b), diff_z(a) * b + a * diff_z(b));
  }
}

TEST(ZExprProperty, EvaluationIsHomomorphism) {
  std::mt19937_64 rng(13);
  const std::complex<double> points[] = {{1.3, 0.4}, {-0.7, 1.1}, {0.5, -2.0}, {2.2, 0.0}};
  for (int trial = 0; trial < 40; ++trial) {
    const ZExpr a = random_expr(rng, 3), b = random_expr(rng, 3);
    for (auto p : points) {
      const auto sum = eval(a + b, p), prod = eval(a * b, p);
      const auto ea = eval(a, p), eb = eval(b, p);
      EXPECT_LE(std::abs(sum - (ea + eb)), 1e-12 * (1 + std::abs(ea) + std::abs(eb)));
      EXPECT_LE(std::abs(prod - ea * eb), 1e-12 * (1 + std::abs(ea * eb)));
    }
  }
}

TEST(Operators, ComposeLiouvilleFactors) {
  const Rational a = q(2, 3);
  const FirstOrderOp left(ZExpr::monomial(ExactScalar(-a), -1));
  const FirstOrderOp right(ZExpr::monomial(ExactScalar(a), -1));
  const OrdinaryOp op = compose({left, right});
  ASSERT_EQ(op.order(), 2);
  EXPECT_EQ(op.coefficients()[0], ZExpr(1));
  EXPECT_TRUE(op.coefficients()[1].is_zero());
  EXPECT_EQ(op.coefficients()[2], ZExpr::monomial(ExactScalar(-a * (a + 1)), -2));
  // roots of the indicial equation: -a and a + 1
  EXPECT_TRUE(apply(op, ZExpr::z_pow(-a)).is_zero());
  EXPECT_TRUE(apply(op, ZExpr::z_pow(a + 1)).is_zero());
}

TEST(Operators, SingleAndZeroShifts) {
  const OrdinaryOp d = compose({FirstOrderOp(ZExpr())});
  EXPECT_EQ(d.order(), 1);
  EXPECT_TRUE(apply(d, ZExpr(5)).is_zero());
  const OrdinaryOp d3 = compose({FirstOrderOp(ZExpr()), FirstOrderOp(ZExpr()), FirstOrderOp(ZExpr())});
  for (int j = 1; j <= 3; ++j) EXPECT_TRUE(d3.coefficients()[static_cast<size_t>(j)].is_zero());
  const Rational beta = q(7, 3);
  EXPECT_EQ(apply(d3, ZExpr::z_pow(beta)),
            ZExpr::monomial(ExactScalar(beta * (beta - 1) * (beta - 2)), beta - 3));
}

TEST(Operators, ApplyIndicial) {
  const OrdinaryOp op({ZExpr(1), ZExpr(), ZExpr::monomial(-2, -2)});
  EXPECT_TRUE(apply(op, ZExpr::z_pow(2)).is_zero());
}

TEST(OperatorsProperty, ComposeMatchesSequentialApplication) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<FirstOrderOp> ops;
    const int n = 1 + trial % 4;
    for (int i = 0; i < n; ++i)
      ops.emplace_back(ZExpr::monomial(ExactScalar(Rational(num(rng), den(rng))), -1) +
                       ZExpr::monomial(ExactScalar(Rational(num(rng), den(rng))), 1));
    ZExpr f = random_expr(rng, 3);
    ZExpr sequential = f;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) sequential = apply(*it, sequential);
    EXPECT_EQ(apply(compose(ops), f), sequential);
  }
}

TEST(Poly, ArithmeticAndPrinting) {
  const Poly x = Poly::variable("c10"), y = Poly::variable("c41");
  const Poly p = x * y - Poly::variable("c40");
  EXPECT_EQ(p.to_string(), "c10*c41 - c40");
  EXPECT_EQ((x * x * Rational(1, 2)).to_string(), "1/2*c10^2");
  const ExactScalar v = p.evaluate({{"c10", ExactScalar(2)}, {"c41", ExactScalar(3)}, {"c40", ExactScalar(1)}});
  EXPECT_EQ(v, ExactScalar(5));
  EXPECT_THROW(p.evaluate({{"c10", ExactScalar(1)}}), ConfigError);
  EXPECT_TRUE((p - p).is_zero());
}
