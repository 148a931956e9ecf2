#include <gtest/gtest.h>

#include "rtoda/opalg.hpp"

using namespace rtoda;

namespace {
RatFunc lv(int i, int n = 1) { return RatFunc(Poly::var(i, n)); }
}  // namespace

TEST(Weyl, ProductPhase) {
  // e^{2pi b p1} e^{2pi b x1} = q^-1 e^{2pi b(p1+x1)}
  WeylExponent e = WeylExponent::p(1) * WeylExponent::x(1);
  EXPECT_EQ(e.phase, Rational(-1));
  WeylExponent f = WeylExponent::x(1) * WeylExponent::p(1);
  EXPECT_EQ(f.phase, Rational(1));
  EXPECT_EQ((WeylExponent::p(1) * WeylExponent::x(2)).phase, Rational(0));
}

TEST(Weyl, NormalOrder) {
  WeylExponent e;
  e.alpha = {Rational(0), Rational(1)};
  e.beta = {Rational(-1), Rational(1)};
  NormalOrdered n = normal_order(e);
  EXPECT_EQ(n.scalar, Rational(-1));
  WeylExponent back = n.x_part * n.p_part;
  back.phase += n.scalar;
  EXPECT_EQ(back, e);
  EXPECT_EQ(normal_order(WeylExponent::p(1)).scalar, Rational(0));
}

TEST(Weyl, ElementArithmetic) {
  WeylElement a(WeylExponent::p(1)), b(WeylExponent::x(1));
  WeylElement c = a * b - QScalar::qpow(Rational(-2)) * (b * a);
  EXPECT_TRUE(c.is_zero());
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(QScalar::qpow(Rational(1, 2)) * QScalar::qpow(Rational(1, 2)), QScalar::qpow(Rational(1)));
}

TEST(Polarize, Basics) {
  EXPECT_EQ(polarize(unit_vec(4)), WeylExponent::p(2));
  EXPECT_EQ(polarize(Vec5{}), WeylExponent{});
  WeylExponent c = polarize(Vec5{1, 1, 1, 0, 0});
  EXPECT_EQ(c.tau_deg, -2);
  EXPECT_EQ(c.alpha, RVec2{});
  EXPECT_EQ(c.beta, RVec2{});
}

TEST(Polarize, Suite) {
  for (const auto& r : polarization_suite(50, 11)) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
}

TEST(Polarize, HolonomyImages) {
  for (const auto& r : check_holonomy_images()) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
}

TEST(LambdaOp, ShiftCommutation) {
  auto T1 = LambdaDiffOp::shift(1);
  EXPECT_EQ(T1 * LambdaDiffOp(lv(lvar::L1)), LambdaDiffOp::term(lv(lvar::Q, 2) * lv(lvar::L1), {1, 0}));
  EXPECT_EQ(T1 * LambdaDiffOp::shift(1, -1), LambdaDiffOp(RatFunc(1)));
}

TEST(LambdaOp, DualToda) {
  LambdaDiffOp H1 = dual_toda_H1();
  EXPECT_EQ((LambdaDiffOp(lv(lvar::T)) * macdonald_M1()).at_t_zero(), H1);
  EXPECT_EQ(gamma_twist(H1, 2), dual_toda_H1n(2));
  EXPECT_EQ(gamma_twist(H1, -1), dual_toda_H1n(-1));
}

TEST(LambdaOp, PoleAtTZero) {
  EXPECT_THROW(macdonald_M1().at_t_zero(), DomainError);
}

TEST(LambdaOp, Commuting) {
  EXPECT_TRUE(commutator(macdonald_M1(), macdonald_M2()).is_zero());
  EXPECT_FALSE(commutator(LambdaDiffOp::shift(1), LambdaDiffOp(lv(lvar::L1))).is_zero());
}

TEST(LambdaOp, Suite) {
  for (const auto& r : lambda_op_identity_suite()) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
}

TEST(OperatorSuite, AllPass) {
  auto rs = operator_suite();
  EXPECT_GT(rs.size(), 20u);
  for (const auto& r : rs) EXPECT_TRUE(r.pass) << r.name;
}
