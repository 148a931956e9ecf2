#include <gtest/gtest.h>

#include <random>

#include "rtoda/qseries.hpp"

using namespace rtoda;

namespace {

const QRational q(Poly::var(qvar::Q));
const QRational t(Poly::var(qvar::T));
const QRational x1(Poly::var(qvar::X1));
const QRational x2(Poly::var(qvar::X2));

QRational swap_x(const QRational& f) {
  QRational y(Poly::var(6));
  return f.subs(qvar::X1, y).subs(qvar::X2, x1).subs(6, x2);
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(Poly, ArithmeticAndDivision) {
  Poly a = Poly::var(0) + Poly(1);
  Poly b = Poly::var(0) - Poly(1);
  EXPECT_EQ(a * b, Poly::var(0, 2) - Poly(1));
  EXPECT_EQ(*divexact(a * b, b), a);
  EXPECT_FALSE(divexact(a, b).has_value());
  EXPECT_EQ(Poly::var(1, 3).pow(-2), Poly::var(1, -6));
  EXPECT_THROW(a.pow(-1), std::domain_error);
  EXPECT_EQ((a * a).str({"q"}), "q^2 + 2*q + 1");
}

TEST(Poly, OverflowIsDetected) {
  Poly big(1LL << 62);
  EXPECT_THROW(big * Poly(4), std::overflow_error);
}

TEST(RatFunc, NormalisationAndEquality) {
  RatFunc f(Poly::var(0, 2) - Poly(1), Poly::var(0) - Poly(1));
  EXPECT_TRUE(f.is_poly());
  EXPECT_EQ(f, RatFunc(Poly::var(0) + Poly(1)));
  RatFunc g(Poly(2), Poly(-4) * Poly::var(0, 3));
  EXPECT_EQ(g, RatFunc(Poly(-1), Poly(2) * Poly::var(0, 3)));
  EXPECT_EQ(g * g.pow(-1), RatFunc(1));
  EXPECT_EQ(f - f, RatFunc(0));
}

TEST(QPoch, Basics) {
  EXPECT_EQ(qpoch(x1, q, 0), QRational(1));
  EXPECT_EQ(qpoch(q, q, 2), (QRational(1) - q) * (QRational(1) - q.pow(2)));
  EXPECT_TRUE(qpoch(q.pow(-3), q, 4).is_zero());
  EXPECT_FALSE(qpoch(q.pow(-3), q, 3).is_zero());
  EXPECT_THROW(qpoch(q, q, -1), IndexError);
  cplx qq(0.3, 0.2), X(0.7, -0.1);
  EXPECT_LT(rel(qpoch(X, qq, 3), (1.0 - X) * (1.0 - qq * X) * (1.0 - qq * qq * X)), 1e-15);
}

TEST(QPoch, InfiniteProduct) {
  cplx qq(0.5, 0.1), X(0.3, 0.2);
  cplx a = qpoch_inf(X, qq);
  EXPECT_LT(rel(a, qpoch(X, qq, 200)), 1e-14);
  EXPECT_THROW(qpoch_inf(X, cplx(0.6, 0.8)), NonConvergent);
}

TEST(QBinom, SmallCases) {
  EXPECT_EQ(qbinom(2, 1), Poly(1) + Poly::var(qvar::Q));
  EXPECT_EQ(qbinom(5, 0), Poly(1));
  Poly expect = Poly(1) + Poly::var(0) + Poly(2) * Poly::var(0, 2) + Poly::var(0, 3) + Poly::var(0, 4);
  EXPECT_EQ(qbinom(4, 2), expect);
  // Pochhammer quotient
  EXPECT_EQ(QRational(qbinom(4, 2)), qpoch(q, q, 4) / (qpoch(q, q, 2) * qpoch(q, q, 2)));
  EXPECT_THROW(qbinom(3, 4), IndexError);
}

TEST(QBinom, SymmetryAndPositivity) {
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) {
      Poly p = qbinom(n, k);
      EXPECT_EQ(p, qbinom(n, n - k));
      for (const auto& [e, c] : p.terms()) EXPECT_GT(c, 0);
      EXPECT_EQ(QRational(p), qpoch(q, q, n) / (qpoch(q, q, k) * qpoch(q, q, n - k)));
    }
}

TEST(QBinom, BinomialExpansion) {
  std::mt19937_64 g(11);
  std::uniform_real_distribution<double> u(-0.6, 0.6), ang(0, 2 * kPi);
  for (int i = 0; i < 20; ++i) {
    cplx qq = std::polar(std::abs(u(g)) + 0.05, ang(g));
    qq *= 0.9 / std::max(0.9, std::abs(qq));
    cplx a(u(g), u(g)), z(u(g), u(g));
    cplx sum = 0, term = 1;
    for (int n = 0; n < 400; ++n) {
      sum += term;
      term *= (1.0 - a * std::pow(qq, n)) / (1.0 - std::pow(qq, n + 1)) * z;
    }
    EXPECT_LT(rel(sum, qpoch_inf(a * z, qq) / qpoch_inf(z, qq)), 1e-12);
  }
}

TEST(WhittakerPoly, SmallCases) {
  EXPECT_EQ(whittaker_poly({0, 0}, q), QRational(1));
  EXPECT_EQ(whittaker_poly({0, 1}, q), x1 + x2);
  EXPECT_EQ(whittaker_poly({0, 2}, q), x2.pow(2) + (QRational(1) + q) * x1 * x2 + x1.pow(2));
  EXPECT_EQ(whittaker_poly({-1, 1}, q), swap_x(whittaker_poly({-1, 1}, q)));
  cplx qq = std::exp(cplx(0, 0.7)), z1(0.3, 1.1), z2(-0.4, 0.2);
  EXPECT_LT(rel(whittaker_poly({1, 3}, z1, z2, qq),
                z1 * z2 * (z2 * z2 + (1.0 + qq) * z1 * z2 + z1 * z1)),
            1e-14);
  EXPECT_THROW(GeneralizedPartition2(2, 1), IndexError);
}

TEST(MacdonaldPoly, SmallCases) {
  EXPECT_EQ(macdonald_poly({0, 0}, t, q), QRational(1));
  EXPECT_EQ(macdonald_poly({0, 1}, t, q), x1 + x2);
  QRational c = (QRational(1) + q) * (QRational(1) - t) / (QRational(1) - q * t);
  EXPECT_EQ(macdonald_poly({0, 2}, t, q), x1.pow(2) + c * x1 * x2 + x2.pow(2));
  for (int w = 0; w <= 4; ++w) {
    QRational P = macdonald_poly({-1, w - 1}, t, q);
    EXPECT_EQ(P, swap_x(P)) << w;
  }
  // t = q is the Schur case
  EXPECT_EQ(macdonald_poly({0, 3}, q, q), x1.pow(3) + x1.pow(2) * x2 + x1 * x2.pow(2) + x2.pow(3));
}

TEST(MacdonaldPoly, DegenerateDenominator) {
  // (q^{n-1} t; q^{-1})_r vanishes when t = q^{1-n}
  EXPECT_THROW(macdonald_poly({0, 2}, q.pow(-1), q), DegenerateParameter);
  cplx qq = std::exp(cplx(0, 0.9));
  EXPECT_THROW(macdonald_poly({0, 2}, 1.0, 1.0, 1.0 / qq, qq), DegenerateParameter);
  cplx tt(0.4, 0.3), y1(0.7, 0.1), y2(-0.2, 0.5);
  std::array<cplx, kMaxVars> v{};
  v[qvar::Q] = qq;
  v[qvar::T] = tt;
  v[qvar::X1] = y1;
  v[qvar::X2] = y2;
  for (int w = 0; w <= 3; ++w)
    EXPECT_LT(rel(macdonald_poly({1, 1 + w}, y1, y2, tt, qq), macdonald_poly({1, 1 + w}, t, q).eval(v)), 1e-13);
}

TEST(TwoPsiOne, Heine) {
  EXPECT_EQ(two_psi_one(0.3, 0.2, 0.5, 0.7, 0.4, 0).value, cplx(1));
  cplx a = 0.3, b = 0.2, c = 0.5, qq = 0.4;
  auto s = two_psi_one(a, b, c, c / (a * b), qq, 60);
  // c/(ab) > 1 here, so continue with a convergent draw instead
  EXPECT_FALSE(s.converged);
  a = 0.9;
  b = 0.8;
  c = 0.5;
  s = two_psi_one(a, b, c, c / (a * b), qq, 200);
  ASSERT_TRUE(s.converged);
  cplx rhs = qpoch_inf(c / a, qq) * qpoch_inf(c / b, qq) / (qpoch_inf(c, qq) * qpoch_inf(c / (a * b), qq));
  EXPECT_LT(rel(s.value, rhs), 1e-12);
}

TEST(TwoPsiOne, HeineComplex) {
  std::mt19937_64 g(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 10; ++i) {
    cplx qq(0.3 * u(g), 0.3 * u(g)), a(1.2 + 0.3 * u(g), 0.2 * u(g)), b(1.1 + 0.2 * u(g), 0.2 * u(g)),
        c(0.4 * u(g), 0.4 * u(g));
    auto s = two_psi_one(a, b, c, c / (a * b), qq, 300);
    ASSERT_TRUE(s.converged);
    cplx rhs = qpoch_inf(c / a, qq) * qpoch_inf(c / b, qq) / (qpoch_inf(c, qq) * qpoch_inf(c / (a * b), qq));
    EXPECT_LT(rel(s.value, rhs), 1e-11);
  }
}

TEST(TwoPsiOne, ChuVandermonde) {
  cplx a(0.3, 0.1), c(0.5, -0.2), qq(0.4, 0.1);
  for (int n = 0; n <= 6; ++n) {
    cplx bb = std::pow(qq, -n);
    auto s = two_psi_one(a, bb, c, std::pow(qq, n) * c / a, qq, 50);
    EXPECT_TRUE(s.terminated);
    EXPECT_EQ(s.terms, n + 1);
    EXPECT_EQ(s.tail, 0.0);
    EXPECT_LT(rel(s.value, qpoch(c / a, qq, n) / qpoch(c, qq, n)), 1e-11) << n;
  }
  // on the unit circle only terminating sums are accepted
  cplx qu = std::exp(cplx(0, 1.3));
  EXPECT_TRUE(two_psi_one(a, std::pow(qu, -3), c, 0.5, qu, 10).converged);
  EXPECT_FALSE(two_psi_one(a, 0.2, c, 0.5, qu, 10).converged);
}

TEST(HarishChandra, WhittakerCoefficient) {
  EXPECT_EQ(hc_whittaker_coeff(0), QRational(1));
  EXPECT_EQ(hc_whittaker_coeff(1), (QRational(1) - x2) / (QRational(1) - q.pow(-2)));
  // at X = q^{-2n} the coefficients are q^{-2}-binomials and vanish past n
  for (int n = 0; n <= 4; ++n)
    for (int r = 0; r <= 6; ++r) {
      QRational c = hc_whittaker_coeff(r).subs(qvar::X2, q.pow(-2 * n));
      if (r > n) EXPECT_TRUE(c.is_zero());
      else EXPECT_EQ(c, qbinom(n, r, q.pow(-2)));
    }
}

TEST(HarishChandra, WhittakerSeries) {
  auto ctx = QdContext::make(0.77);
  cplx lam1(-0.3, 0.0), lam2(0.25, 0.0), x1p(0.1, 0.05), x2p(-0.2, 0.1);
  auto s0 = hc_whittaker_series(lam1, lam2, x1p, x2p, ctx, 0);
  EXPECT_LT(rel(s0.value, std::exp(2.0 * kPi * kI * (lam1 * x1p + lam2 * x2p))), 1e-15);
  auto s12 = hc_whittaker_series(lam1, lam2, x1p, x2p, ctx, 12);
  auto s17 = hc_whittaker_series(lam1, lam2, x1p, x2p, ctx, 17);
  EXPECT_LT(std::abs(s12.value - s17.value), 2 * s12.tail + 1e-15);
  // brute force against the exact coefficients
  std::array<cplx, kMaxVars> v{};
  v[qvar::Q] = ctx.q;
  v[qvar::X2] = std::exp(2.0 * kPi * ctx.b * (x2p - x1p));
  cplx L12 = std::exp(2.0 * kPi * ctx.b * (lam1 - lam2)), acc = 0;
  for (int r = 0; r <= 12; ++r) acc += std::pow(L12, r) * hc_whittaker_coeff(r).eval(v);
  EXPECT_LT(rel(s12.value, acc * s0.value), 1e-13);
  // truncation at the lattice X'_21 = q^{-4}
  auto tr = hc_whittaker_sum(L12, std::pow(ctx.q, -4), ctx.q, 10);
  EXPECT_TRUE(tr.terminated);
  EXPECT_EQ(tr.terms, 3);
}

TEST(HarishChandra, MacdonaldSeries) {
  EXPECT_EQ(hc_macdonald_series(0.3, 0.2, 0.5, 0.4, 0).value, cplx(1));
  const QRational M(Poly::var(qvar::M));
  EXPECT_EQ(hc_macdonald_coeff(0), QRational(1));
  EXPECT_EQ(hc_macdonald_coeff(1), (QRational(1) - M / t.pow(2)) * (QRational(1) - t.pow(2)) /
                                       ((QRational(1) - M / q.pow(2)) * (QRational(1) - q.pow(2))));
  cplx qq = std::exp(cplx(0, 0.83)), tt = std::exp(cplx(0.2, 0.4)), Mm(0.3, -0.7), L(0.2, 0.15);
  std::array<cplx, kMaxVars> v{};
  v[qvar::Q] = qq;
  v[qvar::T] = tt;
  v[qvar::M] = Mm;
  cplx acc = 0, term = 1;
  for (int r = 0; r <= 12; ++r) {
    EXPECT_LT(rel(hc_macdonald_coeff(r).eval(v), qpoch(Mm / (tt * tt), 1.0 / (qq * qq), r) *
                                                    qpoch(tt * tt, qq * qq, r) /
                                                    (qpoch(Mm / (qq * qq), 1.0 / (qq * qq), r) *
                                                     qpoch(qq * qq, qq * qq, r))),
              1e-12);
    acc += term * hc_macdonald_coeff(r).eval(v);
    term *= L;
  }
  EXPECT_LT(rel(hc_macdonald_series(L, Mm, qq, tt, 12).value, acc), 1e-13);
  // t^2 = q^{-2n} truncates after n+1 terms
  auto tr = hc_macdonald_series(L, Mm, qq, std::pow(qq, -2), 20);
  EXPECT_TRUE(tr.terminated);
  EXPECT_EQ(tr.terms, 3);
}

TEST(SpecialPoints, Formula) {
  auto ctx = QdContext::make(0.8);
  SpecialPoint p{2, 1, -1};
  cplx expect = -ctx.c_b / 2.0 - kI * (2 * ctx.b + 1 / ctx.b);
  EXPECT_LT(std::abs(p.value(ctx) - expect), 1e-15);
}
