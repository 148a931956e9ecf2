#include <gtest/gtest.h>

#include "rtoda/contour.hpp"

using namespace rtoda;

namespace {
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

QdIntegrand fourier1(cplx w, const QdContext& c) {
  QdIntegrand f;
  f.den = {c.c_b};
  f.c1 = 2.0 * kPi * kI * (w - c.c_b);
  return f;
}
}  // namespace

TEST(Contour, GaussianSmoke) {
  auto c = QdContext::make(0.8);
  QdIntegrand f;
  f.c2 = -kPi;
  EXPECT_LT(std::abs(integrate(f, c).value - 1.0), 1e-12);
}

TEST(Contour, FresnelTailsFollowDecaySector) {
  auto c = QdContext::make(0.8);
  QdIntegrand f;
  f.c2 = kI * kPi;  // e^{pi i t^2} decays for arg t in (0, pi/2) and (pi, 3pi/2)
  ContourPath p = build_contour(f, c);
  EXPECT_GT(p.right_tail.angle, 0.0);
  EXPECT_LT(p.right_tail.angle, kPi / 2);
  EXPECT_GT(p.left_tail.angle, kPi);
  EXPECT_LT(p.left_tail.angle, 1.5 * kPi);
  EXPECT_LT(std::abs(integrate(f, c).value - std::exp(kI * kPi / 4.0)), 1e-11);
  f.c2 = -kI * kPi;
  p = build_contour(f, c);
  EXPECT_LT(p.right_tail.angle, 0.0);
  EXPECT_GT(p.left_tail.angle, kPi / 2);
  EXPECT_LT(p.left_tail.angle, kPi);
}

TEST(Contour, FourierPathAboveDescendingFamily) {
  auto c = QdContext::make(0.8);
  ContourPath p = build_contour(fourier1(0.2 * kI, c), c);
  EXPECT_GT(p.height, 0.0);
  EXPECT_LT(p.right_tail.angle, 0.0);  // Gaussian decay e^{-pi i t^2}
}

TEST(Contour, Deterministic) {
  auto c = QdContext::make(0.8);
  auto f = fourier1(0.2 * kI, c);
  EXPECT_EQ(build_contour(f, c).to_json(), build_contour(f, c).to_json());
  EXPECT_EQ(integrate(f, c).value, integrate(f, c).value);
}

TEST(Contour, PinchedAndNoDecay) {
  auto c = QdContext::make(0.8);
  QdIntegrand f;
  f.num = {0.0};
  f.den = {2.0 * c.c_b};  // apexes coincide
  EXPECT_THROW(build_contour(f, c), PinchedContour);
  QdIntegrand g;
  g.c1 = 1.0;  // e^{t} grows on the right
  EXPECT_THROW(build_contour(g, c), NoDecaySector);
  QdIntegrand h;
  EXPECT_THROW(build_contour(h, c), NoDecaySector);
}

TEST(Identities, Examples) {
  auto c8 = QdContext::make(0.8);
  auto r = verify_identity("fourier1", {{"w", 0.2 * kI}}, c8);
  EXPECT_TRUE(r.pass) << r.rel_err;
  r = verify_identity("fourier2", {{"w", -0.1 * kI}}, c8);
  EXPECT_TRUE(r.pass) << r.rel_err;
  auto c75 = QdContext::make(0.75);
  r = verify_identity("saalschutz", {{"u1", cplx(0.1, 0.2)}, {"u2", cplx(-0.15, 0.1)}, {"v", cplx(0, 0.3)}}, c75);
  EXPECT_TRUE(r.pass) << r.rel_err;
  // confluent numerator shifts
  r = verify_identity("saalschutz", {{"u1", cplx(0.1, 0.2)}, {"u2", cplx(0.1, 0.2)}, {"v", cplx(0.05, 0.1)}}, c75);
  EXPECT_TRUE(r.pass) << r.rel_err;
  Params p{{"u", cplx(0.1, 0.4)}, {"v", cplx(-0.2, -0.3)}, {"w", cplx(0.15, -0.25)}};
  EXPECT_LT(rel(beta1_rhs(p["u"], p["v"], p["w"], c8), beta2_rhs(p["u"], p["v"], p["w"], c8)), 1e-12);
  EXPECT_TRUE(verify_identity("beta1", p, c8).pass);
  EXPECT_TRUE(verify_identity("beta2", p, c8).pass);
  EXPECT_THROW(verify_identity("nope", p, c8), ConfigError);
  EXPECT_THROW(verify_identity("beta1", {{"u", 0.0}}, c8), ConfigError);
}

TEST(Identities, SaalschutzTwoTolerances) {
  auto c = QdContext::make(0.7);
  QdIntegrand f;
  const cplx u1(0.2, 0.15), u2(-0.1, 0.3), v(0.1, 0.2);
  f.num = {-u1, -u2};
  f.den = {c.c_b - v, c.c_b};
  f.c1 = -4.0 * kPi * kI * c.c_b;
  cplx a = integrate(f, c, 1e-8).value, b = integrate(f, c, 1e-13).value;
  EXPECT_LT(rel(a, b), 1e-8);
  EXPECT_LT(rel(b, saalschutz_rhs(u1, u2, v, c)), 1e-11);
}

TEST(Contour, PathIndependence) {
  auto c = QdContext::make(0.85);
  QdIntegrand f;
  f.num = {cplx(-0.1, -0.3)};
  f.den = {cplx(0.2, 0.25)};
  f.c1 = 2.0 * kPi * kI * cplx(0.1, -0.2);
  ContourOptions o1, o2;
  o2.margin = 3.5;
  o2.tail_bias = 0.7;
  ContourPath p1 = build_contour(f, c, o1);
  o2.height = p1.height + 0.2 * p1.gap;
  ContourPath p2 = build_contour(f, c, o2);
  const double tol = 1e-12;
  cplx a = integrate(f, p1, c, tol).value, b = integrate(f, p2, c, tol).value;
  EXPECT_LT(std::abs(a - b), 10 * tol * (1 + std::abs(a)));
}

TEST(Residues, MovingAcrossPoles) {
  auto c = QdContext::make(0.8);
  auto f = fourier1(cplx(0.1, 0.3), c);
  const double tol = 1e-12;
  cplx upper = integrate(f, build_contour(f, c), c, tol).value;
  using F = PoleRef::Family;
  struct Case {
    double h;
    std::vector<PoleRef> poles;
  };
  // descending poles at -i(0.8 m + 1.25 n)
  std::vector<Case> cases{{-0.5, {{F::Descending, 0, 0, 0}}},
                          {-1.0, {{F::Descending, 0, 0, 0}, {F::Descending, 0, 1, 0}}},
                          {-1.4, {{F::Descending, 0, 0, 0}, {F::Descending, 0, 1, 0}, {F::Descending, 0, 0, 1}}}};
  for (const auto& cs : cases) {
    ContourOptions o;
    o.height = cs.h;
    cplx lower = integrate(f, build_contour(f, c, o), c, tol).value;
    cplx moved = upper + residue_sum(f, cs.poles, c);
    EXPECT_LT(std::abs(lower - moved), 10 * tol * (1 + std::abs(upper))) << cs.h;
  }
}

TEST(Residues, SmallCircleOracle) {
  auto c = QdContext::make(0.75);
  QdIntegrand f;
  f.num = {cplx(0.3, -0.2)};
  f.den = {c.c_b};
  f.c1 = cplx(0.2, 0.1);
  using F = PoleRef::Family;
  for (PoleRef p : {PoleRef{F::Descending, 0, 0, 0}, PoleRef{F::Ascending, 0, 1, 1}, PoleRef{F::Descending, 0, 2, 0}}) {
    const cplx t0 = p.location(f, c);
    const double r = 0.05;
    const int N = 256;  // trapezoid on a circle converges geometrically
    cplx acc{};
    for (int k = 0; k < N; ++k) {
      const cplx e = std::exp(kI * (2 * kPi * k / N));
      acc += f(t0 + r * e, c) * kI * r * e;
    }
    acc *= 2 * kPi / N;
    EXPECT_LT(rel(residue_sum(f, {p}, c), acc), 1e-11) << p.m << p.n;
  }
  EXPECT_EQ(residue_sum(f, {}, c), cplx(0));
}

TEST(Residues, HigherOrder) {
  auto c = QdContext::make(std::sqrt(0.5));  // 2b = 1/b
  QdIntegrand f;
  f.den = {0.0};
  EXPECT_THROW(residue(f, {PoleRef::Family::Descending, 0, 2, 0}, c), HigherOrderPole);
}

TEST(Suite, AppendixQuick) {
  auto rs = appendix_suite(3, 5);
  EXPECT_EQ(rs.size(), 12u);
  for (const auto& e : rs) EXPECT_TRUE(e.pass) << e.name << " " << e.max_rel_err;
}

TEST(Serialization, IdentityReport) {
  auto c = QdContext::make(0.8);
  auto j = verify_identity("fourier1", {{"w", 0.2 * kI}}, c).to_json();
  EXPECT_EQ(j["identity"], "fourier1");
  EXPECT_EQ(j["lhs"].size(), 2u);
}
