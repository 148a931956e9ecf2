#include <gtest/gtest.h>

#include "rtoda/errors.hpp"
#include "rtoda/wavefun.hpp"

using namespace rtoda;

namespace {
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

bool all_pass(const std::vector<Check>& cs) {
  for (const auto& c : cs)
    if (!c.pass) {
      ADD_FAILURE() << c.name << " residual " << c.residual << " > " << c.threshold;
      return false;
    }
  return !cs.empty();
}
}  // namespace

TEST(Whittaker, GaussGiventalEqualsMellinBarnes) {
  auto c = QdContext::make(0.8);
  const SpectralPoint l{0.31, -0.42};
  const PositionPoint x{0.25, -0.6};
  EXPECT_LT(rel(whittaker_gg(l, x, c), whittaker_mb(l, x, c)), 1e-8);
  // swap symmetry is manifest only in MB
  EXPECT_LT(rel(whittaker_gg(l.swapped(), x, c), whittaker_gg(l, x, c)), 1e-8);
  // star cross identity
  EXPECT_LT(rel(whittaker_gg(l.star(), x, c), whittaker_mb(l, x.star(), c)), 1e-8);
}

TEST(Whittaker, TwoTolerances) {
  auto c = QdContext::make(0.75);
  const SpectralPoint l{-0.2, 0.55};
  const PositionPoint x{0.1, 0.4};
  const cplx a = whittaker_mb(l, x, c, 1e-8), b = whittaker_mb(l, x, c, 1e-12);
  EXPECT_LT(rel(a, b), 1e-7);
}

TEST(Whittaker, TildeIsPhiTimesPsi) {
  auto c = QdContext::make(0.8);
  const SpectralPoint l{0.2, -0.3};
  const PositionPoint x{0.15, -0.35};
  EXPECT_LT(rel(whittaker_tilde(l, x, c), phib(x.x2 - x.x1, c) * whittaker_gg(l, x, c)), 1e-8);
}

TEST(Whittaker, LatticeValues) {
  auto c = QdContext::make(0.8);
  const SpectralPoint l{0.2, -0.1};
  const GeneralizedPartition2 zero(0, 0);
  auto v00 = whittaker_tilde_at_lattice(l, zero, zero, c);
  EXPECT_LT(std::abs(v00.value - 1.0), 1e-4);
  auto v01 = whittaker_tilde_at_lattice(l, GeneralizedPartition2(0, 1), zero, c);
  const cplx e = std::exp(2.0 * kPi * c.b * l.lambda1) + std::exp(2.0 * kPi * c.b * l.lambda2);
  EXPECT_LT(rel(v01.value, e), 1e-4);
  EXPECT_EQ(v01.samples.size(), default_offsets().size());
}

TEST(HallnasRuijsenaars, SymmetriesAndDuality) {
  auto c = QdContext::make(0.8, 0.1);
  const SpectralPoint l{0.2, -0.1}, mu{0.3, 0.05};
  const cplx p = hr_wavefunction(mu, l, c);
  EXPECT_LT(rel(hr_wavefunction(mu.swapped(), l, c), p), 1e-8);
  EXPECT_LT(rel(hr_wavefunction(mu, l.swapped(), c), p), 1e-8);
  EXPECT_LT(rel(hr_wavefunction(l, mu, c.with_tau(-0.1)), p), 1e-8);
  EXPECT_LT(rel(phi_matrix_coeff(mu, l, c), mc_factor(c) * p), 1e-14);
}

TEST(HallnasRuijsenaars, LatticeValues) {
  auto c = QdContext::make(0.8, 0.15);
  const SpectralPoint l{0.25, -0.15};
  const GeneralizedPartition2 zero(0, 0), one(0, 1);
  EXPECT_LT(std::abs(hr_renormalized_at_lattice(l, zero, zero, c).value - 1.0), 1e-4);
  const cplx e = std::exp(2.0 * kPi * c.b * l.lambda1) + std::exp(2.0 * kPi * c.b * l.lambda2);
  auto v = hr_renormalized_at_lattice(l, one, zero, c);
  EXPECT_LT(rel(v.value, e), 1e-4);
  EXPECT_LT(rel(v.value, macdonald_poly_product(l, one, zero, c)), 1e-4);
}

TEST(Richardson, LinearIsExact) {
  auto r = richardson([](double e) { return cplx(2.0 + 3.0 * e, -e); });
  EXPECT_LT(std::abs(r.value - 2.0), 1e-12);
}

TEST(Operators, ShiftOnExponential) {
  auto c = QdContext::make(0.8, 0.1);
  auto f = [&](cplx a, cplx b) { return std::exp(2.0 * kPi * c.b * (a + b)); };
  const cplx v1 = 0.3, v2 = -0.2;
  EXPECT_LT(rel(macdonald_operator(2, c).apply(f, v1, v2, c), f(v1 + kI * c.b, v2 + kI * c.b)), 1e-14);
  // M1 on an exponential in lambda_1 alone
  auto g = [&](cplx a, cplx) { return std::exp(2.0 * kPi * c.b * a); };
  const cplx L1 = std::exp(2.0 * kPi * c.b * v1), L2 = std::exp(2.0 * kPi * c.b * v2);
  const cplx expect = (c.t * L1 - L2 / c.t) / (L1 - L2) * g(v1 + kI * c.b, v2) + (c.t * L2 - L1 / c.t) / (L2 - L1) * g(v1, v2);
  EXPECT_LT(rel(macdonald_operator(1, c).apply(g, v1, v2, c), expect), 1e-13);
}

TEST(Operators, CoefficientPole) {
  auto c = QdContext::make(0.8, 0.1);
  auto f = [](cplx, cplx) { return cplx(1.0); };
  EXPECT_THROW(macdonald_operator(1, c).apply(f, 0.3, 0.3, c), CoefficientPole);
  EXPECT_THROW(dual_toda(1, 0, c).apply(f, 0.3, 0.3, c), CoefficientPole);
  EXPECT_THROW(dual_toda(2, 1, c), ConfigError);
}

TEST(Operators, TodaEigen) {
  auto c = QdContext::make(0.8);
  const SpectralPoint l{0.3, -0.25};
  auto psi = [&](cplx a, cplx b) { return whittaker_mb(l, {a, b}, c); };
  const cplx p = psi(0.1, -0.2);
  for (int j = 1; j <= 2; ++j)
    EXPECT_LT(rel(toda_hamiltonian(j, c).apply(psi, 0.1, -0.2, c), elementary(j, l, c) * p), 1e-6) << j;
}

TEST(Measures, Sklyanin) {
  auto c = QdContext::make(0.8);
  EXPECT_EQ(sklyanin_measure(0.4, 0.4, c), 0.0);
  EXPECT_GT(sklyanin_measure(0.4, -0.3, c), 0.0);
  EXPECT_GT(sklyanin_measure(-0.4, 0.3, c), 0.0);
}

TEST(Measures, MacdonaldRuijsenaarsVsDoubleSine) {
  auto c = QdContext::make(0.8);
  // inside the strip of the integral representation
  const cplx l1{0.3, -0.4}, l2 = -0.15, g = 1.0;
  const cplx direct = double_sine(kI * (l1 - l2), c.b, 1.0 / c.b) * double_sine(kI * (l2 - l1) + g, c.b, 1.0 / c.b);
  EXPECT_LT(rel(mr_measure(l1, l2, g, c), direct), 1e-10);
}

TEST(HarishChandra, WhittakerSide) {
  auto c = QdContext::make(0.8, 0.17);
  auto r = harish_chandra_residue_check("whittaker", {}, c, 12);
  EXPECT_TRUE(r.pass) << r.to_json().dump();
  EXPECT_TRUE(r.exact_terms);
  EXPECT_TRUE(r.truncation_exact);
  EXPECT_LT(r.numeric_rel_err, 1e-8);
}

TEST(HarishChandra, MacdonaldSide) {
  auto c = QdContext::make(0.8, 0.17);
  HarishChandraParams p;
  p.lambda = {0.3, -0.25};
  auto r = harish_chandra_residue_check("macdonald", p, c, 12);
  EXPECT_TRUE(r.pass) << r.to_json().dump();
  EXPECT_TRUE(r.exact_terms);
  EXPECT_TRUE(r.truncation_exact);
}

TEST(Suites, Quick) {
  WavefunSuiteOptions o;
  o.quick = true;
  o.bs = {0.8};
  EXPECT_TRUE(all_pass(whittaker_agreement_suite(o)));
  EXPECT_TRUE(all_pass(symmetry_suite(o)));
}

TEST(Serialization, Deterministic) {
  auto c = QdContext::make(0.8);
  const SpectralPoint l{0.31, -0.42};
  const PositionPoint x{0.25, -0.6};
  EXPECT_EQ(whittaker_mb_ex(l, x, c).to_json().dump(), whittaker_mb_ex(l, x, c).to_json().dump());
}
