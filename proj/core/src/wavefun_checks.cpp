#include <algorithm>
#include <cmath>
#include <random>

#include "rtoda/wavefun.hpp"

namespace rtoda {

namespace {

double rel_diff(cplx a, cplx b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0 ? 0.0 : std::abs(a - b) / s;
}

nlohmann::json cjson(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

cplx ex(cplx z) { return std::exp(z); }

Check make_check(std::string name, double residual, double threshold, nlohmann::json detail = {}) {
  Check c;
  c.name = std::move(name);
  c.residual = residual;
  c.threshold = threshold;
  c.pass = std::isfinite(residual) && residual <= threshold;
  c.detail = std::move(detail);
  return c;
}

Check exact_check(std::string name, bool ok, nlohmann::json detail = {}) {
  return make_check(std::move(name), ok ? 0.0 : 1.0, 0.0, std::move(detail));
}

// prod_{j=1}^r (1 + q^{1-2j} W): ratio phi(w - irb)/phi(w) with W = e^{2 pi b w}
QRational shift_ratio(const QRational& W, int r) {
  const QRational q(Poly::var(qvar::Q));
  QRational acc(1);
  for (int j = 1; j <= r; ++j) acc *= QRational(1) + q.pow(1 - 2 * j) * W;
  return acc;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t s) : gen(s) {}
  double uni(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
  SpectralPoint spec(double r) { return {uni(-r, r), uni(-r, r)}; }
};

// the Whittaker side uses Lambda_12, the Macdonald side Lambda_21
constexpr int kMaxR = 64;

}  // namespace

// ---- Harish-Chandra ---------------------------------------------------------------

namespace {

HarishChandraReport hc_whittaker(const HarishChandraParams& p, const QdContext& ctx, int R) {
  HarishChandraReport rep;
  rep.side = "whittaker";
  rep.R = R;
  const SpectralPoint& l = p.lambda;
  const PositionPoint& x = p.x;
  const QdIntegrand f = whittaker_tilde_integrand(l, x, ctx);
  const cplx pre = whittaker_tilde_prefactor(l, x, ctx);
  // contribution of t_{r,0} to the downward-closed contour: -2 pi i Res
  auto contrib = [&](int upto) {
    std::vector<PoleRef> poles;
    for (int r = 0; r <= upto; ++r) poles.push_back({PoleRef::Family::Descending, 0, r, 0});
    return -pre * residue_sum(f, poles, ctx);
  };
  const cplx x1p = x.x1 - ctx.c_b / 2.0, x2p = x.x2 + ctx.c_b / 2.0;
  const cplx S = contrib(R);
  const SeriesResult ser = hc_whittaker_series(l.lambda1, l.lambda2, x1p, x2p, ctx, R);
  rep.numeric_rel_err = rel_diff(S, ser.value);
  rep.checks.push_back(make_check("residues_vs_series", rep.numeric_rel_err, p.tol,
                                  {{"residue_sum", cjson(S)}, {"series", cjson(ser.value)}}));
  const cplx S5 = contrib(R + 5);
  rep.tail_rel = std::abs(S5 - S) / std::abs(S);
  const SeriesResult ser5 = hc_whittaker_series(l.lambda1, l.lambda2, x1p, x2p, ctx, R + 5);
  rep.checks.push_back(make_check("partial_sums_R_vs_R+5", rel_diff(S5, ser5.value), p.tol,
                                  {{"tail_rel", rep.tail_rel}, {"series_tail", ser.tail / std::abs(ser.value)}}));
  rep.checks.push_back(make_check("tail_within_bound", rep.tail_rel, std::max(10.0 * ser.tail / std::abs(ser.value), 1e-13)));

  // exact residue coefficients from the functional equations
  const QRational q(Poly::var(qvar::Q)), X(Poly::var(qvar::X2)), L(Poly::var(qvar::L));
  bool ok = true;
  int bad = -1;
  for (int r = 0; r <= R && ok && p.exact; ++r) {
    const QRational derived = L.pow(r) * shift_ratio(X * q.pow(2 * r), r) / shift_ratio(-q.pow(-1), r);
    const QRational series = L.pow(r) * hc_whittaker_coeff(r).subs(qvar::X2, -q * X);
    if (derived != series) ok = false, bad = r;
  }
  rep.exact_terms = ok && p.exact;
  if (p.exact) rep.checks.push_back(exact_check("exact_term_by_term", ok, {{"first_mismatch", bad}}));

  // truncation at x' = (-i n1 b, -i n2 b)
  bool trunc = true;
  double trunc_num = 0;
  for (int n = 0; n <= 3; ++n) {
    const GeneralizedPartition2 part(1, 1 + n);
    const QRational qm2n(Poly::var(qvar::Q, -2 * n));
    QRational sum(0);
    const QRational X1(Poly::var(qvar::X1)), X2(Poly::var(qvar::X2));
    for (int r = 0; r <= R && p.exact; ++r) {
      const QRational c = hc_whittaker_coeff(r).subs(qvar::X2, qm2n);
      if (r > n && !c.is_zero()) trunc = false;
      if (r <= n) sum += c * X1.pow(part.n1 + r) * X2.pow(part.n2 - r);
    }
    if (p.exact && sum != whittaker_poly(part, q.pow(-2))) trunc = false;
    const PositionPoint xl{special_point(+1, part.n1, 0, ctx), special_point(-1, part.n2, 0, ctx)};
    const SeriesResult s = hc_whittaker_series(l.lambda1, l.lambda2, xl.x1 - ctx.c_b / 2.0, xl.x2 + ctx.c_b / 2.0,
                                               ctx, R);
    const cplx W = whittaker_poly(part, ex(2.0 * kPi * ctx.b * l.lambda1), ex(2.0 * kPi * ctx.b * l.lambda2),
                                  1.0 / (ctx.q * ctx.q));
    trunc_num = std::max(trunc_num, rel_diff(s.value, W));
  }
  rep.truncation_exact = trunc && p.exact;
  if (p.exact) rep.checks.push_back(exact_check("lattice_truncation_exact_n<=3", trunc));
  rep.checks.push_back(make_check("lattice_truncation_numeric", trunc_num, p.tol));
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const Check& c) { return c.pass; });
  return rep;
}

// P_+ of the Macdonald-side residue expansion (family 1); family 0 is P_- by mu1 <-> mu2
cplx hc_macdonald_closed(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx, int R) {
  const cplx tau = ctx.tau, tm = ctx.c_b / 2.0 - tau, tp = ctx.c_b / 2.0 + tau;
  const cplx m1p = mu.lambda1 - tp, m2p = mu.lambda2 + tp;
  const cplx d = mu.lambda1 - mu.lambda2;
  const double b = ctx.b;
  const cplx L21 = ex(2.0 * kPi * b * (l.lambda2 - l.lambda1));
  const cplx M12 = ex(2.0 * kPi * b * d);
  const SeriesResult s = hc_macdonald_series(L21, M12, ctx.q, ctx.t, R);
  return ctx.zeta * ctx.zeta_inv *
         ex(4.0 * kPi * kI * tau * tau + 2.0 * kPi * kI * tm * (m2p - m1p) + log_phib(d - 2.0 * tau, ctx) -
            log_phib(d - ctx.c_b, ctx) - 2.0 * kPi * kI * (l.lambda1 * m1p + l.lambda2 * m2p)) *
         s.value;
}

HarishChandraReport hc_macdonald(const HarishChandraParams& p, const QdContext& ctx, int R) {
  HarishChandraReport rep;
  rep.side = "macdonald";
  rep.R = R;
  const SpectralPoint& l = p.lambda;
  const SpectralPoint& mu = p.mu;
  const QdIntegrand f = hr_integrand(mu, l, ctx);
  const cplx pre = hr_prefactor(mu, l, ctx);
  auto contrib = [&](int family, int upto) {
    std::vector<PoleRef> poles;
    for (int r = 0; r <= upto; ++r) poles.push_back({PoleRef::Family::Descending, family, r, 0});
    return -pre * residue_sum(f, poles, ctx);
  };
  const cplx Pp = contrib(1, R), Pm = contrib(0, R);
  const cplx Cp = hc_macdonald_closed(mu, l, ctx, R), Cm = hc_macdonald_closed(mu.swapped(), l, ctx, R);
  rep.numeric_rel_err = std::max(rel_diff(Pp, Cp), rel_diff(Pm, Cm));
  rep.checks.push_back(make_check("P_plus_residues_vs_series", rel_diff(Pp, Cp), p.tol,
                                  {{"residue_sum", cjson(Pp)}, {"series", cjson(Cp)}}));
  rep.checks.push_back(make_check("P_minus_residues_vs_series", rel_diff(Pm, Cm), p.tol,
                                  {{"residue_sum", cjson(Pm)}, {"series", cjson(Cm)}}));
  const cplx Pp5 = contrib(1, R + 5);
  rep.tail_rel = std::abs(Pp5 - Pp) / std::abs(Pp);
  rep.checks.push_back(make_check("partial_sums_R_vs_R+5", rel_diff(Pp5, hc_macdonald_closed(mu, l, ctx, R + 5)),
                                  p.tol, {{"tail_rel", rep.tail_rel}}));
  {
    const cplx L21 = ex(2.0 * kPi * ctx.b * (l.lambda2 - l.lambda1));
    const SeriesResult s = hc_macdonald_series(L21, ex(2.0 * kPi * ctx.b * mu.half() * 2.0), ctx.q, ctx.t, R);
    rep.checks.push_back(
        make_check("tail_within_bound", rep.tail_rel, std::max(10.0 * s.tail / std::abs(s.value), 1e-13)));
  }

  const QRational q(Poly::var(qvar::Q)), t(Poly::var(qvar::T)), M(Poly::var(qvar::M)), L(Poly::var(qvar::L));
  bool ok = true;
  int bad = -1;
  const QRational e4bt = -(t.pow(2) / q).pow(-1);  // e^{-4 pi b tau} = -q/t^2
  for (int r = 0; r <= R && ok && p.exact; ++r) {
    const QRational derived = L.pow(r) * (t.pow(2) * q.pow(-2)).pow(r) * shift_ratio(M * e4bt, r) *
                              shift_ratio(e4bt, r) / (shift_ratio(-q.pow(-1) * M, r) * shift_ratio(-q.pow(-1), r));
    if (derived != L.pow(r) * hc_macdonald_coeff(r)) ok = false, bad = r;
  }
  rep.exact_terms = ok && p.exact;
  if (p.exact) rep.checks.push_back(exact_check("exact_term_by_term", ok, {{"first_mismatch", bad}}));

  // lattice point mu = (-tau - c+_{n1,0}, tau - c-_{n2,0})
  bool trunc = true;
  double trunc_num = 0, first_zero = 0;
  const QRational X1(Poly::var(qvar::X1)), X2(Poly::var(qvar::X2));
  for (int n = 0; n <= 3; ++n) {
    const GeneralizedPartition2 part(1, 1 + n);
    // M_21 = t^2 q^{2n} at the lattice point
    const QRational Mlat = t.pow(2) * q.pow(2 * n);
    QRational sum(0);
    for (int r = 0; r <= R && p.exact; ++r) {
      const QRational c = hc_macdonald_coeff(r).subs(qvar::M, Mlat);
      if (r > n && !c.is_zero()) trunc = false;
      if (r <= n) sum += c * X1.pow(part.n1 + r) * X2.pow(part.n2 - r);
    }
    if (p.exact && sum != macdonald_poly(part, t.pow(2), q.pow(2))) trunc = false;

    const SpectralPoint ml = macdonald_lattice_point(part, GeneralizedPartition2(0, 0), 0.0, ctx);
    // first summand: phi(-2mu - 2tau) sits on a pole
    const cplx arg = -2.0 * ml.half() - 2.0 * ctx.tau;
    first_zero = std::max(first_zero, PoleZeroLattice::poles(ctx).distance(arg));
    // second summand: the phi ratios cancel and the constant zeta^2 zeta_inv e^{pi i c_b^2} is 1
    const cplx tp = ctx.c_b / 2.0 + ctx.tau;
    const cplx L21 = ex(2.0 * kPi * ctx.b * (l.lambda2 - l.lambda1));
    const cplx M21 = ex(-4.0 * kPi * ctx.b * ml.half());
    const SeriesResult s = hc_macdonald_series(L21, M21, ctx.q, ctx.t, R);
    const cplx konst = ctx.zeta * ctx.zeta * ctx.zeta_inv * ex(kI * kPi * ctx.c_b * ctx.c_b);
    const cplx val = konst *
                     ex(-2.0 * kPi * kI * (l.lambda1 * (ml.lambda2 - tp) + l.lambda2 * (ml.lambda1 + tp))) * s.value;
    const cplx P = macdonald_poly(part, ex(2.0 * kPi * ctx.b * l.lambda1), ex(2.0 * kPi * ctx.b * l.lambda2),
                                  ctx.t * ctx.t, ctx.q * ctx.q);
    trunc_num = std::max(trunc_num, rel_diff(val, P));
  }
  rep.truncation_exact = trunc && p.exact;
  if (p.exact) rep.checks.push_back(exact_check("lattice_truncation_exact_n<=3", trunc));
  rep.checks.push_back(make_check("first_summand_on_pole", first_zero, 1e-10));
  rep.checks.push_back(make_check("lattice_truncation_numeric", trunc_num, p.tol));
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const Check& c) { return c.pass; });
  return rep;
}

}  // namespace

HarishChandraReport harish_chandra_residue_check(const std::string& side, const HarishChandraParams& p,
                                                 const QdContext& ctx, int R) {
  if (R < 0 || R > kMaxR) throw ConfigError("truncation order out of range");
  if (side == "whittaker") return hc_whittaker(p, ctx, R);
  if (side == "macdonald") return hc_macdonald(p, ctx, R);
  throw ConfigError("unknown Harish-Chandra side '" + side + "'");
}

// ---- suites ------------------------------------------------------------------------

namespace {

struct MaxTracker {
  double worst = 0;
  nlohmann::json at;
  void add(double r, nlohmann::json where) {
    if (!(r <= worst)) worst = r, at = std::move(where);
  }
};

nlohmann::json spj(const SpectralPoint& s) { return {cjson(s.lambda1), cjson(s.lambda2)}; }
nlohmann::json ppj(const PositionPoint& s) { return {cjson(s.x1), cjson(s.x2)}; }

double pick_b(const WavefunSuiteOptions& o, int i) { return o.bs.at(std::size_t(i) % o.bs.size()); }

}  // namespace

std::vector<Check> whittaker_agreement_suite(const WavefunSuiteOptions& o) {
  std::vector<Check> out;
  Rng rng(o.seed);
  const int n = o.quick ? std::min(o.gg_points, 4) : o.gg_points;
  const int m = o.quick ? std::min(o.points, 3) : o.points;
  for (double b : o.bs) {
    const QdContext ctx = QdContext::make(b);
    MaxTracker gm, st;
    for (int i = 0; i < n; ++i) {
      const SpectralPoint l = rng.spec(1.5);
      const PositionPoint x{rng.uni(-1.5, 1.5), rng.uni(-1.5, 1.5)};
      gm.add(rel_diff(whittaker_gg(l, x, ctx, o.tol), whittaker_mb(l, x, ctx, o.tol)),
             {{"lambda", spj(l)}, {"x", ppj(x)}});
    }
    for (int i = 0; i < m; ++i) {
      const SpectralPoint l = rng.spec(1.5);
      const PositionPoint x{rng.uni(-1.5, 1.5), rng.uni(-1.5, 1.5)};
      st.add(rel_diff(whittaker_gg(l.star(), x, ctx, o.tol), whittaker_mb(l, x.star(), ctx, o.tol)),
             {{"lambda", spj(l)}, {"x", ppj(x)}});
    }
    const std::string tag = "b=" + nlohmann::json(b).dump();
    out.push_back(make_check("gg_equals_mb " + tag, gm.worst, 1e-8, {{"points", n}, {"worst_at", gm.at}}));
    out.push_back(make_check("gg_star_equals_mb " + tag, st.worst, 1e-8, {{"points", m}, {"worst_at", st.at}}));
  }
  return out;
}

std::vector<Check> eigen_suite(const WavefunSuiteOptions& o) {
  std::vector<Check> out;
  Rng rng(o.seed + 1);
  const int n = o.quick ? std::min(o.points, 3) : o.points;
  MaxTracker h[2], mm[2], expand, def0, twist;
  for (int i = 0; i < n; ++i) {
    const QdContext ctx = QdContext::make(pick_b(o, i), rng.uni(-0.5, 0.5));
    const SpectralPoint l = rng.spec(1.5), mu = rng.spec(1.5);
    const PositionPoint x{rng.uni(-1.5, 1.5), rng.uni(-1.5, 1.5)};
    auto phi = [&](cplx a, cplx c) { return phi_matrix_coeff(mu, {a, c}, ctx, o.tol); };
    const nlohmann::json where = {{"b", ctx.b}, {"tau", ctx.tau.real()}, {"lambda", spj(l)}, {"mu", spj(mu)},
                                  {"x", ppj(x)}};
    for (int j = 1; j <= 2; ++j) {
      h[j - 1].add(toda_eigen_residual(j, l, x, ctx, o.tol), where);
      mm[j - 1].add(macdonald_eigen_residual(j, mu, l, ctx, o.tol), where);
    }
    // M1 = t^{-1} H_{1,0} - q^{-2} t/(L1 L2) H_{1,2}, on an exponential and on Phi
    const cplx a1(rng.uni(-1, 1), rng.uni(-1, 1)), a2(rng.uni(-1, 1), rng.uni(-1, 1));
    auto expf = [&](cplx u, cplx v) { return ex(a1 * u + a2 * v); };
    for (const auto& fn : {std::function<cplx(cplx, cplx)>(expf), std::function<cplx(cplx, cplx)>(phi)}) {
      const cplx lhs = macdonald_operator(1, ctx).apply(fn, l.lambda1, l.lambda2, ctx);
      const cplx L12 = ex(2.0 * kPi * ctx.b * l.underline());
      const cplx rhs = dual_toda(1, 0, ctx).apply(fn, l.lambda1, l.lambda2, ctx) / ctx.t -
                       ctx.t / (ctx.q * ctx.q * L12) * dual_toda(1, 2, ctx).apply(fn, l.lambda1, l.lambda2, ctx);
      expand.add(rel_diff(lhs, rhs), where);
    }
    // (t M1)|_{t=0} = H_{1,0}
    {
      QdContext z = ctx;
      z.t = 1e-9;
      const cplx lhs = z.t * macdonald_operator(1, z).apply(expf, l.lambda1, l.lambda2, z);
      def0.add(rel_diff(lhs, dual_toda(1, 0, ctx).apply(expf, l.lambda1, l.lambda2, ctx)), where);
    }
    // H_{1,1} = gamma H_{1,0} gamma^{-1}, gamma = e^{pi i (l1^2 + l2^2)}
    {
      auto gam = [](cplx u, cplx v) { return ex(kI * kPi * (u * u + v * v)); };
      auto g_inv_f = [&](cplx u, cplx v) { return expf(u, v) / gam(u, v); };
      const cplx lhs = dual_toda(1, 1, ctx).apply(expf, l.lambda1, l.lambda2, ctx);
      const cplx rhs = gam(l.lambda1, l.lambda2) * dual_toda(1, 0, ctx).apply(g_inv_f, l.lambda1, l.lambda2, ctx);
      twist.add(rel_diff(lhs, rhs), where);
    }
  }
  for (int j = 0; j < 2; ++j) {
    out.push_back(make_check("toda_H" + std::to_string(j + 1) + "_eigen", h[j].worst, 1e-6,
                             {{"points", n}, {"worst_at", h[j].at}}));
  }
  for (int j = 0; j < 2; ++j) {
    out.push_back(make_check("macdonald_M" + std::to_string(j + 1) + "_eigen", mm[j].worst, 1e-6,
                             {{"points", n}, {"worst_at", mm[j].at}}));
  }
  out.push_back(make_check("dual_toda_expansion_of_M1", expand.worst, 1e-10, {{"worst_at", expand.at}}));
  out.push_back(make_check("dual_toda_is_tM1_at_t0", def0.worst, 1e-12, {{"t", 1e-9}}));
  out.push_back(make_check("dual_toda_twist_n0_to_n1", twist.worst, 1e-12, {{"worst_at", twist.at}}));
  return out;
}

std::vector<Check> symmetry_suite(const WavefunSuiteOptions& o) {
  std::vector<Check> out;
  Rng rng(o.seed + 2);
  const int n = o.quick ? std::min(o.points, 3) : o.points;
  MaxTracker wsw, lsw, msw, dual, ev[2], dual_err, conj_p_err, conj_phi_err, rem, konst;
  for (int i = 0; i < n; ++i) {
    const QdContext ctx = QdContext::make(pick_b(o, i), rng.uni(-0.5, 0.5));
    const QdContext neg = ctx.with_tau(-ctx.tau);
    const SpectralPoint l = rng.spec(1.5), mu = rng.spec(1.5);
    const PositionPoint x{rng.uni(-1.5, 1.5), rng.uni(-1.5, 1.5)};
    const nlohmann::json where = {{"b", ctx.b}, {"tau", cjson(ctx.tau)}, {"lambda", spj(l)}, {"mu", spj(mu)}};
    const double tol = o.tol;

    wsw.add(rel_diff(whittaker_gg(l.swapped(), x, ctx, tol), whittaker_gg(l, x, ctx, tol)), where);
    const cplx P = hr_wavefunction(mu, l, ctx, tol);
    lsw.add(rel_diff(hr_wavefunction(mu, l.swapped(), ctx, tol), P), where);
    msw.add(rel_diff(hr_wavefunction(mu.swapped(), l, ctx, tol), P), where);
    const cplx Pdual = hr_wavefunction(l, mu, neg, tol);
    dual.add(rel_diff(Pdual, P), where);

    const cplx F = mc_factor(ctx) * P;
    for (int j = 1; j <= 2; ++j) {
      auto phi = [&](cplx a, cplx c) { return phi_matrix_coeff(mu, {a, c}, ctx, tol); };
      const cplx g = elementary(j, mu, ctx) * F;
      ev[j - 1].add(std::abs(macdonald_operator(j, ctx).apply(phi, l.lambda1, l.lambda2, ctx) - g) / std::abs(g),
                    where);
    }
    dual_err.add(rel_diff(F, mc_factor(neg) * Pdual), where);
    const cplx Pneg_star = hr_wavefunction(mu, l.star(), neg, tol);
    conj_p_err.add(rel_diff(std::conj(F), mc_factor(neg) * Pneg_star), where);
    conj_phi_err.add(rel_diff(std::conj(P), Pneg_star / ctx.zeta_inv * ex(-4.0 * kPi * kI * ctx.tau * ctx.tau)), where);
    // conj(zeta zeta_s^{-1}) zeta^{-1} zeta_s = zeta_inv^{-1} carries the P relation over to Phi
    const cplx k = ctx.zeta / ctx.zeta_s;
    konst.add(rel_diff(std::conj(k) / k, 1.0 / ctx.zeta_inv), {{"b", ctx.b}});

    const QdContext im = ctx.with_tau(kI * rng.uni(-0.4, 0.4) * ctx.im_cb() / 2.0);
    const cplx Pi = hr_wavefunction(mu, l, im, tol);
    rem.add(rel_diff(hr_wavefunction(mu, -l, im, tol),
                     im.zeta_inv * ex(4.0 * kPi * kI * im.tau * im.tau) * std::conj(Pi)),
            {{"b", im.b}, {"tau", cjson(im.tau)}, {"lambda", spj(l)}, {"mu", spj(mu)}});
  }
  auto push = [&](const std::string& name, const MaxTracker& t) {
    out.push_back(make_check(name, t.worst, 1e-8, {{"points", n}, {"worst_at", t.at}}));
  };
  push("whittaker_lambda_swap", wsw);
  push("hr_lambda_swap", lsw);
  push("hr_mu_swap", msw);
  push("bispectral_duality", dual);
  push("eigenvalue_M1", ev[0]);
  push("eigenvalue_M2", ev[1]);
  push("phi_duality", dual_err);
  push("conjugation_P", conj_p_err);
  push("conjugation_Phi", conj_phi_err);
  push("conjugation_constant", konst);
  push("conjugation_imaginary_tau", rem);
  return out;
}

std::vector<Check> specialization_suite(const WavefunSuiteOptions& o) {
  std::vector<Check> out;
  Rng rng(o.seed + 3);
  std::vector<std::pair<int, int>> bases{{0, 0}, {1, -1}};
  if (o.quick) bases.resize(1);
  int k = 0;
  for (auto [n1, m1] : bases)
    for (int w = 0; w <= 2; ++w)
      for (int wt = 0; wt <= 1; ++wt, ++k) {
        const GeneralizedPartition2 n(n1, n1 + w), nt(m1, m1 + wt);
        const QdContext ctx = QdContext::make(pick_b(o, k), rng.uni(-0.5, 0.5));
        const SpectralPoint l = rng.spec(1.0);
        const std::string tag = "n=(" + std::to_string(n.n1) + "," + std::to_string(n.n2) + ") nt=(" +
                                std::to_string(nt.n1) + "," + std::to_string(nt.n2) + ")";
        const Extrapolated W = whittaker_tilde_at_lattice(l, n, nt, ctx, o.tol);
        const cplx Wex = whittaker_poly_product(l, n, nt, ctx);
        out.push_back(make_check("whittaker_lattice " + tag, rel_diff(W.value, Wex), 1e-4,
                                 {{"b", ctx.b}, {"lambda", spj(l)}, {"extrapolated", W.to_json()},
                                  {"expected", cjson(Wex)}}));
        const Extrapolated M = hr_renormalized_at_lattice(l, n, nt, ctx, o.tol);
        const cplx Mex = macdonald_poly_product(l, n, nt, ctx);
        out.push_back(make_check("macdonald_lattice " + tag, rel_diff(M.value, Mex), 1e-4,
                                 {{"b", ctx.b}, {"tau", ctx.tau.real()}, {"lambda", spj(l)},
                                  {"extrapolated", M.to_json()}, {"expected", cjson(Mex)}}));
      }
  return out;
}

std::vector<Check> harish_chandra_suite(const WavefunSuiteOptions& o) {
  std::vector<Check> out;
  bool first = true;
  for (double b : o.bs) {
    const QdContext ctx = QdContext::make(b, 0.17);
    HarishChandraParams pw;
    pw.lambda = {-0.35, 0.25};
    pw.x = {0.3, -0.2};
    HarishChandraParams pm;
    pm.lambda = {0.3, -0.25};
    pm.mu = {0.4, -0.15};
    // the exact parts do not depend on b
    pw.exact = pm.exact = first;
    first = false;
    for (auto [side, p] : {std::pair{std::string("whittaker"), pw}, std::pair{std::string("macdonald"), pm}}) {
      const HarishChandraReport r = harish_chandra_residue_check(side, p, ctx, 12);
      for (Check c : r.checks) {
        c.name = "hc_" + side + " " + c.name + " b=" + nlohmann::json(b).dump();
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace rtoda
