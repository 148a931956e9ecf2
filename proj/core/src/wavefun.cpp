#include "rtoda/wavefun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "rtoda/opalg.hpp"

namespace rtoda {

namespace {

nlohmann::json cjson(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

cplx ex(cplx z) { return std::exp(z); }

// extended-precision copy used for residues and prefactors near a pinch
const QdContext& pinch_context(const QdContext& ctx, QdContext& storage) {
  if (ctx.precision == Precision::Extended) return ctx;
  storage = ctx.with_precision(Precision::Extended);
  return storage;
}

}  // namespace

nlohmann::json WaveValue::to_json() const {
  return {{"value", cjson(value)}, {"error", error}, {"residues", residues}, {"converged", converged}};
}

nlohmann::json Extrapolated::to_json() const {
  nlohmann::json s = nlohmann::json::array();
  for (std::size_t i = 0; i < eps.size(); ++i) s.push_back({{"eps", eps[i]}, {"value", cjson(samples[i])}});
  return {{"value", cjson(value)}, {"error", error}, {"samples", s}};
}

nlohmann::json Check::to_json() const {
  return {{"name", name}, {"residual", residual}, {"threshold", threshold}, {"pass", pass}, {"detail", detail}};
}

nlohmann::json HarishChandraReport::to_json() const {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& k : checks) c.push_back(k.to_json());
  return {{"side", side},
          {"R", R},
          {"exact_terms", exact_terms},
          {"numeric_rel_err", numeric_rel_err},
          {"tail_rel", tail_rel},
          {"truncation_exact", truncation_exact},
          {"pass", pass},
          {"checks", c}};
}

// ---- separated contour ------------------------------------------------------

namespace {

// Imaginary parts of the pole levels of f inside [lo, hi], sorted.
std::vector<double> pole_levels(const QdIntegrand& f, const QdContext& ctx, double lo, double hi) {
  const double b = ctx.b, bi = 1.0 / ctx.b;
  std::vector<double> levels;
  for (cplx a : f.num) {
    const double y0 = (a + ctx.c_b).imag();
    for (int m = 0; y0 + b * m <= hi; ++m)
      for (int n = 0; y0 + b * m + bi * n <= hi; ++n)
        if (y0 + b * m + bi * n >= lo) levels.push_back(y0 + b * m + bi * n);
  }
  for (cplx d : f.den) {
    const double y0 = (d - ctx.c_b).imag();
    for (int m = 0; y0 - b * m >= lo; ++m)
      for (int n = 0; y0 - b * m - bi * n >= lo; ++n)
        if (y0 - b * m - bi * n <= hi) levels.push_back(y0 - b * m - bi * n);
  }
  std::sort(levels.begin(), levels.end());
  return levels;
}

// Straight contour at height h plus the residues of the poles it leaves on
// the wrong side.
WaveValue integrate_at_height(const QdIntegrand& f, const QdContext& ctx, double h, double tol) {
  ContourOptions o;
  o.rel_tol = tol;
  o.height = h;
  auto r = integrate(f, build_contour(f, ctx, o), ctx, tol);
  const double b = ctx.b, bi = 1.0 / ctx.b;
  std::vector<PoleRef> below, above;
  for (std::size_t j = 0; j < f.num.size(); ++j) {
    const double y0 = (f.num[j] + ctx.c_b).imag();
    for (int m = 0; y0 + b * m < h; ++m)
      for (int n = 0; y0 + b * m + bi * n < h; ++n) below.push_back({PoleRef::Family::Ascending, int(j), m, n});
  }
  for (std::size_t k = 0; k < f.den.size(); ++k) {
    const double y0 = (f.den[k] - ctx.c_b).imag();
    for (int m = 0; y0 - b * m > h; ++m)
      for (int n = 0; y0 - b * m - bi * n > h; ++n) above.push_back({PoleRef::Family::Descending, int(k), m, n});
  }
  WaveValue out;
  QdContext store;
  const QdContext& rc = pinch_context(ctx, store);
  out.value = r.value;
  if (!below.empty()) out.value += residue_sum(f, below, rc);
  if (!above.empty()) out.value -= residue_sum(f, above, rc);
  out.error = r.error;
  out.converged = r.converged;
  out.residues = int(below.size() + above.size());
  return out;
}

// largest log|f| along the path, tails included
double path_peak(const QdIntegrand& f, const ContourPath& p, const QdContext& ctx) {
  double peak = -std::numeric_limits<double>::infinity();
  auto probe = [&](cplx t) {
    try {
      peak = std::max(peak, f.log_value(t, ctx).real());
    } catch (const Error&) {
    }
  };
  const int n = 160;
  for (int i = 0; i <= n; ++i) probe(p.left + (p.right - p.left) * (double(i) / n));
  for (const Tail* tl : {&p.left_tail, &p.right_tail}) {
    const cplx dir = std::polar(1.0, tl->angle);
    for (int i = 1; i <= n; ++i) probe(tl->start + dir * (tl->radius * i / n));
  }
  return peak;
}

}  // namespace

WaveValue integrate_separated(const QdIntegrand& f, const QdContext& ctx, double tol) {
  const double inf = std::numeric_limits<double>::infinity();
  const double Qi = ctx.im_cb();
  double asc = inf, desc = -inf;
  for (cplx a : f.num) asc = std::min(asc, (a + ctx.c_b).imag());
  for (cplx b : f.den) desc = std::max(desc, (b - ctx.c_b).imag());
  ContourOptions o;
  o.rel_tol = tol;
  WaveValue out;
  if (!std::isfinite(asc) || !std::isfinite(desc) || asc - desc >= 1e-2 * Qi) {
    const ContourPath path = build_contour(f, ctx, o);
    auto r = integrate(f, path, ctx, tol);
    out.value = r.value;
    out.error = r.error;
    out.converged = r.converged;
    // When the integral is much smaller than the integrand the quadrature
    // loses digits to cancellation; move the line to the level where the
    // integrand is smallest and collect the residues in between.
    const double peak = path_peak(f, path, ctx);
    if (!(std::log(std::abs(r.value)) < peak - std::log(1e4))) return out;
    const double lo = path.height - 4.0 * Qi, hi = path.height + 4.0 * Qi;
    const std::vector<double> lv = pole_levels(f, ctx, lo, hi);
    if (lv.size() > 400) return out;
    // the residues picked up count towards the size of the terms summed
    QdContext store;
    const QdContext& rc = pinch_context(ctx, store);
    auto crossed_peak = [&](double h) {
      double m = -inf;
      const double b = ctx.b, bi = 1.0 / ctx.b;
      for (std::size_t j = 0; j < f.num.size(); ++j) {
        const double y0 = (f.num[j] + ctx.c_b).imag();
        for (int mm = 0; y0 + b * mm < h; ++mm)
          for (int n = 0; y0 + b * mm + bi * n < h; ++n)
            m = std::max(m, std::log(std::abs(residue(f, {PoleRef::Family::Ascending, int(j), mm, n}, rc))));
      }
      for (std::size_t k = 0; k < f.den.size(); ++k) {
        const double y0 = (f.den[k] - ctx.c_b).imag();
        for (int mm = 0; y0 - b * mm > h; ++mm)
          for (int n = 0; y0 - b * mm - bi * n > h; ++n)
            m = std::max(m, std::log(std::abs(residue(f, {PoleRef::Family::Descending, int(k), mm, n}, rc))));
      }
      return m + std::log(2 * kPi);
    };
    double best_h = path.height, best = peak;
    for (std::size_t i = 0; i + 1 < lv.size(); ++i) {
      if (lv[i + 1] - lv[i] < 0.05 * Qi) continue;
      const double h = (lv[i] + lv[i + 1]) / 2;
      ContourOptions oh = o;
      oh.height = h;
      double pk = path_peak(f, build_contour(f, ctx, oh), ctx);
      if (pk >= best - 1.0) continue;
      pk = std::max(pk, crossed_peak(h));
      if (pk < best - 1.0) best = pk, best_h = h;
    }
    if (best_h == path.height) return out;
    return integrate_at_height(f, ctx, best_h, tol);
  }

  // straight line at the widest free level near the crossing
  const double lo = std::min(asc, desc) - Qi, hi = std::max(asc, desc) + Qi;
  const std::vector<double> levels = pole_levels(f, ctx, lo, hi);
  double h = (asc + desc) / 2, best = -1;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    const double mid = (levels[i] + levels[i + 1]) / 2;
    if (mid < std::min(asc, desc) - 0.5 * Qi || mid > std::max(asc, desc) + 0.5 * Qi) continue;
    const double w = levels[i + 1] - levels[i];
    if (w > best + 1e-12) best = w, h = mid;
  }
  if (best < 1e-6 * Qi) throw PinchedContour("no pole-free level near the pinch");
  return integrate_at_height(f, ctx, h, tol);
}

// ---- Whittaker -------------------------------------------------------------------

WaveValue whittaker_gg_ex(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx, double tol) {
  const cplx cb = ctx.c_b;
  // 1/phi(x2 - r) = phi(r - x2) e^{-pi i (r - x2)^2} / zeta_inv
  QdIntegrand g;
  g.num = {x.x2};
  g.den = {x.x1 + cb};
  g.c2 = -kI * kPi;
  g.c1 = 2.0 * kPi * kI * (l.lambda1 - l.lambda2 + x.x2);
  g.c0 = -kI * kPi * x.x2 * x.x2;
  g.constant = 1.0 / ctx.zeta_inv;
  WaveValue w = integrate_separated(g, ctx, tol);
  const cplx pre = ex(kI * kPi * cb * (l.lambda2 - l.lambda1) + 2.0 * kPi * kI * l.lambda2 * x.underline()) / ctx.zeta;
  w.value *= pre;
  w.error *= std::abs(pre);
  return w;
}

WaveValue whittaker_mb_ex(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx, double tol) {
  const cplx cb = ctx.c_b;
  QdIntegrand m;
  m.num = {l.lambda1 - cb, l.lambda2 - cb};
  m.c1 = 2.0 * kPi * kI * (x.x1 - x.x2 - cb);
  WaveValue w = integrate_separated(m, ctx, tol);
  const cplx pre = ctx.zeta * ex(kI * kPi * l.underline() * (2.0 * x.x2 + cb));
  w.value *= pre;
  w.error *= std::abs(pre);
  return w;
}

QdIntegrand whittaker_tilde_integrand(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx) {
  const cplx y = x.x2 - x.x1;
  QdIntegrand g;
  g.num = {y};
  g.den = {ctx.c_b};
  g.c2 = -kI * kPi;
  g.c1 = 2.0 * kPi * kI * (l.lambda1 - l.lambda2 + y);
  g.c0 = -kI * kPi * y * y;
  g.constant = 1.0 / ctx.zeta_inv;
  return g;
}

cplx whittaker_tilde_prefactor(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx) {
  const cplx e = kI * kPi * ctx.c_b * (l.lambda2 - l.lambda1) + 2.0 * kPi * kI * (l.lambda1 * x.x1 + l.lambda2 * x.x2);
  // sign chosen so that the lattice values are +W_n W_nt
  return ex(e + log_phib(x.x2 - x.x1, ctx)) / ctx.zeta;
}

WaveValue whittaker_tilde_ex(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx, double tol) {
  const QdIntegrand g = whittaker_tilde_integrand(l, x, ctx);
  WaveValue w = integrate_separated(g, ctx, tol);
  QdContext store;
  const cplx pre = whittaker_tilde_prefactor(l, x, w.residues ? pinch_context(ctx, store) : ctx);
  w.value *= pre;
  w.error *= std::abs(pre);
  return w;
}

cplx whittaker_gg(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx, double tol) {
  return whittaker_gg_ex(l, x, ctx, tol).value;
}
cplx whittaker_mb(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx, double tol) {
  return whittaker_mb_ex(l, x, ctx, tol).value;
}
cplx whittaker_tilde(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx, double tol) {
  return whittaker_tilde_ex(l, x, ctx, tol).value;
}

// ---- Hallnas-Ruijsenaars -------------------------------------------------------------

QdIntegrand hr_integrand(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx) {
  const cplx tm = ctx.c_b / 2.0 - ctx.tau;
  const cplx m = mu.half();
  QdIntegrand f;
  f.num = {-m - tm, m - tm};
  f.den = {-m + tm, m + tm};
  f.c1 = -4.0 * kPi * kI * (l.half() + tm);
  return f;
}

cplx hr_prefactor(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx) {
  const cplx tm = ctx.c_b / 2.0 - ctx.tau;
  return ex(log_phib(ctx.c_b - 2.0 * tm, ctx) - kI * kPi * l.underline() * mu.underline());
}

cplx hr_renorm_factor(const SpectralPoint& mu, const QdContext& ctx) {
  const cplx tm = ctx.c_b / 2.0 - ctx.tau;
  const cplx m = mu.half();
  return ctx.zeta *
         ex(-4.0 * kPi * kI * m * tm + log_phib(-2.0 * m - ctx.c_b, ctx) - log_phib(-2.0 * m - 2.0 * ctx.tau, ctx));
}

cplx mc_factor(const QdContext& ctx) { return ctx.zeta_s / ctx.zeta * ex(-2.0 * kPi * kI * ctx.tau * ctx.tau); }

WaveValue hr_wavefunction_ex(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx, double tol) {
  WaveValue w = integrate_separated(hr_integrand(mu, l, ctx), ctx, tol);
  const cplx pre = hr_prefactor(mu, l, ctx);
  w.value *= pre;
  w.error *= std::abs(pre);
  return w;
}

WaveValue hr_renormalized_ex(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx, double tol) {
  WaveValue w = hr_wavefunction_ex(mu, l, ctx, tol);
  QdContext store;
  const cplx f = hr_renorm_factor(mu, w.residues ? pinch_context(ctx, store) : ctx);
  w.value *= f;
  w.error *= std::abs(f);
  return w;
}

WaveValue phi_matrix_coeff_ex(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx, double tol) {
  WaveValue w = hr_wavefunction_ex(mu, l, ctx, tol);
  const cplx f = mc_factor(ctx);
  w.value *= f;
  w.error *= std::abs(f);
  return w;
}

cplx hr_wavefunction(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx, double tol) {
  return hr_wavefunction_ex(mu, l, ctx, tol).value;
}
cplx hr_renormalized(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx, double tol) {
  return hr_renormalized_ex(mu, l, ctx, tol).value;
}
cplx phi_matrix_coeff(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx, double tol) {
  return phi_matrix_coeff_ex(mu, l, ctx, tol).value;
}

// ---- lattice points -----------------------------------------------------------------------

Extrapolated richardson(const std::function<cplx(double)>& f, const std::vector<double>& eps) {
  if (eps.size() < 2) throw ConfigError("extrapolation needs at least two offsets");
  Extrapolated out;
  out.eps = eps;
  for (double e : eps) out.samples.push_back(f(e));
  // Neville tableau evaluated at eps = 0
  const std::size_t n = eps.size();
  std::vector<cplx> P = out.samples;
  std::vector<cplx> prev_level;
  for (std::size_t k = 1; k < n; ++k) {
    prev_level = P;
    for (std::size_t i = 0; i + k < n; ++i)
      P[i] = (eps[i + k] * prev_level[i] - eps[i] * prev_level[i + 1]) / (eps[i + k] - eps[i]);
  }
  out.value = P[0];
  // distance to the best lower-order estimate
  out.error = n > 2 ? std::abs(P[0] - prev_level[1]) : std::abs(P[0] - out.samples.back());
  return out;
}

PositionPoint whittaker_lattice_point(const GeneralizedPartition2& n, const GeneralizedPartition2& nt, double eps,
                                      const QdContext& ctx) {
  return {special_point(+1, n.n1, nt.n1, ctx), special_point(-1, n.n2, nt.n2, ctx) - eps};
}

SpectralPoint macdonald_lattice_point(const GeneralizedPartition2& n, const GeneralizedPartition2& nt, double eps,
                                      const QdContext& ctx) {
  return {-ctx.tau - special_point(+1, n.n1, nt.n1, ctx) - eps, ctx.tau - special_point(-1, n.n2, nt.n2, ctx) + eps};
}

Extrapolated whittaker_tilde_at_lattice(const SpectralPoint& l, const GeneralizedPartition2& n,
                                        const GeneralizedPartition2& nt, const QdContext& ctx, double tol,
                                        const std::vector<double>& eps) {
  return richardson([&](double e) { return whittaker_tilde(l, whittaker_lattice_point(n, nt, e, ctx), ctx, tol); },
                    eps);
}

Extrapolated hr_renormalized_at_lattice(const SpectralPoint& l, const GeneralizedPartition2& n,
                                        const GeneralizedPartition2& nt, const QdContext& ctx, double tol,
                                        const std::vector<double>& eps) {
  return richardson([&](double e) { return hr_renormalized(macdonald_lattice_point(n, nt, e, ctx), l, ctx, tol); },
                    eps);
}

cplx whittaker_poly_product(const SpectralPoint& l, const GeneralizedPartition2& n, const GeneralizedPartition2& nt,
                            const QdContext& ctx) {
  const double b = ctx.b;
  const cplx L1 = ex(2.0 * kPi * b * l.lambda1), L2 = ex(2.0 * kPi * b * l.lambda2);
  const cplx D1 = ex(2.0 * kPi / b * l.lambda1), D2 = ex(2.0 * kPi / b * l.lambda2);
  return whittaker_poly(n, L1, L2, 1.0 / (ctx.q * ctx.q)) *
         whittaker_poly(nt, D1, D2, 1.0 / (ctx.qtilde * ctx.qtilde));
}

cplx macdonald_poly_product(const SpectralPoint& l, const GeneralizedPartition2& n, const GeneralizedPartition2& nt,
                            const QdContext& ctx) {
  const double b = ctx.b;
  const cplx L1 = ex(2.0 * kPi * b * l.lambda1), L2 = ex(2.0 * kPi * b * l.lambda2);
  const cplx D1 = ex(2.0 * kPi / b * l.lambda1), D2 = ex(2.0 * kPi / b * l.lambda2);
  const cplx s = 2.0 * ctx.tau + ctx.c_b;
  return macdonald_poly(n, L1, L2, ex(2.0 * kPi * b * s), ctx.q * ctx.q) *
         macdonald_poly(nt, D1, D2, ex(2.0 * kPi / b * s), ctx.qtilde * ctx.qtilde);
}

// ---- difference operators --------------------------------------------------------------

cplx MonomialSum::eval(cplx V1, cplx V2) const {
  cplx s{};
  for (const auto& m : terms) s += m.weight * ipow(V1, m.a) * ipow(V2, m.b);
  return s;
}

cplx DifferenceOperator::apply(const std::function<cplx(cplx, cplx)>& f, cplx v1, cplx v2,
                               const QdContext& ctx) const {
  const cplx V1 = ex(2.0 * kPi * ctx.b * v1), V2 = ex(2.0 * kPi * ctx.b * v2);
  cplx acc{};
  for (const auto& t : terms) {
    const cplx d = t.den.eval(V1, V2);
    double scale = 0;
    for (const auto& m : t.den.terms) scale += std::abs(m.weight * ipow(V1, m.a) * ipow(V2, m.b));
    if (std::abs(d) <= 1e-13 * scale) throw CoefficientPole(name + ": coefficient denominator vanishes");
    acc += t.num.eval(V1, V2) / d * f(v1 + t.shift[0], v2 + t.shift[1]);
  }
  return acc;
}

DifferenceOperator macdonald_operator(int j, const QdContext& ctx) {
  const cplx ib = kI * ctx.b, t = ctx.t;
  DifferenceOperator op;
  if (j == 1) {
    op.name = "M1";
    op.terms.push_back({{{{t, 1, 0}, {-1.0 / t, 0, 1}}}, {{{1.0, 1, 0}, {-1.0, 0, 1}}}, {ib, 0.0}});
    op.terms.push_back({{{{t, 0, 1}, {-1.0 / t, 1, 0}}}, {{{1.0, 0, 1}, {-1.0, 1, 0}}}, {0.0, ib}});
  } else if (j == 2) {
    op.name = "M2";
    op.terms.push_back({{{{1.0, 0, 0}}}, {{{1.0, 0, 0}}}, {ib, ib}});
  } else {
    throw ConfigError("Macdonald operator index must be 1 or 2");
  }
  return op;
}

DifferenceOperator toda_hamiltonian(int j, const QdContext& ctx) {
  const cplx mib = -kI * ctx.b;
  DifferenceOperator op;
  if (j == 1) {
    // e^{2 pi b(p2 + x2 - x1)} = q^s e^{2 pi b(x2 - x1)} e^{2 pi b p2}
    WeylExponent e;
    e.alpha = {Rational(0), Rational(1)};
    e.beta = {Rational(-1), Rational(1)};
    const NormalOrdered no = normal_order(e);
    const double s = boost::rational_cast<double>(no.scalar);
    const cplx qs = ex(kI * kPi * ctx.b * ctx.b * s);
    op.name = "H1";
    op.terms.push_back({{{{1.0, 0, 0}}}, {{{1.0, 0, 0}}}, {0.0, mib}});
    op.terms.push_back({{{{qs, -1, 1}}}, {{{1.0, 0, 0}}}, {0.0, mib}});
    op.terms.push_back({{{{1.0, 0, 0}}}, {{{1.0, 0, 0}}}, {mib, 0.0}});
  } else if (j == 2) {
    op.name = "H2";
    op.terms.push_back({{{{1.0, 0, 0}}}, {{{1.0, 0, 0}}}, {mib, mib}});
  } else {
    throw ConfigError("Toda Hamiltonian index must be 1 or 2");
  }
  return op;
}

DifferenceOperator dual_toda(int j, int n, const QdContext& ctx) {
  if (j == 2) {
    if (n != 0) throw ConfigError("only the untwisted second dual Toda operator is provided");
    DifferenceOperator op = macdonald_operator(2, ctx);
    op.name = "Hcheck2";
    return op;
  }
  if (j != 1) throw ConfigError("dual Toda index must be 1 or 2");
  const cplx ib = kI * ctx.b, qn = std::pow(ctx.q, double(n));
  DifferenceOperator op;
  op.name = "Hcheck1," + std::to_string(n);
  // L1^n/(1 - L1/L2) = L1^n L2/(L2 - L1)
  op.terms.push_back({{{{qn, n, 1}}}, {{{1.0, 0, 1}, {-1.0, 1, 0}}}, {ib, 0.0}});
  op.terms.push_back({{{{qn, 1, n}}}, {{{1.0, 1, 0}, {-1.0, 0, 1}}}, {0.0, ib}});
  return op;
}

cplx elementary(int j, const SpectralPoint& v, const QdContext& ctx) {
  const cplx a = ex(2.0 * kPi * ctx.b * v.lambda1), c = ex(2.0 * kPi * ctx.b * v.lambda2);
  if (j == 1) return a + c;
  if (j == 2) return a * c;
  throw ConfigError("elementary symmetric index must be 1 or 2");
}

// ---- measures ----------------------------------------------------------------------

double toda_eigen_residual(int j, const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx, double tol) {
  auto psi = [&](cplx a, cplx c) { return whittaker_mb(l, {a, c}, ctx, tol); };
  const cplx e = elementary(j, l, ctx) * psi(x.x1, x.x2);
  return std::abs(toda_hamiltonian(j, ctx).apply(psi, x.x1, x.x2, ctx) - e) / std::abs(e);
}

double macdonald_eigen_residual(int j, const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx,
                                double tol) {
  auto phi = [&](cplx a, cplx c) { return phi_matrix_coeff(mu, {a, c}, ctx, tol); };
  const cplx g = elementary(j, mu, ctx) * phi(l.lambda1, l.lambda2);
  return std::abs(macdonald_operator(j, ctx).apply(phi, l.lambda1, l.lambda2, ctx) - g) / std::abs(g);
}

double sklyanin_measure(double l1, double l2, const QdContext& ctx) {
  const double d = l1 - l2;
  return 2.0 * std::sinh(ctx.b * d) * std::sinh(d / ctx.b);
}

cplx mr_measure(cplx l1, cplx l2, cplx g, const QdContext& ctx) {
  return double_sine_b(kI * (l1 - l2), ctx) * double_sine_b(kI * (l2 - l1) + g, ctx);
}

}  // namespace rtoda
