#include "rtoda/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rtoda/quadrature.hpp"

namespace rtoda {

namespace {

nlohmann::json cjson(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

// copy of ctx that tolerates long functional-equation chains on the tails
QdContext tail_context(const QdContext& ctx) {
  QdContext c = ctx;
  c.max_shifts = 1 << 20;
  return c;
}

}  // namespace

cplx QdIntegrand::log_value(cplx t, const QdContext& ctx) const {
  cplx acc = c2 * t * t + c1 * t + c0;
  for (cplx a : num) acc += log_phib(t - a, ctx);
  for (cplx b : den) acc -= log_phib(t - b, ctx);
  return acc;
}

cplx QdIntegrand::operator()(cplx t, const QdContext& ctx) const { return constant * std::exp(log_value(t, ctx)); }

std::pair<cplx, cplx> QdIntegrand::asymptotic(int side, const QdContext&) const {
  if (side < 0) return {c2, c1};
  const double J = double(num.size()), K = double(den.size());
  cplx sa{}, sb{};
  for (cplx a : num) sa += a;
  for (cplx b : den) sb += b;
  return {kI * kPi * (J - K) + c2, -2.0 * kPi * kI * (sa - sb) + c1};
}

namespace {

// Direction of a decaying tail: the longest run of sampled angles inside the
// half plane where the leading asymptotic exponent has strongly negative real part.
double tail_angle(cplx A, cplx B, int side, double bias) {
  const double lo = side > 0 ? -kPi / 2 : kPi / 2;
  const double pad = kPi / 12;
  const double a0 = lo + pad, a1 = lo + kPi - pad;
  const bool quad = std::abs(A) > 1e-14;
  const double scale = quad ? std::abs(A) : std::abs(B);
  if (scale < 1e-14) throw NoDecaySector("asymptotic exponent vanishes to second order");
  const int N = 720;
  int best_len = 0, best_start = -1, run = 0, start = 0;
  for (int i = 0; i <= N; ++i) {
    const double th = a0 + (a1 - a0) * i / N;
    const cplx e = std::exp(kI * th);
    const double g = quad ? (A * e * e).real() : (B * e).real();
    if (g < -0.2 * scale) {
      if (run == 0) start = i;
      ++run;
      if (run > best_len) best_len = run, best_start = start;
    } else {
      run = 0;
    }
  }
  if (best_len < 3) {
    std::ostringstream os;
    os << "no decaying direction on the " << (side > 0 ? "right" : "left") << " (A=" << A << ", B=" << B << ")";
    throw NoDecaySector(os.str());
  }
  const double t0 = a0 + (a1 - a0) * best_start / N;
  const double t1 = a0 + (a1 - a0) * (best_start + best_len - 1) / N;
  const double mid = (t0 + t1) / 2, half = (t1 - t0) / 2;
  return mid + std::clamp(bias, -1.0, 1.0) * 0.5 * half;
}

}  // namespace

ContourPath build_contour(const QdIntegrand& f, const QdContext& ctx, const ContourOptions& opt) {
  const double inf = std::numeric_limits<double>::infinity();
  double asc = inf, desc = -inf;
  for (cplx a : f.num) asc = std::min(asc, (a + ctx.c_b).imag());
  for (cplx b : f.den) desc = std::max(desc, (b - ctx.c_b).imag());
  ContourPath p;
  const double Qi = ctx.im_cb();
  if (opt.height) {
    p.height = *opt.height;
    p.gap = (std::isfinite(asc) && std::isfinite(desc)) ? asc - desc : inf;
  } else if (std::isfinite(asc) && std::isfinite(desc)) {
    p.gap = asc - desc;
    if (p.gap < 1e-4 * Qi) {
      std::ostringstream os;
      os << "pole families pinch the contour: gap " << p.gap;
      throw PinchedContour(os.str());
    }
    p.height = (asc + desc) / 2;
  } else if (std::isfinite(asc)) {
    p.gap = inf;
    p.height = asc - 0.5 * Qi;
  } else if (std::isfinite(desc)) {
    p.gap = inf;
    p.height = desc + 0.5 * Qi;
  } else {
    p.gap = inf;
    p.height = 0;
  }
  double xmin = 0, xmax = 0;
  bool any = false;
  for (const auto* v : {&f.num, &f.den})
    for (cplx s : *v) {
      xmin = any ? std::min(xmin, s.real()) : s.real();
      xmax = any ? std::max(xmax, s.real()) : s.real();
      any = true;
    }
  p.left = cplx(xmin - opt.margin, p.height);
  p.right = cplx(xmax + opt.margin, p.height);

  auto [AR, BR] = f.asymptotic(+1, ctx);
  auto [AL, BL] = f.asymptotic(-1, ctx);
  p.right_tail.start = p.right;
  p.left_tail.start = p.left;
  p.right_tail.angle = tail_angle(AR, BR, +1, opt.tail_bias);
  p.left_tail.angle = tail_angle(AL, BL, -1, -opt.tail_bias);

  // truncation: walk out until the integrand is negligible against the segment
  const QdContext tc = tail_context(ctx);
  double lscale = -inf;
  for (int i = 0; i <= 32; ++i) {
    cplx t = p.left + (p.right - p.left) * (double(i) / 32);
    lscale = std::max(lscale, f.log_value(t, tc).real());
  }
  const double cut = lscale + std::log(1e-2 * opt.rel_tol) - 6.0;
  for (Tail* tl : {&p.left_tail, &p.right_tail}) {
    const cplx dir = std::exp(kI * tl->angle);
    double r = 0, step = 0.25;
    int below = 0;
    while (below < 4) {
      r += step;
      if (r > 4000) throw NoDecaySector("tail does not decay within radius 4000");
      double lv = f.log_value(tl->start + r * dir, tc).real();
      below = lv < cut ? below + 1 : 0;
      if (r > 8) step = 0.5 + r / 40;
    }
    tl->radius = r;
  }
  return p;
}

nlohmann::json ContourPath::to_json() const {
  return {{"left", cjson(left)},
          {"right", cjson(right)},
          {"height", height},
          {"gap", std::isfinite(gap) ? nlohmann::json(gap) : nlohmann::json(nullptr)},
          {"left_tail", {{"angle", left_tail.angle}, {"radius", left_tail.radius}}},
          {"right_tail", {{"angle", right_tail.angle}, {"radius", right_tail.radius}}}};
}

IntegralResult integrate(const QdIntegrand& f, const ContourPath& p, const QdContext& ctx, double tol,
                         bool throw_on_fail) {
  const QdContext tc = tail_context(ctx);
  IntegralResult out;
  const double L = (p.right - p.left).real();
  auto seg = [&](double s) { return f(p.left + s, tc); };
  auto mid = quad::adaptive<double>(seg, 0.0, L, tol / 4, 1e-15 * (1 + L));
  out.value = mid.value;
  out.error = mid.error;
  out.panels = mid.panels;
  out.converged = mid.converged;
  const double abs_floor = std::max(1e-300, tol / 4 * std::abs(mid.value));
  for (int side : {-1, +1}) {
    const Tail& tl = side > 0 ? p.right_tail : p.left_tail;
    const cplx dir = std::exp(kI * tl.angle);
    auto g = [&](double r) { return f(tl.start + r * dir, tc) * dir; };
    // split the ray so the Kronrod panels resolve the decay
    double a = 0;
    while (a < tl.radius) {
      const double bnd = std::min(tl.radius, a < 4 ? a + 1 : 2 * a);
      auto piece = quad::adaptive<double>(g, a, bnd, tol / 4, abs_floor);
      // left tail is traversed inward
      out.value += side > 0 ? piece.value : -piece.value;
      out.error += piece.error;
      out.panels += piece.panels;
      out.converged = out.converged && piece.converged;
      a = bnd;
    }
  }
  if (out.error > tol * (1 + std::abs(out.value))) out.converged = false;
  if (!out.converged && throw_on_fail) {
    std::ostringstream os;
    os.precision(17);
    os << "integral " << out.value << " with error " << out.error << " misses tolerance " << tol;
    throw ToleranceNotMet(os.str());
  }
  return out;
}

IntegralResult integrate(const QdIntegrand& f, const QdContext& ctx, double tol) {
  ContourOptions o;
  o.rel_tol = tol;
  return integrate(f, build_contour(f, ctx, o), ctx, tol);
}

// ---- residues --------------------------------------------------------------

cplx PoleRef::location(const QdIntegrand& f, const QdContext& ctx) const {
  if (family == Family::Ascending) return PoleZeroLattice::poles(ctx, f.num.at(index)).point(m, n);
  return PoleZeroLattice::zeros(ctx, f.den.at(index)).point(m, n);
}

cplx residue(const QdIntegrand& f, const PoleRef& p, const QdContext& ctx) {
  const cplx t0 = p.location(f, ctx);
  const double tol = 1e-9;
  const bool asc = p.family == PoleRef::Family::Ascending;
  const PoleZeroLattice own = asc ? PoleZeroLattice::poles(ctx, f.num.at(p.index))
                                  : PoleZeroLattice::zeros(ctx, f.den.at(p.index));
  if (own.order(p.m, p.n) > 1) throw HigherOrderPole("lattice point is hit twice (b^2 rational)");
  cplx acc = f.c2 * t0 * t0 + f.c1 * t0 + f.c0;
  for (std::size_t j = 0; j < f.num.size(); ++j) {
    if (asc && int(j) == p.index) continue;
    if (PoleZeroLattice::poles(ctx, f.num[j]).distance(t0) < tol) throw HigherOrderPole("two ascending poles coincide");
    if (PoleZeroLattice::zeros(ctx, f.num[j]).distance(t0) < tol) return 0.0;
    acc += log_phib(t0 - f.num[j], ctx);
  }
  for (std::size_t k = 0; k < f.den.size(); ++k) {
    if (!asc && int(k) == p.index) continue;
    if (PoleZeroLattice::zeros(ctx, f.den[k]).distance(t0) < tol) throw HigherOrderPole("two descending poles coincide");
    if (PoleZeroLattice::poles(ctx, f.den[k]).distance(t0) < tol) return 0.0;
    acc -= log_phib(t0 - f.den[k], ctx);
  }
  const cplx local = asc ? phib_pole_residue(p.m, p.n, ctx) : 1.0 / phib_zero_derivative(p.m, p.n, ctx);
  return f.constant * local * std::exp(acc);
}

cplx residue_sum(const QdIntegrand& f, const std::vector<PoleRef>& poles, const QdContext& ctx) {
  cplx s{};
  for (const auto& p : poles) s += residue(f, p, ctx);
  return 2.0 * kPi * kI * s;
}

// ---- identities ------------------------------------------------------------

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> n{"fourier1", "fourier2", "beta1", "beta2", "saalschutz", "pentagon_kernel"};
  return n;
}

cplx beta1_rhs(cplx u, cplx v, cplx w, const QdContext& c) {
  const cplx cb = c.c_b;
  return c.zeta * std::exp(-2.0 * kPi * kI * w * (v + cb) + log_phib(u - v - cb, c) + log_phib(w + cb, c) -
                           log_phib(u - v + w - cb, c));
}

cplx beta2_rhs(cplx u, cplx v, cplx w, const QdContext& c) {
  const cplx cb = c.c_b;
  return std::exp(-2.0 * kPi * kI * w * (u - cb) + log_phib(v - u - w + cb, c) - log_phib(v - u + cb, c) -
                  log_phib(-w - cb, c)) /
         c.zeta;
}

cplx saalschutz_rhs(cplx u1, cplx u2, cplx v, const QdContext& c) {
  const cplx cb = c.c_b;
  return std::pow(c.zeta, 3) *
         std::exp(kPi * kI * v * (2.0 * cb - v) + log_phib(u1, c) + log_phib(u2, c) + log_phib(u1 - v, c) +
                  log_phib(u2 - v, c) - log_phib(u1 + u2 - v - cb, c));
}

Params draw_params(const std::string& name, const QdContext& ctx, std::mt19937_64& rng) {
  auto U = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  const double Q = ctx.im_cb();
  if (name == "fourier1") return {{"w", cplx(U(-1, 1), U(0.1, 0.9) * Q)}};
  if (name == "fourier2") return {{"w", cplx(U(-1, 1), -U(0.1, 0.9) * Q)}};
  if (name == "beta1" || name == "beta2" || name == "pentagon_kernel") {
    const double s = U(0.1, 0.6) * Q;
    const double d = U(s + 0.1, std::min(s + 0.8, 1.8 * Q));
    const double split = U(0.3, 0.7);
    return {{"u", cplx(U(-0.5, 0.5), split * d)}, {"v", cplx(U(-0.5, 0.5), -(1 - split) * d)}, {"w", cplx(U(-0.5, 0.5), -s)}};
  }
  if (name == "saalschutz") {
    const double s1 = U(0.05, 0.45) * Q, s2 = U(0.05, 0.45) * Q;
    return {{"u1", cplx(U(-0.5, 0.5), s1)}, {"u2", cplx(U(-0.5, 0.5), s2)}, {"v", cplx(U(-0.5, 0.5), U(0, 0.8) * (s1 + s2))}};
  }
  throw ConfigError("unknown identity '" + name + "'");
}

IdentityReport verify_identity(const std::string& name, const Params& p, const QdContext& ctx, double tol) {
  auto get = [&](const char* k) {
    auto it = p.find(k);
    if (it == p.end()) throw ConfigError(name + " needs parameter " + k);
    return it->second;
  };
  IdentityReport r;
  r.identity = name;
  r.b = ctx.b;
  r.params = p;
  const cplx cb = ctx.c_b;
  const double itol = std::min(1e-11, tol * 1e-2);
  QdIntegrand f;
  if (name == "fourier1") {
    const cplx w = get("w");
    f.den = {cb};
    f.c1 = 2.0 * kPi * kI * (w - cb);
    r.lhs = integrate(f, ctx, itol).value;
    r.rhs = ctx.zeta * phib(w, ctx);
  } else if (name == "fourier2") {
    const cplx w = get("w");
    f.num = {-cb};
    f.c1 = -2.0 * kPi * kI * (w + cb);
    r.lhs = integrate(f, ctx, itol).value;
    r.rhs = 1.0 / (ctx.zeta * phib(w, ctx));
  } else if (name == "beta1" || name == "beta2") {
    const cplx u = get("u"), v = get("v"), w = get("w");
    f.num = {-u};
    f.den = {-v};
    f.c1 = 2.0 * kPi * kI * w;
    r.lhs = integrate(f, ctx, itol).value;
    r.rhs = name == "beta1" ? beta1_rhs(u, v, w, ctx) : beta2_rhs(u, v, w, ctx);
  } else if (name == "pentagon_kernel") {
    const cplx u = get("u"), v = get("v"), w = get("w");
    r.lhs = beta1_rhs(u, v, w, ctx);
    r.rhs = beta2_rhs(u, v, w, ctx);
  } else if (name == "saalschutz") {
    const cplx u1 = get("u1"), u2 = get("u2"), v = get("v");
    f.num = {-u1, -u2};
    f.den = {cb - v, cb};
    f.c1 = -4.0 * kPi * kI * cb;
    r.lhs = integrate(f, ctx, itol).value;
    r.rhs = saalschutz_rhs(u1, u2, v, ctx);
  } else {
    throw ConfigError("unknown identity '" + name + "'");
  }
  r.abs_err = std::abs(r.lhs - r.rhs);
  r.rel_err = r.abs_err / std::max(std::abs(r.rhs), 1e-300);
  r.pass = r.rel_err <= tol;
  return r;
}

nlohmann::json IdentityReport::to_json() const {
  nlohmann::json ps = nlohmann::json::object();
  for (const auto& [k, v] : params) ps[k] = cjson(v);
  return {{"identity", identity}, {"b", b},         {"params", ps},     {"lhs", cjson(lhs)},
          {"rhs", cjson(rhs)},    {"abs_err", abs_err}, {"rel_err", rel_err}, {"pass", pass}};
}

nlohmann::json SuiteEntry::to_json() const {
  return {{"check", name}, {"draws", draws}, {"passed", passed}, {"max_rel_err", max_rel_err}, {"pass", pass}};
}

std::vector<SuiteEntry> appendix_suite(int draws, std::uint64_t seed, double tol, double bmin, double bmax) {
  std::vector<SuiteEntry> out;
  auto run = [&](const std::string& name, std::uint64_t salt, auto&& one) {
    SuiteEntry e;
    e.name = name;
    std::mt19937_64 rng(seed * 1000003ULL + salt);
    for (int i = 0; i < draws; ++i) {
      const double b = std::uniform_real_distribution<double>(bmin, bmax)(rng);
      const QdContext ctx = QdContext::make(b);
      double err;
      try {
        err = one(ctx, rng);
      } catch (const Error&) {
        err = std::numeric_limits<double>::infinity();
      }
      if (!(err <= tol)) err = std::isnan(err) ? std::numeric_limits<double>::infinity() : err;
      e.max_rel_err = std::max(e.max_rel_err, err);
      e.passed += err <= tol;
      ++e.draws;
    }
    e.pass = e.passed == e.draws;
    out.push_back(e);
  };
  auto U = [](std::mt19937_64& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); };
  auto rel = [](cplx a, cplx b) { return std::abs(a - b) / std::abs(b); };

  run("unitarity", 1, [&](const QdContext& c, std::mt19937_64& g) {
    cplx z(U(g, -3, 3), U(g, -0.9, 0.9) * c.im_cb());
    return rel(std::conj(phib(z, c)) * phib(std::conj(z), c), 1.0);
  });
  run("inversion", 2, [&](const QdContext& c, std::mt19937_64& g) {
    cplx z(U(g, -3, 3), U(g, -0.9, 0.9) * c.im_cb());
    return rel(phib(z, c) * phib(-z, c), c.zeta_inv * std::exp(kI * kPi * z * z));
  });
  run("functional_b", 3, [&](const QdContext& c, std::mt19937_64& g) {
    cplx z(U(g, -3, 3), U(g, -0.3, 0.3));
    const double s = c.b;
    return rel(phib(z - kI * s / 2.0, c), (1.0 + std::exp(2 * kPi * s * z)) * phib(z + kI * s / 2.0, c));
  });
  run("functional_binv", 4, [&](const QdContext& c, std::mt19937_64& g) {
    cplx z(U(g, -3, 3), U(g, -0.3, 0.3));
    const double s = 1 / c.b;
    return rel(phib(z - kI * s / 2.0, c), (1.0 + std::exp(2 * kPi * s * z)) * phib(z + kI * s / 2.0, c));
  });
  run("b_duality", 5, [&](const QdContext& c, std::mt19937_64& g) {
    cplx z(U(g, -3, 3), U(g, -0.9, 0.9) * c.im_cb());
    return rel(phib(z, c.dual()), phib(z, c));
  });
  run("barnes", 6, [&](const QdContext& c, std::mt19937_64& g) {
    const double W = c.b + 1 / c.b;
    cplx z(U(g, 0.1, 0.9) * W, U(g, -0.5, 0.5));
    return rel(double_sine_b(z, c), double_sine(z, c.b, 1 / c.b));
  });
  std::uint64_t salt = 10;
  for (const auto& name : identity_names()) {
    run(name, salt++, [&](const QdContext& c, std::mt19937_64& g) {
      return verify_identity(name, draw_params(name, c, g), c, tol).rel_err;
    });
  }
  return out;
}

}  // namespace rtoda
