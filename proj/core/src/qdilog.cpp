#include "rtoda/qdilog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qdilog_impl.hpp"
#include "rtoda/quadrature.hpp"

namespace rtoda {

namespace detail {

template <>
double pi_v<double>() {
  return kPi;
}
template <>
real_ext pi_v<real_ext>() {
  return boost::multiprecision::float128(
      "3.14159265358979323846264338327950288419716939937510");
}

namespace {

template <class R>
Table<R> build_table(double b_in, double eps) {
  using C = std::complex<R>;
  Table<R> T;
  const R pi = pi_v<R>();
  const R b = R(b_in);
  const R beta = b < R(1) ? b : R(1) / b;
  T.b = b;
  T.delta = pi * beta / 2;
  const R dprime = R(0.75) * T.delta;
  using std::log;
  const R lnM = R(std::log(1e3 / eps));
  T.h = 2 * pi * dprime / lnM;
  T.stop = R(eps) * R(1e-3);
  const R slowest = R(0.2) * (b + R(1) / b);
  T.K = static_cast<int>(std::ceil(static_cast<double>(lnM / (slowest * T.h)))) + 4;
  T.W.resize(2 * T.K + 1);
  for (int k = -T.K; k <= T.K; ++k) {
    C w(R(k) * T.h, T.delta);
    C den = R(4) * w * std::sinh(b * w) * std::sinh(w / b);
    T.W[k + T.K] = C(T.h) / den;
  }
  return T;
}

template <class R>
std::complex<R> clog1p(std::complex<R> v) {
  using std::abs;
  if (abs(v) < R(1e-4)) {
    std::complex<R> s{}, p = v;
    for (int n = 1; n <= 12; ++n) {
      s += (n % 2 ? R(1) : R(-1)) * p / R(n);
      p *= v;
    }
    return s;
  }
  return std::log(std::complex<R>(1) + v);
}

// log(1 + e^u) without overflow.
template <class R>
std::complex<R> log1pexp(std::complex<R> u) {
  if (u.real() > R(0)) return u + clog1p(std::exp(-u));
  return clog1p(std::exp(u));
}

template <class R>
std::complex<R> strip_log_phi(std::complex<R> z, const Table<R>& T) {
  using C = std::complex<R>;
  using std::abs;
  using std::exp;
  const C I(0, 1);
  const bool up = z.real() <= R(0);
  const R sgn = up ? R(1) : R(-1);
  // e^{-2 i z w} with w = k h + i sgn delta
  const C base = exp(R(2) * sgn * z * T.delta);
  const C rho = exp(-R(2) * I * z * T.h);
  const C rho_inv = R(1) / rho;
  auto weight = [&](int k) { return up ? T.W[k + T.K] : std::conj(T.W[k + T.K]); };

  C acc = weight(0) * base;
  for (int dir = -1; dir <= 1; dir += 2) {
    C e = base;
    const C step = dir > 0 ? rho : rho_inv;
    for (int j = 1; j <= T.K; ++j) {
      const int k = dir * j;
      if (j % 32 == 0)
        e = exp(R(2) * sgn * z * T.delta - R(2) * I * z * (T.h * R(k)));
      else
        e *= step;
      const C term = weight(k) * e;
      acc += term;
      if (abs(term) < T.stop && j > 4) break;
    }
  }
  if (!up) {
    const R pi = pi_v<R>();
    const R b = T.b;
    acc += I * pi * (b * b + R(1) / (b * b)) / R(12) + I * pi * z * z;
  }
  return acc;
}

void check_pole(cplx z, const QdContext& ctx) {
  auto lat = PoleZeroLattice::poles(ctx);
  if (lat.distance(z) < ctx.pole_guard()) {
    std::ostringstream os;
    os << "phi_b has a pole at z = " << z;
    throw PoleHit(os.str());
  }
}

}  // namespace

template <>
const Table<double>& table<double>(const QdContext& ctx) {
  return ctx.tables->d;
}
template <>
const Table<real_ext>& table<real_ext>(const QdContext& ctx) {
  if (!ctx.tables->has_ext) throw ConfigError("context was built without extended precision");
  return ctx.tables->e;
}

template <class R>
std::complex<R> log_phib_t(std::complex<R> z, const QdContext& ctx) {
  using C = std::complex<R>;
  check_pole(cplx(static_cast<double>(z.real()), static_cast<double>(z.imag())), ctx);
  const Table<R>& T = table<R>(ctx);
  const R pi = pi_v<R>();
  const C I(0, 1);
  const R b = T.b;
  const R small = b < R(1) ? b : R(1) / b;
  const R big = R(1) / small;
  const R S = R(0.8) * (b + R(1) / b) / R(2);
  C acc{};
  int shifts = 0;
  while (z.imag() > S) {
    const R s = (z.imag() - big >= -S) ? big : small;
    acc -= log1pexp(R(2) * pi * s * (z - I * s / R(2)));
    z -= I * s;
    ++shifts;
  }
  while (z.imag() < -S) {
    const R s = (z.imag() + big <= S) ? big : small;
    acc += log1pexp(R(2) * pi * s * (z + I * s / R(2)));
    z += I * s;
    ++shifts;
  }
  if (shifts > ctx.max_shifts) {
    std::ostringstream os;
    os << "functional-equation chain of length " << shifts << " exceeds max_shifts="
       << ctx.max_shifts << "; estimated error " << shifts * 1e-16;
    throw AccuracyLoss(os.str());
  }
  return acc + strip_log_phi<R>(z, T);
}

template std::complex<double> log_phib_t<double>(std::complex<double>, const QdContext&);
template cplx_ext log_phib_t<real_ext>(cplx_ext, const QdContext&);

}  // namespace detail

// ---------------------------------------------------------------------------

QdContext QdContext::make(double b, cplx tau, double rel_tol, Precision precision) {
  if (!(b > 0.0) || !std::isfinite(b)) throw ConfigError("b must be a positive real number");
  if (std::abs(b - 1.0) < 1e-9) throw ConfigError("b = 1 gives double poles and is not supported");
  if (!(rel_tol >= 1e-15)) throw ConfigError("rel_tol must be >= 1e-15");
  QdContext c;
  c.b = b;
  c.tau = tau;
  c.rel_tol = rel_tol;
  c.precision = precision;
  const double b2 = b * b;
  c.q = std::exp(kI * kPi * b2);
  c.qtilde = std::exp(kI * kPi / b2);
  c.c_b = kI * (b + 1.0 / b) / 2.0;
  c.zeta = std::exp(kI * kPi * (1.0 - 4.0 * c.c_b * c.c_b) / 12.0);
  c.zeta_s = std::exp(kI * kPi * (1.0 - c.c_b * c.c_b) / 6.0);
  c.zeta_inv = std::pow(c.zeta, -2) * std::exp(-kI * kPi * c.c_b * c.c_b);
  c.t = std::exp(kPi * b * (2.0 * tau + c.c_b));
  auto tabs = std::make_shared<detail::PhiTables>();
  tabs->d = detail::build_table<double>(b, 1e-17);
  if (precision == Precision::Extended) {
    tabs->has_ext = true;
    tabs->e = detail::build_table<real_ext>(b, 1e-33);
  }
  c.tables = std::move(tabs);
  return c;
}

QdContext QdContext::with_tau(cplx new_tau) const {
  QdContext c = *this;
  c.tau = new_tau;
  c.t = std::exp(kPi * b * (2.0 * new_tau + c_b));
  return c;
}

QdContext QdContext::with_precision(Precision p) const {
  if (p == precision) return *this;
  if (p == Precision::Double) {
    QdContext c = *this;
    c.precision = p;
    return c;
  }
  return make(b, tau, rel_tol, p);
}

bool QdContext::b2_nearly_rational() const {
  const double x = b * b;
  for (int den = 1; den <= 12; ++den) {
    const double num = std::round(x * den);
    if (std::abs(x * den - num) < 1e-9 * den) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

PoleZeroLattice PoleZeroLattice::poles(const QdContext& ctx, cplx shift) {
  return {Kind::Pole, ctx.c_b + shift, ctx.b, 1.0 / ctx.b};
}

PoleZeroLattice PoleZeroLattice::zeros(const QdContext& ctx, cplx shift) {
  return {Kind::Zero, -ctx.c_b + shift, ctx.b, 1.0 / ctx.b};
}

cplx PoleZeroLattice::point(int m, int n) const {
  const double s = kind == Kind::Pole ? 1.0 : -1.0;
  return apex + s * kI * (step1 * m + step2 * n);
}

int PoleZeroLattice::order(int m, int n, double tol) const {
  const double target = step1 * m + step2 * n;
  int count = 0;
  for (int nn = 0; step2 * nn <= target + tol; ++nn) {
    const double rest = target - step2 * nn;
    const double mm = std::round(rest / step1);
    if (mm >= 0 && std::abs(rest - mm * step1) <= tol) ++count;
  }
  return count;
}

double PoleZeroLattice::distance(cplx z, int max_order) const {
  const double s = kind == Kind::Pole ? 1.0 : -1.0;
  const double dx = z.real() - apex.real();
  const double y = s * (z.imag() - apex.imag());  // height along the ray
  double best = std::hypot(dx, y);               // apex itself
  for (int n = 0; n <= max_order && step2 * n <= y + step1; ++n) {
    const double rest = y - step2 * n;
    double m = std::round(rest / step1);
    if (m < 0) m = 0;
    if (m + n > max_order) continue;
    best = std::min(best, std::hypot(dx, rest - m * step1));
  }
  return best;
}

std::vector<cplx> PoleZeroLattice::points(int max_order) const {
  std::vector<cplx> out;
  for (int m = 0; m <= max_order; ++m)
    for (int n = 0; m + n <= max_order; ++n) out.push_back(point(m, n));
  return out;
}

// ---------------------------------------------------------------------------

cplx log_phib(cplx z, const QdContext& ctx) {
  if (ctx.precision == Precision::Extended) {
    cplx_ext r = detail::log_phib_t<real_ext>(cplx_ext(z.real(), z.imag()), ctx);
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
  }
  return detail::log_phib_t<double>(z, ctx);
}

cplx phib(cplx z, const QdContext& ctx) { return std::exp(log_phib(z, ctx)); }

cplx double_sine_b(cplx z, const QdContext& ctx) {
  // The defining integral gives S2 = 1 at the midpoint, where the dilogarithm
  // side equals phi(0) = exp(pi i (b^2 + b^-2) / 24); divide that constant out.
  const cplx w = kI * z - ctx.c_b;
  const double b2 = ctx.b * ctx.b;
  return std::exp(log_phib(w, ctx) - kI * kPi / 2.0 * w * w - kI * kPi * (b2 + 1.0 / b2) / 24.0);
}

cplx double_sine(cplx z, double w1, double w2, double tol) {
  if (!(w1 > 0 && w2 > 0)) throw DomainError("double_sine needs positive periods");
  const double W = w1 + w2;
  if (!(z.real() > 0 && z.real() < W))
    throw DomainError("double_sine integral representation needs 0 < Re z < w1 + w2");
  const cplx a = 2.0 * z - W;
  // Integrand of log S2 on (0, inf).
  auto g = [&](double t) -> cplx {
    if (t < 1e-3) {
      // a t (a^2 - w1^2 - w2^2) / (6 w1 w2) / (2t) + O(t^2)
      const cplx lead = a * (a * a - w1 * w1 - w2 * w2) / (12.0 * w1 * w2);
      const double u2 = w1 * w1, v2 = w2 * w2;
      const cplx A2 = a * a;
      const cplx c = A2 * A2 / 120.0 - A2 * (u2 + v2) / 36.0 + (u2 * u2 + u2 * v2 + v2 * v2) / 36.0 -
                     (u2 * u2 + v2 * v2) / 120.0;
      const cplx c3 = a * c / (2.0 * w1 * w2);
      return lead + c3 * t * t;
    }
    return (std::sinh(a * t) / (std::sinh(w1 * t) * std::sinh(w2 * t)) - a / (w1 * w2 * t)) / (2.0 * t);
  };
  const double rate = W - std::abs(a.real());
  const double T = std::max(40.0 / rate, 5.0);
  auto res = quad::adaptive<double>(g, 0.0, T, tol, 1e-16, 20000);
  // Tail of the algebraic subtraction term beyond T.
  cplx val = res.value - a / (2.0 * w1 * w2 * T);
  return std::exp(val);
}

// ---------------------------------------------------------------------------

PsiQResult psi_q_compact_ex(cplx X, cplx q, double tol) {
  const double aq = std::abs(q);
  if (!(aq < 1.0)) throw NonConvergent("psi_q_compact needs |q| < 1");
  PsiQResult r{1.0, 0.0, 0};
  cplx logp = 0.0;
  cplx qq = q;  // q^{2n+1}
  const cplx q2 = q * q;
  const double ax = std::abs(X);
  for (int n = 0; n < 1000000; ++n) {
    const cplx f = 1.0 + X * qq;
    if (std::abs(f) < 1e-14) throw PoleHit("psi_q_compact: X = -q^{-(2n+1)}");
    logp -= std::log(f);
    qq *= q2;
    r.factors = n + 1;
    const double head = ax * std::abs(qq);
    if (head < 0.5) {
      const double bound = head / ((1.0 - aq * aq) * (1.0 - head));
      if (bound < tol) {
        r.tail_bound = bound;
        break;
      }
    }
  }
  r.value = std::exp(logp);
  return r;
}

cplx psi_q_compact(cplx X, cplx q, double tol) { return psi_q_compact_ex(X, q, tol).value; }

// ---------------------------------------------------------------------------

cplx phib_pole_residue(int m, int n, const QdContext& ctx) {
  const double b = ctx.b;
  cplx r = 1.0 / (ctx.zeta * 2.0 * kPi * kI);
  for (int j = 0; j < m; ++j) r /= 1.0 + ctx.q * std::exp(2.0 * kPi * b * (ctx.c_b + kI * b * double(j)));
  for (int k = 0; k < n; ++k)
    r /= 1.0 + ctx.qtilde * std::exp(2.0 * kPi / b * (ctx.c_b + kI * b * double(m) + kI * double(k) / b));
  return r;
}

cplx phib_zero_derivative(int m, int n, const QdContext& ctx) {
  const double b = ctx.b;
  cplx d = -2.0 * kPi * kI / ctx.zeta;
  for (int j = 0; j < m; ++j)
    d *= 1.0 + std::exp(2.0 * kPi * b * (-ctx.c_b - kI * b * double(j))) / ctx.q;
  for (int k = 0; k < n; ++k)
    d *= 1.0 + std::exp(2.0 * kPi / b * (-ctx.c_b - kI * b * double(m) - kI * double(k) / b)) / ctx.qtilde;
  return d;
}

}  // namespace rtoda
