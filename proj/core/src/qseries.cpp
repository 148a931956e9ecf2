#include "rtoda/qseries.hpp"

#include <cmath>
#include <limits>

namespace rtoda {

const std::vector<std::string>& qvar_names() {
  static const std::vector<std::string> names{"q", "x1", "x2", "t", "M", "L"};
  return names;
}

GeneralizedPartition2::GeneralizedPartition2(int a, int b) : n1(a), n2(b) {
  if (a > b) throw IndexError("generalized partition needs n1 <= n2");
}

cplx special_point(int sign, int r, int s, const QdContext& ctx) {
  return double(sign) * ctx.c_b / 2.0 - kI * (double(r) * ctx.b + double(s) / ctx.b);
}

cplx SpecialPoint::value(const QdContext& ctx) const { return special_point(sign, r, s, ctx); }

QRational qpoch(const QRational& X, const QRational& q, int n) {
  if (n < 0) throw IndexError("qpoch needs n >= 0");
  QRational r(1), qk(1);
  for (int k = 0; k < n; ++k) {
    r *= QRational(1) - qk * X;
    qk *= q;
  }
  return r;
}

Poly qbinom(int n, int k) {
  if (k < 0 || k > n) throw IndexError("qbinom needs 0 <= k <= n");
  // Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<Poly> row{Poly(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Poly> next(m + 1);
    next[0] = Poly(1);
    next[m] = Poly(1);
    for (int j = 1; j < m; ++j) next[j] = row[j - 1] + Poly::var(qvar::Q, j) * row[j];
    row = std::move(next);
  }
  return row[k];
}

QRational qbinom(int n, int k, const QRational& q) { return QRational(qbinom(n, k)).subs(qvar::Q, q); }

QRational whittaker_poly(const GeneralizedPartition2& n, const QRational& q) {
  const int w = n.width();
  QRational acc;
  for (int k = 0; k <= w; ++k) {
    Exps e{};
    e[qvar::X1] = n.n1 + k;
    e[qvar::X2] = n.n2 - k;
    acc += qbinom(w, k, q) * QRational(Poly::monomial(e));
  }
  return acc;
}

QRational macdonald_poly(const GeneralizedPartition2& n, const QRational& t, const QRational& q) {
  const int w = n.width();
  const QRational qi = QRational(1) / q;
  QRational acc;
  for (int r = 0; r <= w; ++r) {
    QRational den = qpoch(q.pow(w - 1) * t, qi, r) * qpoch(q, q, r);
    if (den.is_zero()) throw DegenerateParameter("Macdonald coefficient denominator vanishes at r=" + std::to_string(r));
    QRational c = qpoch(q.pow(w), qi, r) * qpoch(t, q, r) / den;
    Exps e{};
    e[qvar::X1] = n.n1 + r;
    e[qvar::X2] = n.n2 - r;
    acc += c * QRational(Poly::monomial(e));
  }
  return acc;
}

QRational hc_whittaker_coeff(int r) {
  const QRational q(Poly::var(qvar::Q));
  const QRational q2 = q.pow(2);
  return qpoch(QRational(Poly::var(qvar::X2)), q2, r) / qpoch(q.pow(-2 * r), q2, r);
}

QRational hc_macdonald_coeff(int r) {
  const QRational q(Poly::var(qvar::Q)), t(Poly::var(qvar::T)), M(Poly::var(qvar::M));
  const QRational q2 = q.pow(2), qm2 = q.pow(-2), t2 = t.pow(2);
  return qpoch(M / t2, qm2, r) * qpoch(t2, q2, r) / (qpoch(qm2 * M, qm2, r) * qpoch(q2, q2, r));
}

// ---------------------------------------------------------------------------

cplx qpoch_inf(cplx X, cplx q, double tol) {
  if (std::abs(q) >= 1.0) throw NonConvergent("(X;q)_inf needs |q| < 1");
  cplx r(1), qk(1);
  for (int k = 0; k < 1000000; ++k) {
    cplx term = qk * X;
    r *= 1.0 - term;
    if (std::abs(term) < tol * 1e-2) return r;
    qk *= q;
  }
  throw NonConvergent("(X;q)_inf did not converge");
}

cplx qbinom(int n, int k, cplx q) {
  if (k < 0 || k > n) throw IndexError("qbinom needs 0 <= k <= n");
  std::array<cplx, kMaxVars> x{};
  x[qvar::Q] = q;
  return qbinom(n, k).eval(x);
}

cplx whittaker_poly(const GeneralizedPartition2& n, cplx z1, cplx z2, cplx q) {
  const int w = n.width();
  cplx acc{};
  for (int k = 0; k <= w; ++k) acc += qbinom(w, k, q) * ipow(z1, n.n1 + k) * ipow(z2, n.n2 - k);
  return acc;
}

cplx macdonald_poly(const GeneralizedPartition2& n, cplx x1, cplx x2, cplx t, cplx q) {
  const int w = n.width();
  const cplx qi = 1.0 / q;
  cplx acc{};
  for (int r = 0; r <= w; ++r) {
    cplx den = qpoch(ipow(q, w - 1) * t, qi, r) * qpoch(q, q, r);
    if (std::abs(den) < 1e-13) throw DegenerateParameter("Macdonald coefficient denominator vanishes at r=" + std::to_string(r));
    cplx c = qpoch(ipow(q, w), qi, r) * qpoch(t, q, r) / den;
    acc += c * ipow(x1, n.n1 + r) * ipow(x2, n.n2 - r);
  }
  return acc;
}

namespace {

// Sum sum_{r<=R} c_r z^r with c_{r+1} = c_r * ratio(r); tail from the last ratio.
template <class Ratio>
SeriesResult ratio_series(cplx z, int R, Ratio ratio, double limit_ratio) {
  SeriesResult s;
  cplx term(1);
  s.value = term;
  s.terms = 1;
  for (int r = 0; r < R; ++r) {
    cplx f = ratio(r);
    if (f == 0.0) {
      s.terminated = true;
      return s;
    }
    term *= f * z;
    s.value += term;
    ++s.terms;
  }
  // the next ratio probes whether the remainder vanishes identically
  cplx nxt = ratio(R) * z;
  if (nxt == 0.0) {
    s.terminated = true;
    return s;
  }
  double rho = std::max(std::abs(nxt), limit_ratio);
  if (rho < 1.0) {
    s.tail = std::abs(term) * rho / (1.0 - rho);
  } else {
    s.tail = std::numeric_limits<double>::infinity();
    s.converged = false;
  }
  return s;
}

cplx safe_div(cplx a, cplx b, const char* what) {
  if (std::abs(b) < 1e-13) throw DegenerateParameter(what);
  return a / b;
}

}  // namespace

SeriesResult two_psi_one(cplx a, cplx b, cplx c, cplx z, cplx q, int N) {
  if (N < 0) throw IndexError("two_psi_one needs N >= 0");
  // limit of |term ratio|: |z| for |q|<1, |a b z/(c q)| for |q|>1; no limit on |q|=1
  double lim;
  double aq = std::abs(q);
  if (aq < 1.0 - 1e-14) lim = std::abs(z);
  else if (aq > 1.0 + 1e-14) lim = std::abs(a * b * z / (c * q));
  else lim = std::numeric_limits<double>::infinity();
  auto ratio = [&](int n) {
    cplx qn = std::pow(q, n);
    cplx f1 = 1.0 - a * qn, f2 = 1.0 - b * qn;
    if (std::abs(f1) < 1e-14 || std::abs(f2) < 1e-14) return cplx(0);
    cplx num = f1 * f2;
    cplx den = (1.0 - c * qn) * (1.0 - qn * q);
    return safe_div(num, den, "two_psi_one denominator vanishes");
  };
  SeriesResult s = ratio_series(z, N, ratio, 0.0);
  if (!s.terminated && lim >= 1.0) {
    s.converged = false;
    s.tail = std::numeric_limits<double>::infinity();
  }
  return s;
}

SeriesResult hc_whittaker_sum(cplx Lambda12, cplx X21, cplx q, int R) {
  if (R < 0) throw IndexError("truncation order must be >= 0");
  const cplx q2 = q * q;
  auto ratio = [&](int r) {
    cplx num = 1.0 - X21 * std::pow(q2, r);
    if (std::abs(num) < 1e-14 * (1.0 + std::abs(X21))) return cplx(0);
    return safe_div(num, 1.0 - std::pow(q2, -(r + 1)), "(q^-2;q^-2)_r vanishes");
  };
  return ratio_series(Lambda12, R, ratio, 0.0);
}

SeriesResult hc_whittaker_series(cplx lam1, cplx lam2, cplx x1p, cplx x2p, const QdContext& ctx, int R) {
  const double b = ctx.b;
  cplx L12 = std::exp(2.0 * kPi * b * (lam1 - lam2));
  cplx X21 = std::exp(2.0 * kPi * b * (x2p - x1p));
  SeriesResult s = hc_whittaker_sum(L12, X21, ctx.q, R);
  cplx pre = std::exp(2.0 * kPi * kI * (lam1 * x1p + lam2 * x2p));
  s.value *= pre;
  s.tail *= std::abs(pre);
  return s;
}

SeriesResult hc_macdonald_series(cplx Lambda, cplx M, cplx q, cplx t, int R) {
  if (R < 0) throw IndexError("truncation order must be >= 0");
  const cplx q2 = q * q, t2 = t * t;
  auto ratio = [&](int r) {
    cplx q2r = std::pow(q2, r);
    cplx f1 = 1.0 - M / t2 / q2r, f2 = 1.0 - t2 * q2r;
    if (std::abs(f1) < 1e-14 || std::abs(f2) < 1e-14) return cplx(0);
    cplx num = f1 * f2;
    cplx den = (1.0 - M / q2 / q2r) * (1.0 - q2r * q2);
    if (std::abs(den) < 1e-13) throw DegenerateParameter("Harish-Chandra Macdonald denominator vanishes");
    return num / den;
  };
  return ratio_series(Lambda, R, ratio, 0.0);
}

}  // namespace rtoda
