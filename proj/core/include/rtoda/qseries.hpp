#pragma once

#include <complex>
#include <vector>

#include "rtoda/errors.hpp"
#include "rtoda/poly.hpp"
#include "rtoda/qdilog.hpp"

namespace rtoda {

using QRational = RatFunc;

// Indeterminate slots used by the exact q-series routines.
namespace qvar {
inline constexpr int Q = 0;
inline constexpr int X1 = 1;
inline constexpr int X2 = 2;
inline constexpr int T = 3;
inline constexpr int M = 4;
inline constexpr int L = 5;
}  // namespace qvar

const std::vector<std::string>& qvar_names();

struct GeneralizedPartition2 {
  int n1 = 0, n2 = 0;
  GeneralizedPartition2() = default;
  GeneralizedPartition2(int a, int b);
  int width() const { return n2 - n1; }
};

struct SpecialPoint {
  int r = 0, s = 0;
  int sign = +1;
  cplx value(const QdContext& ctx) const;
};

// c^{+-}_{r,s}
cplx special_point(int sign, int r, int s, const QdContext& ctx);

// ---- exact -----------------------------------------------------------------

QRational qpoch(const QRational& X, const QRational& q, int n);
// Polynomial in slot Q with nonnegative coefficients.
Poly qbinom(int n, int k);
QRational qbinom(int n, int k, const QRational& q);

// Polynomial in X1, X2 with coefficients in q.
QRational whittaker_poly(const GeneralizedPartition2& n, const QRational& q);
QRational macdonald_poly(const GeneralizedPartition2& n, const QRational& t, const QRational& q);

// (X;q^2)_r / (q^{-2r};q^2)_r with X in slot X2 and q in slot Q.
QRational hc_whittaker_coeff(int r);
// (t^-2 M;q^-2)_r (t^2;q^2)_r / ((q^-2 M;q^-2)_r (q^2;q^2)_r), slots M, T, Q.
QRational hc_macdonald_coeff(int r);

// ---- floating point ---------------------------------------------------------

template <class T>
T qpoch(T X, T q, int n) {
  T r(1), qk(1);
  for (int k = 0; k < n; ++k) {
    r *= T(1) - qk * X;
    qk *= q;
  }
  return r;
}

cplx qpoch_inf(cplx X, cplx q, double tol = 1e-15);
cplx qbinom(int n, int k, cplx q);
cplx whittaker_poly(const GeneralizedPartition2& n, cplx z1, cplx z2, cplx q);
cplx macdonald_poly(const GeneralizedPartition2& n, cplx x1, cplx x2, cplx t, cplx q);

struct SeriesResult {
  cplx value{};
  double tail = 0;  // estimate of the neglected remainder
  int terms = 0;    // number of summed terms (nonzero or not)
  bool terminated = false;
  bool converged = true;
};

SeriesResult two_psi_one(cplx a, cplx b, cplx c, cplx z, cplx q, int N);

// Prefactor Lambda_1^{i x1'/b} Lambda_2^{i x2'/b} = exp(2 pi i (lam1 x1' + lam2 x2'))
// times sum_{r<=R} Lambda_12^r (X'_21;q^2)_r/(q^{-2r};q^2)_r.
SeriesResult hc_whittaker_series(cplx lam1, cplx lam2, cplx x1p, cplx x2p, const QdContext& ctx, int R);
// Same series with given Lambda_12 and X'_21 and no prefactor.
SeriesResult hc_whittaker_sum(cplx Lambda12, cplx X21, cplx q, int R);

SeriesResult hc_macdonald_series(cplx Lambda, cplx M, cplx q, cplx t, int R);

}  // namespace rtoda
