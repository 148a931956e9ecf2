#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "rtoda/errors.hpp"

namespace rtoda {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr cplx kI{0.0, 1.0};

enum class Precision { Double, Extended };

namespace detail {
struct PhiTables;
}

// Parameter bundle shared by every evaluation.  Immutable once built; the
// quadrature tables it carries are read-only and safe to share across threads.
struct QdContext {
  double b = 0.0;
  cplx q, qtilde, c_b, zeta, zeta_s, zeta_inv;
  cplx tau;
  cplx t;
  double rel_tol = 1e-12;
  Precision precision = Precision::Double;
  int max_shifts = 64;
  std::shared_ptr<const detail::PhiTables> tables;

  // Accepts any b > 0 except b = 1; b and 1/b give the same function.
  static QdContext make(double b, cplx tau = 0.0, double rel_tol = 1e-12,
                        Precision precision = Precision::Double);

  QdContext with_tau(cplx new_tau) const;
  QdContext with_precision(Precision p) const;
  QdContext dual() const { return make(1.0 / b, tau, rel_tol, precision); }

  double im_cb() const { return c_b.imag(); }
  double pole_guard() const { return 1e-8 * c_b.imag(); }
  // Coarse flag: b^2 close to a ratio of small integers makes lattice
  // points collide.
  bool b2_nearly_rational() const;
};

struct PoleZeroLattice {
  enum class Kind { Pole, Zero };
  Kind kind;
  cplx apex;
  double step1, step2;  // imaginary step sizes b and 1/b

  static PoleZeroLattice poles(const QdContext& ctx, cplx shift = 0.0);
  static PoleZeroLattice zeros(const QdContext& ctx, cplx shift = 0.0);

  cplx point(int m, int n) const;
  // Number of (m,n) with m,n >= 0 landing on the same point as (m,n).
  int order(int m, int n, double tol = 1e-12) const;
  // Distance from z to the lattice, restricted to m+n <= max_order.
  double distance(cplx z, int max_order = 400) const;
  std::vector<cplx> points(int max_order) const;
};

cplx phib(cplx z, const QdContext& ctx);
cplx log_phib(cplx z, const QdContext& ctx);

// Barnes double sine by its defining integral; valid for
// 0 < Re z < Re(omega1 + omega2).
cplx double_sine(cplx z, double omega1, double omega2, double tol = 1e-13);
// Specialised to (b, 1/b) through the quantum dilogarithm, valid everywhere
// off the pole lattice.
cplx double_sine_b(cplx z, const QdContext& ctx);

struct PsiQResult {
  cplx value;
  double tail_bound;
  int factors;
};

PsiQResult psi_q_compact_ex(cplx X, cplx q, double tol = 1e-14);
cplx psi_q_compact(cplx X, cplx q, double tol = 1e-14);

// Residue of phi at the pole c_b + i(b m + n/b) and derivative of phi at the
// zero -(c_b + i(b m + n/b)), from the local law near +-c_b and the
// functional equations.
cplx phib_pole_residue(int m, int n, const QdContext& ctx);
cplx phib_zero_derivative(int m, int n, const QdContext& ctx);

}  // namespace rtoda
