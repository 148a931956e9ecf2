#pragma once

#include <array>
#include <functional>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "rtoda/contour.hpp"
#include "rtoda/qseries.hpp"

namespace rtoda {

struct SpectralPoint {
  cplx lambda1{}, lambda2{};
  cplx underline() const { return lambda1 + lambda2; }
  cplx half() const { return (lambda1 - lambda2) / 2.0; }
  SpectralPoint swapped() const { return {lambda2, lambda1}; }
  // v* = (-v2, -v1)
  SpectralPoint star() const { return {-lambda2, -lambda1}; }
  SpectralPoint operator-() const { return {-lambda1, -lambda2}; }
};

struct PositionPoint {
  cplx x1{}, x2{};
  cplx underline() const { return x1 + x2; }
  PositionPoint star() const { return {-x2, -x1}; }
};

struct WaveValue {
  cplx value{};
  double error = 0;
  int residues = 0;        // poles picked up when the contour had to be deformed
  bool converged = true;
  nlohmann::json to_json() const;
};

// Integral of f along the separating contour.  When the pole families come
// closer than 1e-2 Im c_b (or interleave) the integral is taken along a
// straight contour plus the residues of the poles left on the wrong side.
WaveValue integrate_separated(const QdIntegrand& f, const QdContext& ctx, double tol);

// ---- Whittaker functions ----------------------------------------------------

WaveValue whittaker_gg_ex(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx, double tol = 1e-12);
WaveValue whittaker_mb_ex(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx, double tol = 1e-12);
WaveValue whittaker_tilde_ex(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx, double tol = 1e-12);
cplx whittaker_gg(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx, double tol = 1e-12);
cplx whittaker_mb(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx, double tol = 1e-12);
cplx whittaker_tilde(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx, double tol = 1e-12);

// integrands without prefactors, exposed for residue checks
QdIntegrand whittaker_tilde_integrand(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx);
cplx whittaker_tilde_prefactor(const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx);

// ---- Hallnas-Ruijsenaars functions (tau taken from ctx) ---------------------

WaveValue hr_wavefunction_ex(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx, double tol = 1e-12);
WaveValue hr_renormalized_ex(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx, double tol = 1e-12);
WaveValue phi_matrix_coeff_ex(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx, double tol = 1e-12);
cplx hr_wavefunction(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx, double tol = 1e-12);
cplx hr_renormalized(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx, double tol = 1e-12);
cplx phi_matrix_coeff(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx, double tol = 1e-12);

QdIntegrand hr_integrand(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx);
cplx hr_prefactor(const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx);
// zeta e^{-4 pi i mu tau_-} phi(-2mu - c_b) / phi(-2mu - 2tau)
cplx hr_renorm_factor(const SpectralPoint& mu, const QdContext& ctx);
// Phi = zeta^{-1} zeta_s e^{-2 pi i tau^2} P
cplx mc_factor(const QdContext& ctx);

// ---- lattice points and the epsilon-offset protocol -------------------------

struct Extrapolated {
  cplx value{};
  double error = 0;  // spread of the two first-level Richardson values
  std::vector<double> eps;
  std::vector<cplx> samples;
  nlohmann::json to_json() const;
};

inline const std::vector<double>& default_offsets() {
  static const std::vector<double> e{1e-3, 5e-4, 2.5e-4};
  return e;
}

// Richardson extrapolation to eps = 0 for a sequence of halving offsets.
Extrapolated richardson(const std::function<cplx(double)>& f, const std::vector<double>& eps = default_offsets());

// x = (c+_{n1,m1}, c-_{n2,m2} - eps)
PositionPoint whittaker_lattice_point(const GeneralizedPartition2& n, const GeneralizedPartition2& nt, double eps,
                                      const QdContext& ctx);
// mu = (-tau - c+_{n1,m1} - eps, tau - c-_{n2,m2} + eps)
SpectralPoint macdonald_lattice_point(const GeneralizedPartition2& n, const GeneralizedPartition2& nt, double eps,
                                      const QdContext& ctx);

Extrapolated whittaker_tilde_at_lattice(const SpectralPoint& l, const GeneralizedPartition2& n,
                                        const GeneralizedPartition2& nt, const QdContext& ctx, double tol = 1e-12,
                                        const std::vector<double>& eps = default_offsets());
Extrapolated hr_renormalized_at_lattice(const SpectralPoint& l, const GeneralizedPartition2& n,
                                        const GeneralizedPartition2& nt, const QdContext& ctx, double tol = 1e-12,
                                        const std::vector<double>& eps = default_offsets());

// W_n(e^{2 pi b l}; q^-2) W_nt(e^{2 pi l/b}; qt^-2)
cplx whittaker_poly_product(const SpectralPoint& l, const GeneralizedPartition2& n, const GeneralizedPartition2& nt,
                            const QdContext& ctx);
// P_n(e^{2 pi b l}; e^{2 pi b(2tau + c_b)}, q^2) P_nt(dual)
cplx macdonald_poly_product(const SpectralPoint& l, const GeneralizedPartition2& n, const GeneralizedPartition2& nt,
                            const QdContext& ctx);

// ---- difference operators ----------------------------------------------------

// weight * V1^a V2^b with V_j = e^{2 pi b v_j}
struct Monomial {
  cplx weight{1.0};
  int a = 0, b = 0;
};

struct MonomialSum {
  std::vector<Monomial> terms;
  cplx eval(cplx V1, cplx V2) const;
};

struct DiffTerm {
  MonomialSum num, den;
  std::array<cplx, 2> shift{};
};

struct DifferenceOperator {
  std::string name;
  std::vector<DiffTerm> terms;
  // sum_k coeff_k(v) f(v + s_k); throws CoefficientPole on a vanishing denominator
  cplx apply(const std::function<cplx(cplx, cplx)>& f, cplx v1, cplx v2, const QdContext& ctx) const;
};

// M^tau_j in the spectral variables; T_j shifts lambda_j by +ib
DifferenceOperator macdonald_operator(int j, const QdContext& ctx);
// H_j in the position variables; e^{2 pi b p} shifts x by -ib
DifferenceOperator toda_hamiltonian(int j, const QdContext& ctx);
// dual Toda: j = 1 gives the n-th twist, j = 2 gives M^tau_2
DifferenceOperator dual_toda(int j, int n_twist, const QdContext& ctx);

// elementary symmetric functions of e^{2 pi b v}
cplx elementary(int j, const SpectralPoint& v, const QdContext& ctx);

// relative residuals |O f - e_j f| / |e_j f| of H_j on Psi_l at x and of
// M_j on Phi_mu at l
double toda_eigen_residual(int j, const SpectralPoint& l, const PositionPoint& x, const QdContext& ctx,
                           double tol = 1e-12);
double macdonald_eigen_residual(int j, const SpectralPoint& mu, const SpectralPoint& l, const QdContext& ctx,
                                double tol = 1e-12);

// ---- measures ----------------------------------------------------------------

double sklyanin_measure(double l1, double l2, const QdContext& ctx);
cplx mr_measure(cplx l1, cplx l2, cplx g, const QdContext& ctx);

// ---- checks ------------------------------------------------------------------

struct Check {
  std::string name;
  double residual = 0;  // relative unless exact
  double threshold = 0;
  bool pass = false;
  nlohmann::json detail;
  nlohmann::json to_json() const;
};

struct HarishChandraReport {
  std::string side;
  int R = 0;
  bool exact_terms = false;     // term-by-term identity of exact coefficients
  double numeric_rel_err = 0;   // residue sum vs truncated series
  double tail_rel = 0;          // |S_{R+5} - S_R| / |S_R|
  bool truncation_exact = false;
  std::vector<Check> checks;
  bool pass = false;
  nlohmann::json to_json() const;
};

struct HarishChandraParams {
  SpectralPoint lambda{-0.35, 0.25};
  PositionPoint x{0.3, -0.2};    // whittaker side
  SpectralPoint mu{0.4, -0.15};  // macdonald side
  double tol = 1e-8;
  bool exact = true;  // include the symbolic checks (independent of b)
};

HarishChandraReport harish_chandra_residue_check(const std::string& side, const HarishChandraParams& p,
                                                 const QdContext& ctx, int R = 12);

struct WavefunSuiteOptions {
  int points = 10;
  int gg_points = 20;
  std::uint64_t seed = 11;
  std::vector<double> bs{0.7, 0.85};
  double tol = 1e-12;
  bool quick = false;
};

// Each suite returns one Check per property; the acceptance criteria are the
// conjunction of the corresponding group.
std::vector<Check> whittaker_agreement_suite(const WavefunSuiteOptions& o = {});
std::vector<Check> eigen_suite(const WavefunSuiteOptions& o = {});
std::vector<Check> symmetry_suite(const WavefunSuiteOptions& o = {});
std::vector<Check> specialization_suite(const WavefunSuiteOptions& o = {});
std::vector<Check> harish_chandra_suite(const WavefunSuiteOptions& o = {});

}  // namespace rtoda
