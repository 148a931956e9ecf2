#pragma once

#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rtoda/qdilog.hpp"

namespace rtoda {

// prod_j phi(t - a_j) / prod_k phi(t - b_k) * exp(c2 t^2 + c1 t + c0) * constant
struct QdIntegrand {
  std::vector<cplx> num;  // a_j
  std::vector<cplx> den;  // b_k
  cplx c2{}, c1{}, c0{};
  cplx constant{1.0};

  cplx log_value(cplx t, const QdContext& ctx) const;
  cplx operator()(cplx t, const QdContext& ctx) const;
  // quadratic and linear coefficients of the log-asymptotics as Re t -> +-inf
  std::pair<cplx, cplx> asymptotic(int side, const QdContext& ctx) const;
};

struct Tail {
  cplx start;
  double angle = 0;   // direction of the ray leaving start
  double radius = 0;  // truncation
};

struct ContourPath {
  cplx left, right;  // ends of the horizontal segment
  Tail left_tail, right_tail;
  double gap = 0;     // vertical room between the pole families
  double height = 0;  // Im of the segment
  nlohmann::json to_json() const;
};

struct ContourOptions {
  std::optional<double> height;  // override; skips the separation check
  double margin = 2.0;           // horizontal distance past the outermost family
  double tail_bias = 0.0;        // in [-1,1]: position inside the admissible sector
  double rel_tol = 1e-12;
};

// Families ascend from a_j + c_b and descend from b_k - c_b.
ContourPath build_contour(const QdIntegrand& f, const QdContext& ctx, const ContourOptions& opt = {});

struct IntegralResult {
  cplx value{};
  double error = 0;
  int panels = 0;
  bool converged = true;
};

IntegralResult integrate(const QdIntegrand& f, const ContourPath& path, const QdContext& ctx,
                         double tol = 1e-12, bool throw_on_fail = false);
IntegralResult integrate(const QdIntegrand& f, const QdContext& ctx, double tol = 1e-12);

struct PoleRef {
  enum class Family { Ascending, Descending };
  Family family = Family::Ascending;
  int index = 0;  // j or k
  int m = 0, n = 0;
  cplx location(const QdIntegrand& f, const QdContext& ctx) const;
};

cplx residue(const QdIntegrand& f, const PoleRef& p, const QdContext& ctx);
// 2 pi i times the sum of residues
cplx residue_sum(const QdIntegrand& f, const std::vector<PoleRef>& poles, const QdContext& ctx);

// ---- identities ------------------------------------------------------------

using Params = std::map<std::string, cplx>;

struct IdentityReport {
  std::string identity;
  double b = 0;
  Params params;
  cplx lhs{}, rhs{};
  double abs_err = 0, rel_err = 0;
  bool pass = false;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& identity_names();
// fourier1: 0 < Im w < Im c_b
// fourier2: -Im c_b < Im w < 0
// beta1, beta2, pentagon_kernel: Im w < 0 < Im(u - v + w), Im(u - v) < 2 Im c_b
// saalschutz: Im(u1 + u2 - v) > 0, max(0, -Im v) < Im(c_b - u_i)
Params draw_params(const std::string& name, const QdContext& ctx, std::mt19937_64& rng);
IdentityReport verify_identity(const std::string& name, const Params& p, const QdContext& ctx, double tol = 1e-8);

// closed forms, shared with the checks
cplx beta1_rhs(cplx u, cplx v, cplx w, const QdContext& ctx);
cplx beta2_rhs(cplx u, cplx v, cplx w, const QdContext& ctx);
cplx saalschutz_rhs(cplx u1, cplx u2, cplx v, const QdContext& ctx);

struct SuiteEntry {
  std::string name;
  int draws = 0;
  int passed = 0;
  double max_rel_err = 0;
  bool pass = false;
  nlohmann::json to_json() const;
};

// Unitarity, inversion, functional equations, b <-> 1/b, Barnes relation and
// the integral identities, each at `draws` random points with b in [bmin, bmax].
std::vector<SuiteEntry> appendix_suite(int draws = 25, std::uint64_t seed = 1, double tol = 1e-8,
                                       double bmin = 0.6, double bmax = 0.95);

}  // namespace rtoda
