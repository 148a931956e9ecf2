#pragma once

#include <array>
#include <boost/rational.hpp>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "rtoda/poly.hpp"
#include "rtoda/qcluster.hpp"

namespace rtoda {

using Rational = boost::rational<long long>;
using RVec2 = std::array<Rational, 2>;

// Finite sum of c_k q^{r_k}, r_k rational.
class QScalar {
 public:
  using Terms = std::map<Rational, long long>;
  QScalar() = default;
  QScalar(long long c);  // NOLINT(implicit)
  static QScalar qpow(Rational r, long long c = 1);
  static QScalar from_poly(const Poly& p);  // Poly in slot 0

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(Rational r, long long c);

  friend QScalar operator+(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a, const QScalar& b);
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend bool operator==(const QScalar& a, const QScalar& b) { return a.terms_ == b.terms_; }
  std::string str() const;

 private:
  Terms terms_;
};

// phase * exp(2 pi b (alpha.p + beta.x)) * exp(2 pi b tau)^tau_deg, phase = q^phase.
// [p_j, x_k] = delta_jk / (2 pi i), q = exp(pi i b^2).
struct WeylExponent {
  RVec2 alpha{};
  RVec2 beta{};
  int tau_deg = 0;
  Rational phase{0};

  static WeylExponent p(int j);  // 1-based
  static WeylExponent x(int j);
  static WeylExponent tau(int n = 1);

  // the q-power picked up by e^{a} e^{b} relative to e^{a+b}
  static Rational product_phase(const WeylExponent& a, const WeylExponent& b);
  friend WeylExponent operator*(const WeylExponent& a, const WeylExponent& b);
  friend bool operator==(const WeylExponent& a, const WeylExponent& b) = default;
  // same operator up to phase
  bool same_exponent(const WeylExponent& o) const;
  std::string str() const;
};

struct NormalOrdered {
  Rational scalar;  // q-power
  WeylExponent x_part;
  WeylExponent p_part;
};
// exp(A+B) = q^scalar exp(B) exp(A), A = alpha.p, B = beta.x (+ tau)
NormalOrdered normal_order(const WeylExponent& e);

class WeylElement {
 public:
  struct Key {
    RVec2 alpha{}, beta{};
    int tau_deg = 0;
    auto operator<=>(const Key&) const = default;
  };
  using Terms = std::map<Key, QScalar>;

  WeylElement() = default;
  WeylElement(const WeylExponent& e);  // NOLINT(implicit)
  static WeylElement scalar(const QScalar& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const WeylExponent& e, const QScalar& c);

  friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator*(const QScalar& c, const WeylElement& a);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.terms_ == b.terms_; }
  std::string str() const;

 private:
  Terms terms_;
};

// Y_v = exp(2 pi b y_v) under y1 -> p1-p2+x1-x2, y2 -> x2-x1, y3 -> p2-p1-2tau,
// y4 -> p2, y5 -> -x1+tau.
WeylExponent polarize(const Vec5& v);
WeylElement polarize(const LaurentElement& e);

std::vector<CheckReport> check_holonomy_images();
std::vector<CheckReport> polarization_suite(int random_pairs = 50, unsigned seed = 7);

// ---- difference operators in Lambda_1, Lambda_2 ------------------------------

namespace lvar {
inline constexpr int Q = 0;
inline constexpr int L1 = 1;
inline constexpr int L2 = 2;
inline constexpr int T = 3;  // t = exp(-pi b g)
}  // namespace lvar

// sum f_a(q, Lambda, t) T_1^{a1} T_2^{a2}, shifts on the right;
// T_j f(Lambda) = f(.., q^2 Lambda_j, ..) T_j.
class LambdaDiffOp {
 public:
  using Shift = std::array<int, 2>;
  using Terms = std::map<Shift, RatFunc>;

  LambdaDiffOp() = default;
  LambdaDiffOp(const RatFunc& f);  // NOLINT(implicit)
  static LambdaDiffOp shift(int j, int n = 1);
  static LambdaDiffOp term(const RatFunc& f, Shift a);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(Shift a, const RatFunc& f);

  friend LambdaDiffOp operator+(const LambdaDiffOp& a, const LambdaDiffOp& b);
  friend LambdaDiffOp operator-(const LambdaDiffOp& a, const LambdaDiffOp& b);
  friend LambdaDiffOp operator*(const LambdaDiffOp& a, const LambdaDiffOp& b);
  friend bool operator==(const LambdaDiffOp& a, const LambdaDiffOp& b);

  // coefficientwise substitution t -> 0 (no negative powers of t allowed)
  LambdaDiffOp at_t_zero() const;
  std::string str() const;

 private:
  Terms terms_;
};

LambdaDiffOp commutator(const LambdaDiffOp& a, const LambdaDiffOp& b);
// gamma^n op gamma^-n with gamma T_j gamma^-1 = q Lambda_j T_j
LambdaDiffOp gamma_twist(const LambdaDiffOp& op, int n);

LambdaDiffOp macdonald_M1();
LambdaDiffOp macdonald_M2();
LambdaDiffOp dual_toda_H1();
LambdaDiffOp dual_toda_H2();
// closed form q^n (Lambda_1^n/(1-Lambda_1/Lambda_2) T_1 + Lambda_2^n/(1-Lambda_2/Lambda_1) T_2)
LambdaDiffOp dual_toda_H1n(int n);

std::vector<CheckReport> lambda_op_identity_suite();
std::vector<CheckReport> operator_suite();

}  // namespace rtoda
