#pragma once

#include <array>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "rtoda/errors.hpp"
#include "rtoda/poly.hpp"

namespace rtoda {

inline constexpr int kRank = 5;
using Vec5 = std::array<int, kRank>;
using Mat5 = std::array<Vec5, kRank>;

Vec5 unit_vec(int i);  // 1-based
Vec5 operator+(const Vec5& a, const Vec5& b);
Vec5 operator-(const Vec5& a, const Vec5& b);
Vec5 operator*(int s, const Vec5& a);
Vec5 operator-(const Vec5& a);

// Seed of the punctured-torus quiver.  Vertices are labelled 1..5, with 4 and 5
// frozen; eps[i][j] = (e_i, e_j) counts arrows i -> j minus arrows j -> i.
struct Seed {
  Mat5 eps{};
  std::array<bool, kRank> frozen{false, false, false, true, true};
  std::string label = "Q";
  // central character: the kernel vector z takes the formal value central_tau * tau
  Vec5 kernel{-1, -1, -1, 0, 0};
  int central_tau = 2;

  static Seed torus();
  int pairing(const Vec5& a, const Vec5& b) const;
  bool skew() const;
  bool operator==(const Seed& o) const { return eps == o.eps && frozen == o.frozen; }
  nlohmann::json to_json() const;
};

// Column i of the result is mu_k(e_i) written in the basis e' of the mutated seed.
Mat5 mutation_map(const Seed& s, int k);
Seed mutate_seed(const Seed& s, int k);
Vec5 map_vec(const Mat5& cols, const Vec5& v);

// Coefficients live in Z[q^{+-1}], stored as Poly in slot 0.
class LaurentElement {
 public:
  using Terms = std::map<Vec5, Poly>;

  explicit LaurentElement(const Seed& s) : seed_(s) {}
  static LaurentElement monomial(const Seed& s, const Vec5& v, const Poly& c = Poly(1));
  static LaurentElement constant(const Seed& s, const Poly& c);

  const Seed& seed() const { return seed_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  void add(const Vec5& v, const Poly& c);

  LaurentElement operator-() const;
  friend LaurentElement operator+(const LaurentElement& a, const LaurentElement& b);
  friend LaurentElement operator-(const LaurentElement& a, const LaurentElement& b);
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
  friend LaurentElement operator*(const Poly& c, const LaurentElement& a);
  friend bool operator==(const LaurentElement& a, const LaurentElement& b);
  friend bool operator!=(const LaurentElement& a, const LaurentElement& b) { return !(a == b); }

  // Y_v -> Y_{cols v} into the torus of target; no scalar corrections.
  LaurentElement map_monomials(const Mat5& cols, const Seed& target) const;

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  Seed seed_;
  Terms terms_;
};

LaurentElement commutator(const LaurentElement& a, const LaurentElement& b);

// f -> Psi_q(Y'_k) mu'_k(f) Psi_q(Y'_k)^{-1}, expanded exactly; throws NotLaurent.
LaurentElement quantum_mutate(const LaurentElement& e, int k);

// ---- punctured torus data --------------------------------------------------

enum class Curve { C10, C01, C0m1, C1m1 };
enum class LoopKind { L, Delta };
LaurentElement loop_element(Curve c, LoopKind kind);
LaurentElement loop_element(int a, int c, LoopKind kind);  // throws UnsupportedCurve

// Generalized permutations: m_plus from mu_1(Q), m_minus from mu_3(Q).
Mat5 m_plus();
Mat5 m_minus();
Mat5 sigma_listed();  // the generalized permutation listed for sigma = sigma_+^-1 sigma_-
bool is_isometry(const Mat5& cols, const Seed& from, const Seed& to);
Mat5 inverse_unimodular(const Mat5& cols);

enum class Gen { SigmaPlus, SigmaPlusInv, SigmaMinus, SigmaMinusInv };
using Word = std::vector<Gen>;
Word parse_word(const std::string& s);  // e.g. "s+^-1 s- s+^-1", "S", "sigma"
std::string word_str(const Word& w);
// Word written left to right as a group element; the rightmost letter acts first.
LaurentElement act(const Word& w, const LaurentElement& e);
LaurentElement act(Gen g, const LaurentElement& e);

Word word_S();
Word word_sigma();

struct MonodromyResult {
  std::array<std::array<LaurentElement, 2>, 2> M;
  LaurentElement trace;
  LaurentElement det;
};
MonodromyResult network_monodromy();

struct LaurentSample {
  std::vector<std::vector<int>> words;
  std::vector<bool> laurent;
  int failures = 0;
  nlohmann::json to_json() const;
};
LaurentSample universal_laurent_sample(const LaurentElement& e, int depth);

struct CheckReport {
  std::string name;
  bool pass = false;
  std::string detail;
  nlohmann::json to_json() const;
};

CheckReport commutator_check_base();
std::vector<CheckReport> cluster_suite(int laurent_depth = 4);

}  // namespace rtoda
