#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rtoda {

inline constexpr int kMaxVars = 8;
using Exps = std::array<int, kMaxVars>;

template <class T>
T ipow(T x, int n) {
  if (n < 0) return T(1) / ipow(x, -n);
  T r(1);
  while (n) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

// Sparse Laurent polynomial in up to kMaxVars commuting indeterminates with
// 64-bit integer coefficients.  Arithmetic throws std::overflow_error instead
// of wrapping.
class Poly {
 public:
  using Terms = std::map<Exps, long long>;

  Poly() = default;
  Poly(long long c);  // NOLINT(implicit)

  static Poly var(int i, int power = 1);
  static Poly monomial(const Exps& e, long long c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  long long coeff(const Exps& e) const;
  long long constant_term() const { return coeff(Exps{}); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Negative powers are allowed for monomials only.
  Poly pow(int n) const;
  // x_i -> x_i^k for every term.
  Poly scale_var(int i, int k) const;
  // Replace x_i by a polynomial; x_i must appear with nonnegative powers,
  // or value must be a monomial.
  Poly subs(int i, const Poly& value) const;

  long long content() const;
  Exps min_exps() const;
  Exps max_exps() const;
  std::pair<Exps, long long> leading() const;  // lex-largest term
  int degree(int i) const;                      // max exponent of x_i
  int low_degree(int i) const;                  // min exponent of x_i

  template <class T>
  T eval(const std::array<T, kMaxVars>& x) const {
    T acc{};
    for (const auto& [e, c] : terms_) {
      T m = T(static_cast<double>(c));
      for (int i = 0; i < kMaxVars; ++i)
        if (e[i] != 0) m *= ipow(x[i], e[i]);
      acc += m;
    }
    return acc;
  }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  Terms terms_;
  void add_term(const Exps& e, long long c);
  friend std::optional<Poly> divexact(const Poly& a, const Poly& b);
};

// a / b when b divides a in the Laurent ring, otherwise nullopt.
std::optional<Poly> divexact(const Poly& a, const Poly& b);

// Quotient of Laurent polynomials, normalised by integer content, monomial
// units and sign; equality is decided by cross multiplication.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(long long c) : num_(c), den_(1) {}  // NOLINT(implicit)
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(implicit)
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_constant() && den_.constant_term() == 1; }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc pow(int n) const;
  RatFunc scale_var(int i, int k) const { return RatFunc(num_.scale_var(i, k), den_.scale_var(i, k)); }
  RatFunc subs(int i, const RatFunc& value) const;

  template <class T>
  T eval(const std::array<T, kMaxVars>& x) const {
    return num_.eval(x) / den_.eval(x);
  }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  Poly num_, den_;
  void normalize();
};

}  // namespace rtoda
