#include "rtoda/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rtoda {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Poly coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Poly coefficient overflow");
  return r;
}

Exps add_exps(const Exps& a, const Exps& b) {
  Exps r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
  return r;
}

Exps sub_exps(const Exps& a, const Exps& b) {
  Exps r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace

Poly::Poly(long long c) {
  if (c != 0) terms_[Exps{}] = c;
}

Poly Poly::var(int i, int power) {
  Exps e{};
  e.at(i) = power;
  return monomial(e, 1);
}

Poly Poly::monomial(const Exps& e, long long c) {
  Poly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exps{});
}

long long Poly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void Poly::add_term(const Exps& e, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  std::vector<std::pair<Exps, long long>> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) prod.emplace_back(add_exps(e1, e2), checked_mul(c1, c2));
  std::sort(prod.begin(), prod.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Poly r;
  for (std::size_t k = 0; k < prod.size();) {
    long long c = 0;
    std::size_t j = k;
    for (; j < prod.size() && prod[j].first == prod[k].first; ++j) c = checked_add(c, prod[j].second);
    if (c != 0) r.terms_.emplace_hint(r.terms_.end(), prod[k].first, c);
    k = j;
  }
  *this = std::move(r);
  return *this;
}

Poly Poly::pow(int n) const {
  if (n < 0) {
    if (!is_monomial()) throw std::domain_error("negative power of a non-monomial");
    auto [e, c] = *terms_.begin();
    if (c != 1 && c != -1) throw std::domain_error("negative power needs a unit coefficient");
    Exps ne;
    for (int i = 0; i < kMaxVars; ++i) ne[i] = e[i] * n;
    return monomial(ne, (n % 2 == 0) ? 1 : c);
  }
  Poly r(1), base = *this;
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

Poly Poly::scale_var(int i, int k) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    Exps ne = e;
    ne[i] *= k;
    r.add_term(ne, c);
  }
  return r;
}

Poly Poly::subs(int i, const Poly& value) const {
  Poly r;
  if (value.is_monomial()) {
    const auto& [ve, vc] = *value.terms_.begin();
    if (vc == 1 || vc == -1) {
      for (const auto& [e, c] : terms_) {
        Exps ne = e;
        ne[i] = 0;
        for (int k = 0; k < kMaxVars; ++k) ne[k] += ve[k] * e[i];
        r.add_term(ne, (vc == -1 && e[i] % 2 != 0) ? -c : c);
      }
      return r;
    }
  }
  for (const auto& [e, c] : terms_) {
    Exps ne = e;
    ne[i] = 0;
    r += monomial(ne, c) * value.pow(e[i]);
  }
  return r;
}

long long Poly::content() const {
  long long g = 0;
  for (const auto& [e, c] : terms_) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

Exps Poly::min_exps() const {
  Exps m{};
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < kMaxVars; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Exps Poly::max_exps() const {
  Exps m{};
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < kMaxVars; ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

std::pair<Exps, long long> Poly::leading() const {
  if (terms_.empty()) return {Exps{}, 0};
  return *terms_.rbegin();
}

int Poly::degree(int i) const { return max_exps()[i]; }
int Poly::low_degree(int i) const { return min_exps()[i]; }

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool unit_mon = e == Exps{};
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    long long a = c < 0 ? -c : c;
    if (a != 1 || unit_mon) os << a;
    bool need_star = a != 1;
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << (i < (int)names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] != 1) os << "^" << (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
    }
  }
  return os.str();
}

std::optional<Poly> divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return Poly(0);
  // Shift both into the polynomial ring; with b free of monomial factors the
  // Laurent quotient is then an honest polynomial.
  const Exps ma = a.min_exps(), mb = b.min_exps();
  Poly r;
  for (const auto& [e, c] : a.terms()) r.add_term(sub_exps(e, ma), c);
  Poly bb;
  for (const auto& [e, c] : b.terms()) bb.add_term(sub_exps(e, mb), c);
  const auto [le, lc] = bb.leading();
  Poly q;
  while (!r.is_zero()) {
    auto [re, rc] = r.leading();
    Exps d = sub_exps(re, le);
    for (int i = 0; i < kMaxVars; ++i)
      if (d[i] < 0) return std::nullopt;
    if (rc % lc != 0) return std::nullopt;
    Poly t = Poly::monomial(d, rc / lc);
    q += t;
    r -= t * bb;
  }
  // a = x^ma * A, b = x^mb * B, A = Q B  =>  a / b = x^(ma - mb) Q
  return q * Poly::monomial(sub_exps(ma, mb), 1);
}

// ---------------------------------------------------------------------------

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (auto q = divexact(num_, den_)) {
    num_ = *q;
    den_ = Poly(1);
    return;
  }
  long long g = std::gcd(num_.content(), den_.content());
  Exps md = den_.min_exps();
  Exps neg;
  for (int i = 0; i < kMaxVars; ++i) neg[i] = -md[i];
  Poly n2, d2;
  for (const auto& [e, c] : num_.terms()) n2 += Poly::monomial(add_exps(e, neg), c / g);
  for (const auto& [e, c] : den_.terms()) d2 += Poly::monomial(add_exps(e, neg), c / g);
  if (d2.leading().second < 0) {
    n2 = -n2;
    d2 = -d2;
  }
  num_ = std::move(n2);
  den_ = std::move(d2);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  // cancel cross factors when they divide exactly
  Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (auto q = divexact(an, bd)) {
    an = *q;
    bd = Poly(1);
  }
  if (auto q = divexact(bn, ad)) {
    bn = *q;
    ad = Poly(1);
  }
  return RatFunc(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc division by zero");
  return a * RatFunc(b.den_, b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return RatFunc(den_.pow(-n), num_.pow(-n));
  return RatFunc(num_.pow(n), den_.pow(n));
}

RatFunc RatFunc::subs(int i, const RatFunc& value) const {
  if (value.is_poly()) {
    const Poly& v = value.num();
    if (v.is_monomial() || (num_.low_degree(i) >= 0 && den_.low_degree(i) >= 0))
      return RatFunc(num_.subs(i, v), den_.subs(i, v));
  }
  auto sub_poly = [&](const Poly& p) {
    RatFunc acc;
    for (const auto& [e, c] : p.terms()) {
      Exps ne = e;
      ne[i] = 0;
      acc += RatFunc(Poly::monomial(ne, c)) * value.pow(e[i]);
    }
    return acc;
  };
  return sub_poly(num_) / sub_poly(den_);
}

std::string RatFunc::str(const std::vector<std::string>& names) const {
  if (is_poly()) return num_.str(names);
  return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

}  // namespace rtoda
