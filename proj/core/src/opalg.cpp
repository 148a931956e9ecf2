#include "rtoda/opalg.hpp"

#include <random>
#include <sstream>

namespace rtoda {

namespace {

std::string rstr(const Rational& r) {
  if (r.denominator() == 1LL) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational dot(const RVec2& a, const RVec2& b) { return a[0] * b[0] + a[1] * b[1]; }

CheckReport make(std::string name, bool pass, std::string detail = "") {
  return CheckReport{std::move(name), pass, std::move(detail)};
}

}  // namespace

// ---- QScalar -------------------------------------------------------------

QScalar::QScalar(long long c) {
  if (c != 0) terms_[Rational(0)] = c;
}

QScalar QScalar::qpow(Rational r, long long c) {
  QScalar s;
  s.add(r, c);
  return s;
}

QScalar QScalar::from_poly(const Poly& p) {
  QScalar s;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 1; i < kMaxVars; ++i)
      if (e[i] != 0) throw DomainError("coefficient depends on more than q");
    s.add(Rational(e[0]), c);
  }
  return s;
}

void QScalar::add(Rational r, long long c) {
  if (c == 0) return;
  long long& v = terms_[r];
  v += c;
  if (v == 0) terms_.erase(r);
}

QScalar operator+(const QScalar& a, const QScalar& b) {
  QScalar r = a;
  for (const auto& [k, c] : b.terms_) r.add(k, c);
  return r;
}

QScalar operator-(const QScalar& a, const QScalar& b) {
  QScalar r = a;
  for (const auto& [k, c] : b.terms_) r.add(k, -c);
  return r;
}

QScalar operator*(const QScalar& a, const QScalar& b) {
  QScalar r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add(ka + kb, ca * cb);
  return r;
}

std::string QScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    long long a = c < 0 ? -c : c;
    if (k == Rational(0)) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "q^" << rstr(k);
  }
  return os.str();
}

// ---- WeylExponent ----------------------------------------------------------

WeylExponent WeylExponent::p(int j) {
  WeylExponent e;
  e.alpha[j - 1] = 1;
  return e;
}

WeylExponent WeylExponent::x(int j) {
  WeylExponent e;
  e.beta[j - 1] = 1;
  return e;
}

WeylExponent WeylExponent::tau(int n) {
  WeylExponent e;
  e.tau_deg = n;
  return e;
}

Rational WeylExponent::product_phase(const WeylExponent& a, const WeylExponent& b) {
  return -(dot(a.alpha, b.beta) - dot(b.alpha, a.beta));
}

WeylExponent operator*(const WeylExponent& a, const WeylExponent& b) {
  WeylExponent r;
  for (int i = 0; i < 2; ++i) {
    r.alpha[i] = a.alpha[i] + b.alpha[i];
    r.beta[i] = a.beta[i] + b.beta[i];
  }
  r.tau_deg = a.tau_deg + b.tau_deg;
  r.phase = a.phase + b.phase + WeylExponent::product_phase(a, b);
  return r;
}

bool WeylExponent::same_exponent(const WeylExponent& o) const {
  return alpha == o.alpha && beta == o.beta && tau_deg == o.tau_deg;
}

std::string WeylExponent::str() const {
  std::ostringstream os;
  if (phase != Rational(0)) os << "q^" << rstr(phase) << "*";
  os << "e^{2pi b(";
  bool first = true;
  auto put = [&](const Rational& c, const char* name) {
    if (c == Rational(0)) return;
    if (c < Rational(0)) os << "-";
    else if (!first) os << "+";
    Rational a = c < Rational(0) ? -c : c;
    if (a != Rational(1)) os << rstr(a);
    os << name;
    first = false;
  };
  put(alpha[0], "p1");
  put(alpha[1], "p2");
  put(beta[0], "x1");
  put(beta[1], "x2");
  put(Rational(tau_deg), "tau");
  if (first) os << "0";
  os << ")}";
  return os.str();
}

NormalOrdered normal_order(const WeylExponent& e) {
  NormalOrdered n;
  n.x_part.beta = e.beta;
  n.x_part.tau_deg = e.tau_deg;
  n.p_part.alpha = e.alpha;
  n.scalar = e.phase - dot(e.alpha, e.beta);
  return n;
}

// ---- WeylElement -----------------------------------------------------------

WeylElement::WeylElement(const WeylExponent& e) { add(e, QScalar(1)); }

WeylElement WeylElement::scalar(const QScalar& c) {
  WeylElement r;
  r.add(WeylExponent{}, c);
  return r;
}

void WeylElement::add(const WeylExponent& e, const QScalar& c) {
  Key k{e.alpha, e.beta, e.tau_deg};
  QScalar v = terms_[k] + QScalar::qpow(e.phase) * c;
  if (v.is_zero()) terms_.erase(k);
  else terms_[k] = v;
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
  WeylElement r = a;
  for (const auto& [k, c] : b.terms_) r.add(WeylExponent{k.alpha, k.beta, k.tau_deg, 0}, c);
  return r;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) { return a + QScalar(-1) * b; }

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      WeylExponent e = WeylExponent{ka.alpha, ka.beta, ka.tau_deg, 0} * WeylExponent{kb.alpha, kb.beta, kb.tau_deg, 0};
      r.add(e, ca * cb);
    }
  return r;
}

WeylElement operator*(const QScalar& c, const WeylElement& a) {
  WeylElement r;
  for (const auto& [k, v] : a.terms_) r.add(WeylExponent{k.alpha, k.beta, k.tau_deg, 0}, c * v);
  return r;
}

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")" + WeylExponent{k.alpha, k.beta, k.tau_deg, 0}.str();
  }
  return s;
}

// ---- polarization ----------------------------------------------------------

WeylExponent polarize(const Vec5& v) {
  WeylExponent e;
  e.alpha = {Rational(v[0] - v[2]), Rational(-v[0] + v[2] + v[3])};
  e.beta = {Rational(v[0] - v[1] - v[4]), Rational(-v[0] + v[1])};
  e.tau_deg = -2 * v[2] + v[4];
  return e;
}

WeylElement polarize(const LaurentElement& e) {
  WeylElement r;
  for (const auto& [v, c] : e.terms()) r.add(polarize(v), QScalar::from_poly(c));
  return r;
}

std::vector<CheckReport> check_holonomy_images() {
  using W = WeylExponent;
  auto sum = [](const W& a, const W& b) {
    W r = a * b;
    r.phase = 0;  // symmetric exponent of the sum
    return r;
  };
  auto neg = [](W a) {
    for (auto& c : a.alpha) c = -c;
    for (auto& c : a.beta) c = -c;
    a.tau_deg = -a.tau_deg;
    return a;
  };
  const W p1 = W::p(1), p2 = W::p(2), x1 = W::x(1), x2 = W::x(2), t = W::tau();
  std::vector<std::pair<std::string, WeylElement>> want{
      {"L(1,0)", WeylElement(p2) + WeylElement(sum(sum(p2, x2), neg(x1))) + WeylElement(p1)},
      {"Delta(1,0)", WeylElement(sum(p1, p2))},
      {"L(0,1)", WeylElement(sum(x1, neg(t))) + WeylElement(sum(sum(sum(p1, neg(p2)), x1), t)) +
                     WeylElement(sum(x2, t))},
      {"Delta(0,1)", WeylElement(sum(x1, x2))},
  };
  std::vector<LaurentElement> have{loop_element(1, 0, LoopKind::L), loop_element(1, 0, LoopKind::Delta),
                                   loop_element(0, 1, LoopKind::L), loop_element(0, 1, LoopKind::Delta)};
  std::vector<CheckReport> out;
  for (std::size_t i = 0; i < want.size(); ++i) {
    WeylElement got = polarize(have[i]);
    bool ok = got == want[i].second;
    out.push_back(make("holonomy image " + want[i].first, ok, ok ? got.str() : "difference " + (got - want[i].second).str()));
  }
  WeylElement d10 = polarize(have[1]), d01 = polarize(have[3]);
  // (Delta(1,0), Delta(0,1)) = 2 in the torus: q-commuting, not commuting
  const int pr = Seed::torus().pairing(have[1].terms().begin()->first, have[3].terms().begin()->first);
  out.push_back(make("Delta(1,0) Delta(0,1) = q^-4 Delta(0,1) Delta(1,0)",
                     d10 * d01 == QScalar::qpow(Rational(-2 * pr)) * (d01 * d10) && pr == 2,
                     "torus pairing " + std::to_string(pr)));
  return out;
}

std::vector<CheckReport> polarization_suite(int random_pairs, unsigned seed) {
  std::vector<CheckReport> out;
  const Seed Q = Seed::torus();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> di(-3, 3), dd(1, 3);

  auto twisted = [&](const Vec5& u, const Vec5& v) {
    WeylExponent l = polarize(u) * polarize(v);
    WeylExponent r = polarize(u + v);
    r.phase = Rational(-Q.pairing(u, v));
    return l == r;
  };
  bool ok = true;
  std::string why;
  for (int i = 1; i <= kRank; ++i)
    for (int j = 1; j <= kRank; ++j)
      if (!twisted(unit_vec(i), unit_vec(j))) ok = false, why = "e" + std::to_string(i) + ",e" + std::to_string(j);
  for (int n = 0; n < random_pairs; ++n) {
    Vec5 u, v;
    for (auto& c : u) c = di(rng);
    for (auto& c : v) c = di(rng);
    if (!twisted(u, v)) ok = false, why = "random pair " + std::to_string(n);
  }
  out.push_back(make("polarization q-twisted homomorphism", ok,
                     ok ? "pol(u) pol(v) = q^{-(u,v)} pol(u+v), i.e. q^{(u,v)} Y_u Y_v = Y_{u+v}" : why));

  // central element
  {
    const Vec5 c{1, 1, 1, 0, 0};
    WeylExponent e = polarize(c);
    bool central = e.alpha == RVec2{} && e.beta == RVec2{} && e.tau_deg == -2;
    const LaurentElement Y1 = LaurentElement::monomial(Q, unit_vec(1)), Y2 = LaurentElement::monomial(Q, unit_vec(2)),
                         Y3 = LaurentElement::monomial(Q, unit_vec(3));
    WeylElement prod = polarize(Y1 * Y2 * Y3);
    WeylElement want = QScalar::qpow(2) * WeylElement(WeylExponent::tau(-2));
    out.push_back(make("Y1 Y2 Y3 = q^2 e^{-4 pi b tau}", central && prod == want, prod.str()));
  }

  auto rnd_exp = [&] {
    WeylExponent e;
    for (auto& c : e.alpha) c = Rational(di(rng), dd(rng));
    for (auto& c : e.beta) c = Rational(di(rng), dd(rng));
    e.tau_deg = di(rng);
    return e;
  };
  bool assoc = true, anti = true, round = true;
  for (int n = 0; n < random_pairs; ++n) {
    WeylExponent a = rnd_exp(), b = rnd_exp(), c = rnd_exp();
    assoc = assoc && (a * b) * c == a * (b * c);
    Rational d = (a * b).phase - (b * a).phase;
    anti = anti && d == Rational(-2) * (dot(a.alpha, b.beta) - dot(b.alpha, a.beta));
    NormalOrdered no = normal_order(a);
    WeylExponent back = no.x_part * no.p_part;
    back.phase += no.scalar;
    round = round && back == a;
  }
  out.push_back(make("Weyl product associative", assoc));
  out.push_back(make("Weyl phase antisymmetry", anti));
  out.push_back(make("normal order round trip", round));
  {
    WeylExponent e;
    e.alpha = {Rational(0), Rational(1)};
    e.beta = {Rational(-1), Rational(1)};
    NormalOrdered no = normal_order(e);
    out.push_back(make("normal order of e^{2pi b(p2+x2-x1)}", no.scalar == Rational(-1) && no.p_part == WeylExponent::p(2),
                       "scalar q^" + rstr(no.scalar)));
  }
  return out;
}

// ---- difference operators --------------------------------------------------

namespace {

RatFunc lv(int i, int n = 1) { return RatFunc(Poly::var(i, n)); }

RatFunc shifted(const RatFunc& f, const LambdaDiffOp::Shift& a) {
  RatFunc g = f;
  if (a[0] != 0) g = g.subs(lvar::L1, lv(lvar::Q, 2 * a[0]) * lv(lvar::L1));
  if (a[1] != 0) g = g.subs(lvar::L2, lv(lvar::Q, 2 * a[1]) * lv(lvar::L2));
  return g;
}

// lowest t-coefficient of p and its degree
std::pair<Poly, int> low_t(const Poly& p) {
  const int d = p.low_degree(lvar::T);
  Poly r;
  for (const auto& [e, c] : p.terms())
    if (e[lvar::T] == d) {
      Exps f = e;
      f[lvar::T] = 0;
      r += Poly::monomial(f, c);
    }
  return {r, d};
}

}  // namespace

LambdaDiffOp::LambdaDiffOp(const RatFunc& f) { add({0, 0}, f); }

LambdaDiffOp LambdaDiffOp::shift(int j, int n) {
  Shift a{0, 0};
  a[j - 1] = n;
  return term(RatFunc(1), a);
}

LambdaDiffOp LambdaDiffOp::term(const RatFunc& f, Shift a) {
  LambdaDiffOp r;
  r.add(a, f);
  return r;
}

void LambdaDiffOp::add(Shift a, const RatFunc& f) {
  if (f.is_zero()) return;
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_.emplace(a, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

LambdaDiffOp operator+(const LambdaDiffOp& a, const LambdaDiffOp& b) {
  LambdaDiffOp r = a;
  for (const auto& [s, f] : b.terms_) r.add(s, f);
  return r;
}

LambdaDiffOp operator-(const LambdaDiffOp& a, const LambdaDiffOp& b) {
  LambdaDiffOp r = a;
  for (const auto& [s, f] : b.terms_) r.add(s, -f);
  return r;
}

LambdaDiffOp operator*(const LambdaDiffOp& a, const LambdaDiffOp& b) {
  LambdaDiffOp r;
  for (const auto& [sa, fa] : a.terms_)
    for (const auto& [sb, fb] : b.terms_) r.add({sa[0] + sb[0], sa[1] + sb[1]}, fa * shifted(fb, sa));
  return r;
}

bool operator==(const LambdaDiffOp& a, const LambdaDiffOp& b) { return (a - b).is_zero(); }

LambdaDiffOp LambdaDiffOp::at_t_zero() const {
  LambdaDiffOp r;
  for (const auto& [s, f] : terms_) {
    auto [n, dn] = low_t(f.num());
    auto [d, dd] = low_t(f.den());
    if (dn < dd) throw DomainError("coefficient has a pole at t = 0");
    if (dn == dd) r.add(s, RatFunc(n, d));
  }
  return r;
}

std::string LambdaDiffOp::str() const {
  if (terms_.empty()) return "0";
  static const std::vector<std::string> names{"q", "L1", "L2", "t"};
  std::string out;
  for (const auto& [s, f] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + f.str(names) + "]";
    if (s[0] != 0) out += " T1^" + std::to_string(s[0]);
    if (s[1] != 0) out += " T2^" + std::to_string(s[1]);
  }
  return out;
}

LambdaDiffOp commutator(const LambdaDiffOp& a, const LambdaDiffOp& b) { return a * b - b * a; }

LambdaDiffOp gamma_twist(const LambdaDiffOp& op, int n) {
  if (n == 0) return op;
  // images of T_j^{+-1} under one step of conjugation
  auto image = [&](int j, int sgn) {
    const int L = j == 1 ? lvar::L1 : lvar::L2;
    if (n > 0) {
      // gamma T gamma^-1 = q Lambda T
      LambdaDiffOp g = LambdaDiffOp::term(lv(lvar::Q) * lv(L), j == 1 ? LambdaDiffOp::Shift{1, 0} : LambdaDiffOp::Shift{0, 1});
      if (sgn > 0) return g;
      return LambdaDiffOp::shift(j, -1) * LambdaDiffOp(RatFunc(1) / (lv(lvar::Q) * lv(L)));
    }
    // gamma^-1 T gamma = q^-1 Lambda^-1 T
    LambdaDiffOp g = LambdaDiffOp::term(lv(lvar::Q, -1) * lv(L, -1), j == 1 ? LambdaDiffOp::Shift{1, 0} : LambdaDiffOp::Shift{0, 1});
    if (sgn > 0) return g;
    return LambdaDiffOp::shift(j, -1) * LambdaDiffOp(lv(lvar::Q) * lv(L));
  };
  LambdaDiffOp cur = op;
  const int steps = n > 0 ? n : -n;
  for (int k = 0; k < steps; ++k) {
    LambdaDiffOp next;
    for (const auto& [s, f] : cur.terms()) {
      LambdaDiffOp t(f);
      for (int j = 1; j <= 2; ++j) {
        const int a = s[j - 1];
        for (int m = 0; m < (a > 0 ? a : -a); ++m) t = t * image(j, a > 0 ? 1 : -1);
      }
      next = next + t;
    }
    cur = next;
  }
  return cur;
}

LambdaDiffOp macdonald_M1() {
  const RatFunc t = lv(lvar::T), L1 = lv(lvar::L1), L2 = lv(lvar::L2);
  const RatFunc ti = RatFunc(1) / t;
  return LambdaDiffOp::term((t * L1 - ti * L2) / (L1 - L2), {1, 0}) +
         LambdaDiffOp::term((t * L2 - ti * L1) / (L2 - L1), {0, 1});
}

LambdaDiffOp macdonald_M2() { return LambdaDiffOp::term(RatFunc(1), {1, 1}); }

LambdaDiffOp dual_toda_H1() { return dual_toda_H1n(0); }

LambdaDiffOp dual_toda_H2() { return macdonald_M2(); }

LambdaDiffOp dual_toda_H1n(int n) {
  const RatFunc L1 = lv(lvar::L1), L2 = lv(lvar::L2), one(1);
  const RatFunc qn = lv(lvar::Q, n);
  return LambdaDiffOp::term(qn * L1.pow(n) / (one - L1 / L2), {1, 0}) +
         LambdaDiffOp::term(qn * L2.pow(n) / (one - L2 / L1), {0, 1});
}

std::vector<CheckReport> lambda_op_identity_suite() {
  std::vector<CheckReport> out;
  auto zero = [&](std::string name, const LambdaDiffOp& d) {
    out.push_back(make(std::move(name), d.is_zero(), d.is_zero() ? "" : "difference " + d.str()));
  };
  const RatFunc q = lv(lvar::Q), t = lv(lvar::T), L1 = lv(lvar::L1), L2 = lv(lvar::L2);
  zero("T1 Lambda1 = q^2 Lambda1 T1",
       LambdaDiffOp::shift(1) * LambdaDiffOp(L1) - LambdaDiffOp::term(q.pow(2) * L1, {1, 0}));
  zero("T2 Lambda2 = q^2 Lambda2 T2",
       LambdaDiffOp::shift(2) * LambdaDiffOp(L2) - LambdaDiffOp::term(q.pow(2) * L2, {0, 1}));
  zero("T1 Lambda2 = Lambda2 T1", LambdaDiffOp::shift(1) * LambdaDiffOp(L2) - LambdaDiffOp::term(L2, {1, 0}));

  const LambdaDiffOp M1 = macdonald_M1(), M2 = macdonald_M2(), H1 = dual_toda_H1();
  zero("H1 = (t M1)|_{t=0}", (LambdaDiffOp(t) * M1).at_t_zero() - H1);
  zero("gamma T1 gamma^-1 = q Lambda1 T1", gamma_twist(LambdaDiffOp::shift(1), 1) - LambdaDiffOp::term(q * L1, {1, 0}));
  zero("gamma^2 T1 gamma^-2 = q^2 Lambda1^2 T1",
       gamma_twist(LambdaDiffOp::shift(1), 2) - LambdaDiffOp::term(q.pow(2) * L1.pow(2), {1, 0}));
  zero("gamma twist inverse", gamma_twist(gamma_twist(M1, 3), -3) - M1);
  for (int n : {-2, -1, 1, 2, 3}) zero("H1," + std::to_string(n) + " twist formula", gamma_twist(H1, n) - dual_toda_H1n(n));
  zero("M1 = t^-1 H1,0 - q^-2 (t/Lambda1 Lambda2) H1,2",
       M1 - (LambdaDiffOp(RatFunc(1) / t) * dual_toda_H1n(0) -
             LambdaDiffOp(q.pow(-2) * t / (L1 * L2)) * dual_toda_H1n(2)));
  zero("[M1, M2] = 0", commutator(M1, M2));
  zero("[H1, H2] = 0", commutator(H1, dual_toda_H2()));
  return out;
}

std::vector<CheckReport> operator_suite() {
  std::vector<CheckReport> out = polarization_suite();
  for (auto& r : check_holonomy_images()) out.push_back(std::move(r));
  for (auto& r : lambda_op_identity_suite()) out.push_back(std::move(r));
  return out;
}

}  // namespace rtoda
