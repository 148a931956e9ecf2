#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

namespace rtoda::quad {

// Gauss-Kronrod 15/7 abscissae and weights (QUADPACK, 33 digits).
template <class R>
struct GK15 {
  std::array<R, 8> xgk, wgk;
  std::array<R, 4> wg;
  GK15() {
    static const char* xs[8] = {
        "0.991455371120812639206854697526329", "0.949107912342758524526189684047851",
        "0.864864423359769072789712788640926", "0.741531185599394439863864773280788",
        "0.586087235467691130294144845693013", "0.405845151377397166906606412076961",
        "0.207784955007898467600689403773245", "0.0"};
    static const char* ws[8] = {
        "0.022935322010529224963732008058970", "0.063092092629978553290700663189204",
        "0.104790010322250183839876322541518", "0.140653259715525918745189590510238",
        "0.169004726639267902826583426598550", "0.190350578064785409913256402421014",
        "0.204432940075298892414161999234649", "0.209482141084727828012999174891714"};
    static const char* gs[4] = {
        "0.129484966168869693270611432679082", "0.279705391489276667901467771423780",
        "0.381830050505118944950369775488975", "0.417959183673469387755102040816327"};
    for (int i = 0; i < 8; ++i) {
      xgk[i] = parse(xs[i]);
      wgk[i] = parse(ws[i]);
    }
    for (int i = 0; i < 4; ++i) wg[i] = parse(gs[i]);
  }
  static R parse(const char* s) {
    if constexpr (std::is_floating_point_v<R>)
      return static_cast<R>(std::strtold(s, nullptr));
    else
      return R(s);
  }
  static const GK15& get() {
    static const GK15 rule;
    return rule;
  }
};

template <class R>
struct Estimate {
  std::complex<R> value{};
  R error{};
};

// One Kronrod panel of f on [a, b] (real parameter).
template <class R, class F>
Estimate<R> gk15_panel(F&& f, R a, R b) {
  using C = std::complex<R>;
  const auto& rule = GK15<R>::get();
  const R c = (a + b) / 2, hw = (b - a) / 2;
  C fc = f(c);
  C kr = fc * rule.wgk[7];
  C gs = fc * rule.wg[3];
  for (int j = 0; j < 7; ++j) {
    const R dx = hw * rule.xgk[j];
    C f1 = f(c - dx), f2 = f(c + dx);
    kr += (f1 + f2) * rule.wgk[j];
    if (j % 2 == 1) gs += (f1 + f2) * rule.wg[j / 2];
  }
  Estimate<R> e;
  e.value = kr * hw;
  e.error = std::abs((kr - gs) * hw);
  return e;
}

template <class R>
struct Result {
  std::complex<R> value{};
  R error{};
  int panels = 0;
  bool converged = true;
};

// Global adaptive bisection on [a, b] until error <= max(abs_tol, rel_tol |I|).
template <class R, class F>
Result<R> adaptive(F&& f, R a, R b, R rel_tol, R abs_tol, int max_panels = 4000) {
  struct Panel {
    R a, b;
    Estimate<R> e;
    bool operator<(const Panel& o) const { return e.error < o.e.error; }
  };
  std::priority_queue<Panel> heap;
  Panel first{a, b, gk15_panel<R>(f, a, b)};
  std::complex<R> total = first.e.value;
  R err = first.e.error;
  heap.push(first);
  int panels = 1;
  Result<R> out;
  using std::abs;
  while (err > std::max(abs_tol, rel_tol * abs(total))) {
    if (panels >= max_panels) {
      out.converged = false;
      break;
    }
    Panel p = heap.top();
    heap.pop();
    R m = (p.a + p.b) / 2;
    Panel l{p.a, m, gk15_panel<R>(f, p.a, m)};
    Panel r{m, p.b, gk15_panel<R>(f, m, p.b)};
    total += l.e.value + r.e.value - p.e.value;
    err += l.e.error + r.e.error - p.e.error;
    heap.push(l);
    heap.push(r);
    panels += 1;
  }
  // Re-sum in a fixed order so the result does not depend on heap history.
  std::vector<Panel> all;
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  std::complex<R> sum{};
  R esum{};
  for (const auto& p : all) {
    sum += p.e.value;
    esum += p.e.error;
  }
  out.value = sum;
  out.error = esum;
  out.panels = panels;
  return out;
}

}  // namespace rtoda::quad
