// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rtoda/contour.hpp"
#include "rtoda/opalg.hpp"
#include "rtoda/qcluster.hpp"
#include "rtoda/wavefun.hpp"

using namespace rtoda;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double worst(const std::vector<Check>& cs) {
  double w = 0;
  for (const auto& c : cs)
    if (c.threshold > 0) w = std::max(w, c.residual / c.threshold);
  return w;
}

Outcome checks_outcome(const std::vector<Check>& cs) {
  Outcome o;
  for (const auto& c : cs)
    if (!c.pass) {
      o.pass = false;
      if (!o.detail.empty()) o.detail += "; ";
      o.detail += c.name + " " + std::to_string(c.residual);
    }
  if (cs.empty()) o.pass = false, o.detail = "no checks ran";
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu checks, worst residual/threshold %.2e", cs.size(), worst(cs));
    o.detail = buf;
  }
  return o;
}

Outcome report_outcome(const std::vector<CheckReport>& rs) {
  Outcome o;
  for (const auto& r : rs)
    if (!r.pass) {
      o.pass = false;
      if (!o.detail.empty()) o.detail += "; ";
      o.detail += r.name;
    }
  if (rs.empty()) o.pass = false, o.detail = "no checks ran";
  if (o.pass) o.detail = std::to_string(rs.size()) + " exact checks";
  return o;
}

bool has(const std::vector<Check>& cs, const std::string& prefix) {
  for (const auto& c : cs)
    if (c.name.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

int main() {
  bool all = true;
  auto run = [&](int id, const char* what, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) {
      o.pass = false;
      o.detail += " (runtime over budget)";
    }
    all = all && o.pass;
    std::printf("criterion %d: %s  %s  [%s] %.1fs\n", id, o.pass ? "PASS" : "FAIL", what, o.detail.c_str(), secs);
    std::fflush(stdout);
  };

  run(1, "quantum dilogarithm identity suite, 25 draws, b in [0.6, 0.95], rel err <= 1e-8", 600, [] {
    Outcome o;
    const auto es = appendix_suite(25, 1, 1e-8, 0.6, 0.95);
    double w = 0;
    for (const auto& e : es) {
      w = std::max(w, e.max_rel_err);
      if (!e.pass || e.draws < 25) {
        o.pass = false;
        o.detail += e.name + " ";
      }
    }
    if (es.empty()) o.pass = false;
    if (o.pass) {
      char buf[80];
      std::snprintf(buf, sizeof buf, "%zu identities, worst rel err %.2e", es.size(), w);
      o.detail = buf;
    }
    return o;
  });

  WavefunSuiteOptions opt;
  run(2, "Gauss-Givental = Mellin-Barnes at 20 points and the star cross identity at 10 points, <= 1e-8", 0,
      [&] { return checks_outcome(whittaker_agreement_suite(opt)); });

  run(3, "H1, H2 on Psi and M1, M2 on Phi, relative residual <= 1e-6 at 10 points", 600, [&] {
    const auto cs = eigen_suite(opt);
    Outcome o = checks_outcome(cs);
    for (const char* n : {"toda_H1_eigen", "toda_H2_eigen", "macdonald_M1_eigen", "macdonald_M2_eigen"})
      if (!has(cs, n)) o.pass = false, o.detail += std::string(" missing ") + n;
    return o;
  });

  run(4, "eigenvalues, duality and conjugation laws, imaginary-tau conjugation, bispectral duality, <= 1e-8", 0,
      [&] { return checks_outcome(symmetry_suite(opt)); });

  run(5, "lattice values of Psi-tilde and the renormalized HR function, n2-n1 <= 2, nt2-nt1 <= 1, within 1e-4", 0,
      [&] {
        const auto cs = specialization_suite(opt);
        Outcome o = checks_outcome(cs);
        if (!has(cs, "whittaker_lattice") || !has(cs, "macdonald_lattice")) o.pass = false, o.detail += " missing";
        return o;
      });

  run(6, "Harish-Chandra residue sums r <= 12: exact term by term, numeric <= 1e-8, exact truncation n <= 3", 0,
      [&] {
        const auto cs = harish_chandra_suite(opt);
        Outcome o = checks_outcome(cs);
        int exact = 0;
        for (const auto& c : cs)
          if (c.name.find("exact") != std::string::npos) ++exact;
        if (exact < 4) o.pass = false, o.detail += " exact checks missing";
        return o;
      });

  run(7, "exact cluster suite", 120, [] { return report_outcome(cluster_suite(4)); });
  run(8, "exact operator suite", 0, [] { return report_outcome(operator_suite()); });

  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
