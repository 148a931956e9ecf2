#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "rtoda/contour.hpp"
#include "rtoda/opalg.hpp"
#include "rtoda/qcluster.hpp"
#include "rtoda/qdilog.hpp"
#include "rtoda/qseries.hpp"
#include "rtoda/wavefun.hpp"

namespace rtoda::cli {

int thread_count() {
  if (const char* s = std::getenv("RTODA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using json = nlohmann::json;

const std::vector<std::string> kEvalFunctions = {
    "phib",   "s2",          "whittaker_gg", "whittaker_mb",   "whittaker_tilde", "hr",       "hr_renorm",
    "phi_mc", "macdonald_poly", "whittaker_poly", "eigen_H1", "eigen_H2",        "eigen_M1", "eigen_M2"};
const std::vector<std::string> kSweepVars = {"z", "lambda1", "lambda2", "mu1", "mu2", "x1", "x2", "tau"};

struct RunConfig {
  double b = 0.8;
  double tau = 0.0;
  std::optional<double> tol;
  std::string precision = "double";
  std::optional<std::string> format;
  std::uint64_t seed = 1;
  std::string out;
};

struct PointArgs {
  std::string lambda = "0,0", mu = "0,0", x = "0,0", z = "0", n = "0,0", nt = "0,0";
  bool extrapolate = false;
};

struct Point {
  SpectralPoint l, mu;
  PositionPoint x;
  cplx z{};
  GeneralizedPartition2 n{0, 0}, nt{0, 0};
  double tau = 0;
};

struct Record {
  Point p;
  cplx value{std::nan(""), std::nan("")};
  double error = std::nan("");
  std::optional<double> residual;
  json extra = json::object();
  std::string failure;
};

cplx parse_complex(const std::string& s) {
  const char* c = s.c_str();
  char* end = nullptr;
  auto bad = [&] { return ConfigError("cannot parse complex number '" + s + "'"); };
  auto imag_unit = [](char ch) { return ch == 'i' || ch == 'j'; };
  const double a = std::strtod(c, &end);
  if (end == c) {
    // bare "i" or "-i"
    if (s == "i" || s == "+i") return kI;
    if (s == "-i") return -kI;
    throw bad();
  }
  if (*end == '\0') return a;
  if (imag_unit(*end) && end[1] == '\0') return cplx(0, a);
  const char* rest = end;
  if (*rest != '+' && *rest != '-') throw bad();
  const double bi = std::strtod(rest, &end);
  if (end == rest) {
    if (imag_unit(rest[1]) && rest[2] == '\0') return cplx(a, *rest == '-' ? -1.0 : 1.0);
    throw bad();
  }
  if (!imag_unit(*end) || end[1] != '\0') throw bad();
  return cplx(a, bi);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::pair<cplx, cplx> parse_pair(const std::string& s, const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw ConfigError("--" + what + " expects two comma-separated values");
  return {parse_complex(parts[0]), parse_complex(parts[1])};
}

GeneralizedPartition2 parse_partition(const std::string& s, const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw ConfigError("--" + what + " expects two comma-separated integers");
  try {
    return GeneralizedPartition2(std::stoi(parts[0]), std::stoi(parts[1]));
  } catch (const std::logic_error&) {
    throw ConfigError("--" + what + " expects two comma-separated integers");
  }
}

Point parse_point(const PointArgs& a, double tau) {
  Point p;
  auto [l1, l2] = parse_pair(a.lambda, "lambda");
  auto [m1, m2] = parse_pair(a.mu, "mu");
  auto [x1, x2] = parse_pair(a.x, "x");
  p.l = {l1, l2};
  p.mu = {m1, m2};
  p.x = {x1, x2};
  p.z = parse_complex(a.z);
  p.n = parse_partition(a.n, "n");
  p.nt = parse_partition(a.nt, "nt");
  p.tau = tau;
  return p;
}

json cj(cplx z) { return json::array({z.real(), z.imag()}); }

cplx from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cplx(j[0].get<double>(), j[1].get<double>());
  if (j.is_string()) return parse_complex(j.get<std::string>());
  throw ConfigError("batch entries must be numbers, [re, im] pairs or strings");
}

std::pair<cplx, cplx> pair_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw ConfigError("batch field '" + what + "' must have two entries");
  return {from_json(j[0]), from_json(j[1])};
}

QdContext make_context(const RunConfig& cfg, double tau) {
  const Precision prec = cfg.precision == "extended" ? Precision::Extended : Precision::Double;
  return QdContext::make(cfg.b, tau, cfg.tol.value_or(1e-12), prec);
}

void validate(const RunConfig& cfg, std::ostream& err) {
  if (!(cfg.b > 0.0 && cfg.b <= 1.0)) throw ConfigError("--b must lie in (0, 1]");
  if (cfg.tol && !(*cfg.tol >= 1e-12)) throw ConfigError("--tol must be >= 1e-12");
  const QdContext probe = QdContext::make(cfg.b);
  if (probe.b2_nearly_rational())
    err << "warning: b^2 = " << cfg.b * cfg.b << " is close to a ratio of small integers; pole lattices collide\n";
}

bool uses(const std::string& fn, const std::string& input, bool extrapolate) {
  static const std::set<std::string> zf{"phib", "s2"};
  static const std::set<std::string> wf{"whittaker_gg", "whittaker_mb", "whittaker_tilde", "eigen_H1", "eigen_H2"};
  static const std::set<std::string> hf{"hr", "hr_renorm", "phi_mc", "eigen_M1", "eigen_M2"};
  static const std::set<std::string> pf{"macdonald_poly", "whittaker_poly"};
  const bool lattice = pf.count(fn) || (extrapolate && (fn == "whittaker_tilde" || fn == "hr_renorm"));
  if (input == "z") return zf.count(fn) > 0;
  if (input == "lambda") return !zf.count(fn);
  if (input == "x") return wf.count(fn) && !lattice;
  if (input == "mu") return hf.count(fn) && !lattice;
  if (input == "n" || input == "nt") return lattice;
  if (input == "tau") return hf.count(fn) || fn == "macdonald_poly" || (fn == "hr_renorm" && lattice);
  return false;
}

Record evaluate(const std::string& fn, const Point& p, const RunConfig& cfg, bool extrapolate) {
  Record r;
  r.p = p;
  const QdContext ctx = make_context(cfg, p.tau);
  const double tol = cfg.tol.value_or(1e-12);
  auto take = [&](const WaveValue& w) {
    r.value = w.value;
    r.error = w.error;
    if (w.residues) r.extra["residues"] = w.residues;
  };
  auto lattice = [&](const Extrapolated& e, cplx expected) {
    r.value = e.value;
    r.error = e.error;
    r.residual = std::abs(e.value - expected) / std::abs(expected);
    r.extra["expected"] = cj(expected);
    r.extra["eps"] = e.eps;
    json s = json::array();
    for (cplx v : e.samples) s.push_back(cj(v));
    r.extra["samples"] = s;
  };
  if (fn == "phib") {
    r.value = phib(p.z, ctx);
    r.error = 0;
  } else if (fn == "s2") {
    r.value = double_sine_b(p.z, ctx);
    r.error = 0;
  } else if (fn == "whittaker_gg") {
    take(whittaker_gg_ex(p.l, p.x, ctx, tol));
  } else if (fn == "whittaker_mb") {
    take(whittaker_mb_ex(p.l, p.x, ctx, tol));
  } else if (fn == "whittaker_tilde") {
    if (extrapolate)
      lattice(whittaker_tilde_at_lattice(p.l, p.n, p.nt, ctx, tol), whittaker_poly_product(p.l, p.n, p.nt, ctx));
    else
      take(whittaker_tilde_ex(p.l, p.x, ctx, tol));
  } else if (fn == "hr") {
    take(hr_wavefunction_ex(p.mu, p.l, ctx, tol));
  } else if (fn == "hr_renorm") {
    if (extrapolate)
      lattice(hr_renormalized_at_lattice(p.l, p.n, p.nt, ctx, tol), macdonald_poly_product(p.l, p.n, p.nt, ctx));
    else
      take(hr_renormalized_ex(p.mu, p.l, ctx, tol));
  } else if (fn == "phi_mc") {
    take(phi_matrix_coeff_ex(p.mu, p.l, ctx, tol));
  } else if (fn == "macdonald_poly") {
    r.value = macdonald_poly_product(p.l, p.n, p.nt, ctx);
    r.error = 0;
  } else if (fn == "whittaker_poly") {
    r.value = whittaker_poly_product(p.l, p.n, p.nt, ctx);
    r.error = 0;
  } else if (fn == "eigen_H1" || fn == "eigen_H2") {
    const double res = toda_eigen_residual(fn == "eigen_H1" ? 1 : 2, p.l, p.x, ctx, tol);
    r.value = res;
    r.error = 0;
    r.residual = res;
  } else if (fn == "eigen_M1" || fn == "eigen_M2") {
    const double res = macdonald_eigen_residual(fn == "eigen_M1" ? 1 : 2, p.mu, p.l, ctx, tol);
    r.value = res;
    r.error = 0;
    r.residual = res;
  } else {
    throw ConfigError("unknown function '" + fn + "'");
  }
  return r;
}

bool is_config_kind(const std::string& kind) {
  return kind == "ConfigError" || kind == "DegenerateParameter" || kind == "IndexError";
}

// Evaluates every point, catching numerical failures per point.  Config
// errors abort the run.
std::vector<Record> evaluate_all(const std::string& fn, const std::vector<Point>& pts, const RunConfig& cfg,
                                 bool extrapolate) {
  std::vector<Record> out(pts.size());
  std::vector<std::exception_ptr> fatal(pts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < pts.size();) {
      try {
        out[i] = evaluate(fn, pts[i], cfg, extrapolate);
      } catch (const Error& e) {
        if (is_config_kind(e.kind())) {
          fatal[i] = std::current_exception();
        } else {
          out[i].p = pts[i];
          out[i].failure = e.what();
        }
      } catch (...) {
        fatal[i] = std::current_exception();
      }
    }
  };
  const int nt = std::min<int>(thread_count(), static_cast<int>(pts.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : fatal)
    if (e) std::rethrow_exception(e);
  return out;
}

json record_json(const std::string& fn, const Record& r, bool extrapolate) {
  json inputs = json::object();
  if (uses(fn, "z", extrapolate)) inputs["z"] = cj(r.p.z);
  if (uses(fn, "lambda", extrapolate)) inputs["lambda"] = {cj(r.p.l.lambda1), cj(r.p.l.lambda2)};
  if (uses(fn, "mu", extrapolate)) inputs["mu"] = {cj(r.p.mu.lambda1), cj(r.p.mu.lambda2)};
  if (uses(fn, "x", extrapolate)) inputs["x"] = {cj(r.p.x.x1), cj(r.p.x.x2)};
  if (uses(fn, "n", extrapolate)) {
    inputs["n"] = {r.p.n.n1, r.p.n.n2};
    inputs["nt"] = {r.p.nt.n1, r.p.nt.n2};
  }
  if (uses(fn, "tau", extrapolate)) inputs["tau"] = r.p.tau;
  json j = {{"inputs", inputs}};
  if (!r.failure.empty()) {
    j["failure"] = r.failure;
    return j;
  }
  j["value"] = cj(r.value);
  j["abs"] = std::abs(r.value);
  j["error"] = r.error;
  if (r.residual) j["residual"] = *r.residual;
  for (auto& [k, v] : r.extra.items()) j[k] = v;
  return j;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch == '\n' ? ' ' : ch;
  }
  return q + "\"";
}

std::string num17(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::string& fn, const std::vector<Record>& rs, double b) {
  os << "index,function,b,tau,lambda1_re,lambda1_im,lambda2_re,lambda2_im,mu1_re,mu1_im,mu2_re,mu2_im,"
        "x1_re,x1_im,x2_re,x2_im,z_re,z_im,value_re,value_im,abs,error,residual,failure\n";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const Record& r = rs[i];
    auto c = [&](cplx z) { return num17(z.real()) + "," + num17(z.imag()); };
    const bool ok = r.failure.empty();
    os << i << ',' << fn << ',' << num17(b) << ',' << num17(r.p.tau) << ',' << c(r.p.l.lambda1) << ','
       << c(r.p.l.lambda2) << ',' << c(r.p.mu.lambda1) << ',' << c(r.p.mu.lambda2) << ',' << c(r.p.x.x1) << ','
       << c(r.p.x.x2) << ',' << c(r.p.z) << ',' << (ok ? c(r.value) : ",") << ','
       << (ok ? num17(std::abs(r.value)) : "") << ',' << (ok ? num17(r.error) : "") << ','
       << (r.residual ? num17(*r.residual) : "") << ',';
    if (!ok) os << csv_field(r.failure);
    os << '\n';
  }
}

json config_json(const RunConfig& cfg) {
  json j = {{"b", cfg.b}, {"tau", cfg.tau}, {"precision", cfg.precision}, {"seed", cfg.seed},
            {"generator", "mt19937_64"}};
  if (cfg.tol) j["tol"] = *cfg.tol;
  return j;
}

int emit_records(const std::string& command, const std::string& fn, const std::vector<Record>& rs,
                 const RunConfig& cfg, bool extrapolate, const std::string& default_format, std::ostream& out,
                 const json& extra = json::object()) {
  const std::string fmt = cfg.format.value_or(default_format);
  if (fmt == "csv") {
    write_csv(out, fn, rs, cfg.b);
  } else {
    json results = json::array();
    for (const auto& r : rs) results.push_back(record_json(fn, r, extrapolate));
    json rep = {{"command", command}, {"function", fn}, {"config", config_json(cfg)}, {"results", results}};
    for (auto& [k, v] : extra.items()) rep[k] = v;
    out << rep.dump(2) << '\n';
  }
  for (const auto& r : rs)
    if (!r.failure.empty()) return kEvalError;
  return kOk;
}

// ---- suites -----------------------------------------------------------------

struct Group {
  std::string name;
  bool pass = true;
  json checks = json::array();
  std::vector<std::array<std::string, 4>> rows;  // name, pass, residual, threshold
};

template <class T>
void add_checks(Group& g, const std::vector<T>& cs) {
  for (const auto& c : cs) {
    g.pass = g.pass && c.pass;
    g.checks.push_back(c.to_json());
    std::string res, thr;
    if constexpr (std::is_same_v<T, Check>) {
      res = num17(c.residual);
      thr = num17(c.threshold);
    } else if constexpr (std::is_same_v<T, SuiteEntry>) {
      res = num17(c.max_rel_err);
    } else {
      res = c.pass ? "0" : "1";
      thr = "0";
    }
    g.rows.push_back({c.name, c.pass ? "true" : "false", res, thr});
  }
}

int run_suite(const std::string& name, bool quick, int draws, const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> groups;
  if (name == "appendix" || name == "all") groups.push_back("appendix");
  if (name == "wavefun" || name == "all")
    for (const char* g : {"whittaker_agreement", "eigen", "symmetry", "specialization", "harish_chandra"})
      groups.push_back(g);
  if (name == "cluster" || name == "all") {
    groups.push_back("cluster");
    groups.push_back("operators");
  }
  WavefunSuiteOptions wo;
  wo.seed = cfg.seed;
  wo.quick = quick;
  const int nd = draws > 0 ? draws : (quick ? 5 : 25);
  const double tol = cfg.tol.value_or(1e-8);

  std::vector<Group> res(groups.size());
  std::vector<std::exception_ptr> errs(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < groups.size();) {
      const std::string& g = groups[i];
      res[i].name = g;
      try {
        if (g == "appendix") add_checks(res[i], appendix_suite(nd, cfg.seed, tol));
        if (g == "whittaker_agreement") add_checks(res[i], whittaker_agreement_suite(wo));
        if (g == "eigen") add_checks(res[i], eigen_suite(wo));
        if (g == "symmetry") add_checks(res[i], symmetry_suite(wo));
        if (g == "specialization") add_checks(res[i], specialization_suite(wo));
        if (g == "harish_chandra") add_checks(res[i], harish_chandra_suite(wo));
        if (g == "cluster") add_checks(res[i], cluster_suite(quick ? 3 : 4));
        if (g == "operators") add_checks(res[i], operator_suite());
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  const int nt = std::min<int>(thread_count(), static_cast<int>(groups.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (!errs[i]) continue;
    try {
      std::rethrow_exception(errs[i]);
    } catch (const std::exception& e) {
      res[i].pass = false;
      res[i].checks.push_back({{"name", "exception"}, {"pass", false}, {"detail", e.what()}});
      res[i].rows.push_back({"exception", "false", "", ""});
    }
  }

  bool pass = true;
  for (const auto& g : res) pass = pass && g.pass;
  if (cfg.format.value_or("json") == "csv") {
    out << "group,check,pass,residual,threshold\n";
    for (const auto& g : res)
      for (const auto& r : g.rows)
        out << g.name << ',' << csv_field(r[0]) << ',' << r[1] << ',' << r[2] << ',' << r[3] << '\n';
  } else {
    json jg = json::array();
    for (const auto& g : res) jg.push_back({{"name", g.name}, {"pass", g.pass}, {"checks", g.checks}});
    json cj_ = {{"seed", cfg.seed}, {"generator", "mt19937_64"}, {"quick", quick}, {"tol", tol}};
    if (name == "appendix" || name == "all") cj_["draws"] = nd;
    json rep = {{"command", "suite"}, {"suite", name}, {"config", cj_}, {"groups", jg}, {"pass", pass}};
    out << rep.dump(2) << '\n';
  }
  return pass ? kOk : kEvalError;
}

// ---- sweeps -----------------------------------------------------------------

void set_var(Point& p, const std::string& var, double v) {
  if (var == "z") p.z = v;
  else if (var == "lambda1") p.l.lambda1 = v;
  else if (var == "lambda2") p.l.lambda2 = v;
  else if (var == "mu1") p.mu.lambda1 = v;
  else if (var == "mu2") p.mu.lambda2 = v;
  else if (var == "x1") p.x.x1 = v;
  else if (var == "x2") p.x.x2 = v;
  else if (var == "tau") p.tau = v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out_default, std::ostream& err) {
  CLI::App app{"Quantum dilogarithm, wavefunction and cluster-algebra laboratory", "rtoda"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--b", cfg.b, "Planck parameter b in (0, 1]")->capture_default_str();
  app.add_option("--tau", cfg.tau, "coupling tau (real)")->capture_default_str();
  app.add_option("--tol", cfg.tol, "relative tolerance (>= 1e-12)");
  app.add_option("--precision", cfg.precision, "double or extended")
      ->check(CLI::IsMember({"double", "extended"}))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", cfg.seed, "seed for random draws")->capture_default_str();
  app.add_option("--out", cfg.out, "write the report to a file");

  PointArgs pa;
  auto add_point_opts = [&](CLI::App* sc) {
    sc->add_option("--lambda", pa.lambda, "spectral point l1,l2");
    sc->add_option("--mu", pa.mu, "second spectral point m1,m2");
    sc->add_option("--x", pa.x, "position x1,x2");
    sc->add_option("--z", pa.z, "argument of phib / s2 (a, a+bi, bi)");
    sc->add_option("--n", pa.n, "generalized partition n1,n2 for lattice values");
    sc->add_option("--nt", pa.nt, "dual generalized partition");
    sc->add_flag("--extrapolate", pa.extrapolate, "evaluate at the lattice point by eps-extrapolation");
  };

  std::string fn;
  std::string batch;
  auto* ev = app.add_subcommand("eval", "evaluate one function");
  ev->add_option("function", fn, "function name")->required()->check(CLI::IsMember(kEvalFunctions));
  ev->add_option("--batch", batch, "JSON file {b, tau, points:[{lambda, mu, x}], tol}");
  add_point_opts(ev);

  std::string suite_name;
  bool quick = false;
  int draws = 0;
  auto* su = app.add_subcommand("suite", "run an invariant suite");
  su->add_option("name", suite_name)->required()->check(CLI::IsMember({"appendix", "wavefun", "cluster", "all"}));
  su->add_flag("--quick", quick, "reduced sample counts");
  su->add_option("--draws", draws, "draws per appendix identity (default 25, quick 5)");

  std::string var;
  double from = 0, to = 0, step = 0;
  int random = 0;
  auto* sw = app.add_subcommand("sweep", "evaluate over a grid or random draws; CSV by default");
  sw->add_option("function", fn, "function name")->required()->check(CLI::IsMember(kEvalFunctions));
  sw->add_option("--vary", var, "variable to step")->check(CLI::IsMember(kSweepVars));
  sw->add_option("--from", from);
  sw->add_option("--to", to);
  sw->add_option("--step", step);
  sw->add_option("--random", random, "number of random draws of the spectral/position inputs");
  add_point_opts(sw);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out_default << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out_default << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  std::ofstream file;
  std::ostringstream buffer;
  try {
    int code = kOk;
    if (ev->parsed() && !batch.empty()) {
      std::ifstream in(batch);
      if (!in) throw ConfigError("cannot open batch file " + batch);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw ConfigError(std::string("batch file: ") + e.what());
      }
      if (j.contains("b")) cfg.b = j["b"].get<double>();
      if (j.contains("tau")) cfg.tau = j["tau"].get<double>();
      if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
      validate(cfg, err);
      std::vector<Point> pts;
      const Point base = parse_point(pa, cfg.tau);
      for (const auto& e : j.value("points", json::array())) {
        Point p = base;
        if (e.contains("lambda")) {
          auto [a, c] = pair_from_json(e["lambda"], "lambda");
          p.l = {a, c};
        }
        if (e.contains("mu")) {
          auto [a, c] = pair_from_json(e["mu"], "mu");
          p.mu = {a, c};
        }
        if (e.contains("x")) {
          auto [a, c] = pair_from_json(e["x"], "x");
          p.x = {a, c};
        }
        if (e.contains("z")) p.z = from_json(e["z"]);
        pts.push_back(p);
      }
      code = emit_records("eval", fn, evaluate_all(fn, pts, cfg, pa.extrapolate), cfg, pa.extrapolate, "json",
                          buffer);
    } else if (ev->parsed()) {
      validate(cfg, err);
      const Point p = parse_point(pa, cfg.tau);
      std::vector<Record> rs = evaluate_all(fn, {p}, cfg, pa.extrapolate);
      code = emit_records("eval", fn, rs, cfg, pa.extrapolate, "json", buffer);
      if (!rs[0].failure.empty()) err << rs[0].failure << '\n';
    } else if (su->parsed()) {
      validate(cfg, err);
      code = run_suite(suite_name, quick, draws, cfg, buffer);
    } else if (sw->parsed()) {
      validate(cfg, err);
      const Point base = parse_point(pa, cfg.tau);
      std::vector<Point> pts;
      json extra = json::object();
      if (random > 0) {
        std::mt19937_64 gen(cfg.seed);
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        for (int i = 0; i < random; ++i) {
          Point p = base;
          const double a = u(gen), c = u(gen);
          if (fn == "phib" || fn == "s2") p.z = a;
          else if (fn == "eigen_M1" || fn == "eigen_M2" || fn == "hr" || fn == "hr_renorm" || fn == "phi_mc")
            p.mu = {a, c};
          else if (fn == "eigen_H1" || fn == "eigen_H2" || fn.rfind("whittaker_", 0) == 0)
            p.l = {a, c};
          else
            p.l = {a, c};
          pts.push_back(p);
        }
        extra["random"] = {{"draws", random}, {"box", 1.5}};
      } else {
        if (var.empty() || !(step > 0) || to < from) throw ConfigError("sweep needs --vary, --from <= --to, --step > 0");
        const long count = std::lround(std::floor((to - from) / step + 1e-9)) + 1;
        if (count > 1000000) throw ConfigError("sweep grid too large");
        for (long i = 0; i < count; ++i) {
          Point p = base;
          set_var(p, var, from + static_cast<double>(i) * step);
          pts.push_back(p);
        }
        extra["grid"] = {{"vary", var}, {"from", from}, {"to", to}, {"step", step}, {"rows", count}};
      }
      code = emit_records("sweep", fn, evaluate_all(fn, pts, cfg, pa.extrapolate), cfg, pa.extrapolate, "csv",
                          buffer, extra);
    }
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw ConfigError("cannot open output file " + cfg.out);
      file << buffer.str();
    } else {
      out_default << buffer.str();
    }
    return code;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return is_config_kind(e.kind()) ? kConfigError : kEvalError;
  } catch (const json::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kEvalError;
  }
}

}  // namespace rtoda::cli
