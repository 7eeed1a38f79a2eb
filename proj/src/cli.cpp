#include "extremal/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "extremal/annulus.hpp"
#include "extremal/bounds.hpp"
#include "extremal/error.hpp"
#include "extremal/figures.hpp"
#include "extremal/general_p.hpp"
#include "extremal/oracle.hpp"
#include "extremal/p1.hpp"
#include "extremal/quadrature.hpp"
#include "extremal/table.hpp"
#include "extremal/verify.hpp"
#include "json.hpp"

namespace extremal {

namespace {

using json = nlohmann::ordered_json;
constexpr double kPi = std::numbers::pi;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- records -------------------------------------------------------------

using Value = std::variant<double, bool, std::string>;

struct Record {
  std::vector<std::pair<std::string, Value>> fields;
  std::vector<std::string> comments;
  std::optional<Table> table;  // optional sample table

  void set(std::string k, Value v) { fields.emplace_back(std::move(k), std::move(v)); }
};

json to_json(const Value& v) {
  if (const double* d = std::get_if<double>(&v)) {
    // JSON has no NaN or infinity
    return std::isfinite(*d) ? json(*d) : json(nullptr);
  }
  if (const bool* b = std::get_if<bool>(&v)) return *b;
  return std::get<std::string>(v);
}

std::string csv_cell(const Value& v) {
  if (const double* d = std::get_if<double>(&v)) return format_double(*d);
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  std::string s = std::get<std::string>(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

json table_json(const Table& t) {
  json j;
  j["name"] = t.name;
  j["comments"] = t.comments;
  j["columns"] = t.columns;
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row = json::array();
    for (double v : r) row.push_back(std::isfinite(v) ? json(v) : json(nullptr));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

void emit_record(std::ostream& out, const Record& r, const std::string& format) {
  if (format == "json") {
    json j;
    for (const auto& [k, v] : r.fields) j[k] = to_json(v);
    if (r.table) j["table"] = table_json(*r.table);
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& c : r.comments) out << "# " << c << '\n';
  if (r.table) {
    // scalar results ride along as comments above the sample table
    for (const auto& [k, v] : r.fields) out << "# " << k << " = " << csv_cell(v) << '\n';
    write_csv(out, *r.table);
    return;
  }
  for (std::size_t i = 0; i < r.fields.size(); ++i) out << (i ? "," : "") << r.fields[i].first;
  out << '\n';
  for (std::size_t i = 0; i < r.fields.size(); ++i) out << (i ? "," : "") << csv_cell(r.fields[i].second);
  out << '\n';
}

void emit_table(std::ostream& out, const Table& t, const std::string& format) {
  if (format == "json") {
    out << table_json(t).dump(2) << '\n';
  } else {
    write_csv(out, t);
  }
}

void add_report(Record& rec, const BoundReport& r) {
  rec.set("bound", r.name);
  rec.set("value", r.value);
  rec.set("applicable", r.applicable);
  for (const auto& [k, v] : r.inputs) rec.set("input." + k, v);
  for (const auto& [k, v] : r.terms) rec.set("term." + k, v);
  for (const auto& h : r.hypotheses) rec.set("hypothesis." + h.name, h.holds);
}

const char* kUnits =
    "hyperbolic units; modulus convention log(outer/inner); T = mod(domain)/(2 pi), b = mod(target)/(2 pi)";

// ---- output destination --------------------------------------------------

struct Output {
  std::string format;
  std::string path;
};

std::filesystem::path resolve(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("EXTREMAL_OUTPUT_DIR"); dir && *dir) {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

template <class Fn>
void with_stream(const Output& o, std::ostream& out, Fn fn) {
  if (o.path.empty()) {
    fn(out);
    return;
  }
  const auto p = resolve(o.path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream f(p, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + p.string());
  fn(f);
  if (!f) throw UsageError("failed writing " + p.string());
}

// ---- commands ------------------------------------------------------------

struct Params {
  double ell = std::nan("");
  std::optional<double> delta;
  std::optional<double> mod_target;
  std::optional<double> mod_ratio;
  std::optional<double> mod_a1;
  double p = 1.0;
  double m = std::nan("");
  int g = 2;
  double a = 1.0;
  bool approx = false;
  int samples = 0;
  std::string kind;
  std::string suite = "all";
  std::uint64_t seed = 42;
  double tol = 1e-10;
  std::string name;
  double ell_min = 0.01;
  double ell_max = 1.0;
  int n = 50;
  bool log_grid = false;
  int threads = 0;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

double need_ell(const Params& ps) {
  require(std::isfinite(ps.ell) && ps.ell > 0.0, "--ell must be a positive number");
  return ps.ell;
}

Collar domain_collar(const Params& ps, double ell) {
  if (!ps.delta) return maximal_collar(ell);
  require(*ps.delta > 0.0, "--delta must be positive");
  return Collar::of_radius(ell, *ps.delta);
}

double target_modulus(const Params& ps, const Collar& collar) {
  require(!(ps.mod_target && ps.mod_ratio), "give --mod-target or --mod-ratio, not both");
  if (ps.mod_target) {
    require(*ps.mod_target > 0.0, "--mod-target must be positive");
    return *ps.mod_target;
  }
  const double r = ps.mod_ratio.value_or(1.0);
  require(r > 0.0, "--mod-ratio must be positive");
  return r * collar.modulus();
}

Record cmd_collar(const Params& ps) {
  const double ell = need_ell(ps);
  const Collar c = maximal_collar(ell);
  const double lower = 4.0 * kPi / ell - kPi * ell / 2.0;
  Record r;
  r.comments = {"maximal collar about a geodesic of length ell", kUnits};
  r.set("ell", ell);
  r.set("delta", c.delta);
  r.set("theta", c.theta);
  r.set("area", c.area());
  r.set("modulus", c.modulus());
  r.set("modulus_sech_form", 4.0 * kPi / (ell * std::cosh(0.5 * ell)));
  r.set("modulus_lower_bound", lower);
  r.set("modulus_lower_bound_pass", c.modulus() >= lower);
  return r;
}

Table ux_samples(const std::vector<double>& x, const std::vector<double>& ux, int samples) {
  Table t;
  t.name = "samples";
  t.columns = {"x", "u_x"};
  const std::size_t n = x.size();
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(samples), n);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = k == 1 ? n / 2 : i * (n - 1) / (k - 1);
    t.add_row({x[j], ux[j]});
  }
  return t;
}

Record cmd_solve(const Params& ps) {
  const double ell = need_ell(ps);
  require(ps.p >= 1.0, "--p must be >= 1");
  require(ps.samples >= 0, "--samples must be non-negative");
  const Collar collar = domain_collar(ps, ell);
  const double m_omega = target_modulus(ps, collar);
  const auto pr = GrotzschProblem::from_collar(collar, m_omega, ps.p);

  Record r;
  r.comments = {"extremal radial stretch of a collar onto a ring", kUnits};
  r.set("ell", ell);
  r.set("delta", collar.delta);
  r.set("theta", pr.theta);
  r.set("T", pr.T);
  r.set("b", pr.b);
  r.set("mod_domain", pr.domain_modulus());
  r.set("mod_target", pr.target_modulus());
  r.set("p", ps.p);
  r.set("collar_area", collar.area());

  if (ps.approx) {
    require(ps.p > 1.0, "--approx needs --p > 1");
    const auto ap = solve_small_ell(pr);
    const auto ex = solve_general(pr);
    const auto cf = small_ell_closed_form(pr);
    r.set("mode", std::string("small_ell_approx"));
    r.set("approx_alpha", ap.alpha);
    r.set("approx_energy", ap.energy);
    r.set("approx_lower_form_energy", ap.lower_form_energy);
    r.set("unit_target_energy", cf.unit_target_energy);
    r.set("exact_alpha_ell", ex.alpha);
    r.set("exact_energy", ex.energy);
    r.set("ratio", ap.energy / ex.energy);
    r.set("max_ux", ap.max_ux());
    std::string w;
    for (const auto& s : ap.warnings) w += (w.empty() ? "" : "; ") + s;
    r.set("warnings", w);
    if (ps.samples > 0) r.table = ux_samples(ap.grid.x, ap.ux, ps.samples);
    return r;
  }
  if (ps.p == 1.0) {
    const auto s = solve_alpha_p1(pr);
    r.set("mode", std::string("closed_form"));
    r.set("alpha_ell", s.alpha);
    r.set("t", s.t);
    r.set("energy", s.energy);
    r.set("boundary_residual", s.residual);
    r.set("iterations", static_cast<double>(s.iterations));
    if (ps.samples > 0) {
      Table t;
      t.name = "samples";
      t.columns = {"x", "u", "u_x"};
      for (int i = 0; i < ps.samples; ++i) {
        const double x = ps.samples == 1 ? 0.5 * pr.T : pr.T * i / (ps.samples - 1);
        t.add_row({x, s.u(x), s.ux(x)});
      }
      r.table = std::move(t);
    }
    return r;
  }
  const auto s = solve_general(pr);
  r.set("mode", std::string("exact_bvp"));
  r.set("alpha_ell", s.alpha);
  r.set("energy", s.energy);
  r.set("lower_form_energy", s.lower_form_energy);
  r.set("boundary_residual", s.boundary_residual);
  r.set("max_pointwise_residual", s.max_pointwise_residual);
  r.set("iterations", static_cast<double>(s.iterations));
  r.set("min_ux", s.min_ux());
  r.set("max_ux", s.max_ux());
  if (ps.samples > 0) r.table = ux_samples(s.grid.x, s.ux, ps.samples);
  return r;
}

BoundReport evaluate_bound(const std::string& kind, const Params& ps, double ell) {
  if (kind == "collar") {
    const Collar c = domain_collar(ps, ell);
    return collar_energy_bound(ell, c.delta, target_modulus(ps, c));
  }
  if (kind == "domain-geodesic") {
    require(std::isfinite(ps.m) && ps.m > 0.0, "--m must be a positive number");
    return domain_geodesic_bound(ell, ps.m, ps.g);
  }
  if (kind == "lp-collar") {
    require(std::isfinite(ps.m) && ps.m > 0.0, "--m must be a positive number");
    require(ps.p >= 1.0, "--p must be >= 1");
    return lp_collar_bound(ell, ps.m, ps.g, ps.p);
  }
  if (kind == "stretch-upper") {
    const Collar c = maximal_collar(ell);
    const double mod_a1 = ps.mod_a1.value_or(c.modulus());
    require(mod_a1 > 0.0, "--mod-a1 must be positive");
    return stretch_upper_bound(ell, mod_a1, target_modulus(ps, c));
  }
  if (kind == "target-geodesic") {
    require(ps.a > 0.0, "--a must be positive");
    return target_geodesic_bound(ell, ps.a);
  }
  throw UsageError("unknown bound kind '" + kind + "'");
}

Record cmd_bound(const Params& ps) {
  const double ell = need_ell(ps);
  Record r;
  r.comments = {"bound report for --kind " + ps.kind, kUnits};
  add_report(r, evaluate_bound(ps.kind, ps, ell));
  return r;
}

Table cmd_sweep(const Params& ps) {
  require(ps.ell_min > 0.0 && ps.ell_max >= ps.ell_min, "need 0 < --ell-min <= --ell-max");
  require(ps.n >= 1, "--n must be >= 1");
  const std::vector<std::string> kinds = {"collar", "domain-geodesic", "lp-collar", "stretch-upper",
                                          "target-geodesic", "solve-p"};
  require(std::find(kinds.begin(), kinds.end(), ps.kind) != kinds.end(),
          "unknown sweep kind '" + ps.kind + "'");
  std::vector<double> ells(ps.n);
  for (int i = 0; i < ps.n; ++i) {
    const double f = ps.n == 1 ? 0.0 : static_cast<double>(i) / (ps.n - 1);
    ells[i] = ps.log_grid ? std::exp(std::log(ps.ell_min) + f * std::log(ps.ell_max / ps.ell_min))
                          : ps.ell_min + f * (ps.ell_max - ps.ell_min);
  }
  if (ps.kind == "solve-p") require(ps.p >= 1.0, "--p must be >= 1");
  // validate the shared parameters once, on the calling thread
  if (ps.kind != "solve-p") (void)evaluate_bound(ps.kind, ps, ells.front());

  std::vector<std::vector<double>> rows(ells.size());
  std::vector<std::exception_ptr> errors(ells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < ells.size(); i = next++) {
      try {
        const double ell = ells[i];
        if (ps.kind == "solve-p") {
          const Collar c = domain_collar(ps, ell);
          const auto s = solve_general(GrotzschProblem::from_collar(c, target_modulus(ps, c), ps.p));
          rows[i] = {ell, s.energy, 1.0, s.alpha};
        } else {
          const auto b = evaluate_bound(ps.kind, ps, ell);
          rows[i] = {ell, b.value, b.applicable ? 1.0 : 0.0};
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned nt = ps.threads > 0 ? static_cast<unsigned>(ps.threads) : std::thread::hardware_concurrency();
  nt = std::max(1u, std::min<unsigned>(nt, static_cast<unsigned>(ells.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < nt; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Table t;
  t.name = "sweep";
  t.comments = {"sweep of " + ps.kind + " over ell (" + (ps.log_grid ? "log" : "linear") + " grid)", kUnits};
  t.columns = {"ell", "value", "applicable"};
  if (ps.kind == "solve-p") {
    t.columns = {"ell", "energy", "converged", "alpha_ell"};
  }
  for (auto& r : rows) t.add_row(std::move(r));
  return t;
}

Record cmd_intro() {
  const IntroReport ir = intro_example_check();
  Record r;
  r.comments = {"punctured disc onto the round ring 1 < |w| < golden ratio",
                "hyperbolic energy H(eps) integrates over eps < |z| < 1/2 against |z|^-2 log^-2(1/|z|)"};
  r.set("euclidean_quadrature", ir.euclidean_quadrature);
  r.set("euclidean_closed_form", ir.euclidean_closed_form);
  r.set("euclidean_error", std::abs(ir.euclidean_quadrature - ir.euclidean_closed_form));
  r.set("euclidean_pass", ir.euclidean_ok(1e-8));
  r.set("k_times_r_at_1e-6", ir.k_times_r);
  r.set("coth_bound_sigma_2pi_log_golden", ir.coth_golden);
  r.set("coth_bound_sigma_log_golden", ir.coth_log_modulus);
  r.set("divergence_increasing", ir.divergence_increasing());
  r.set("divergence_tenfold_per_decade", ir.divergence_tenfold());
  Table t;
  t.name = "divergence";
  t.columns = {"eps", "hyperbolic_energy", "ratio_to_previous", "eps_log2_energy"};
  for (std::size_t i = 0; i < ir.cutoffs.size(); ++i) {
    t.add_row({ir.cutoffs[i], ir.hyperbolic_energy[i], i ? ir.decade_ratios[i - 1] : 0.0,
               ir.scaled_energy[i]});
  }
  r.table = std::move(t);
  return r;
}

void emit_verify(std::ostream& out, const Params& ps, const std::vector<CheckResult>& res,
                 const std::string& format) {
  bool all = true;
  for (const auto& c : res) all = all && c.passed;
  if (format == "json") {
    json j;
    j["suite"] = ps.suite;
    j["seed"] = ps.seed;
    j["tol"] = ps.tol;
    j["passed"] = all;
    json failed = json::array();
    json checks = json::array();
    for (const auto& c : res) {
      if (!c.passed) failed.push_back(c.suite + "." + c.name);
      json e;
      e["suite"] = c.suite;
      e["name"] = c.name;
      e["passed"] = c.passed;
      e["measured"] = std::isfinite(c.measured) ? json(c.measured) : json(nullptr);
      e["tolerance"] = c.tolerance;
      e["detail"] = c.detail;
      checks.push_back(std::move(e));
    }
    j["failed"] = std::move(failed);
    j["checks"] = std::move(checks);
    out << j.dump(2) << '\n';
    return;
  }
  out << "# verify suite=" << ps.suite << " seed=" << ps.seed << " tol=" << format_double(ps.tol)
      << " passed=" << (all ? "true" : "false") << '\n';
  out << "suite,name,passed,measured,tolerance,detail\n";
  for (const auto& c : res) {
    out << c.suite << ',' << c.name << ',' << (c.passed ? "true" : "false") << ','
        << format_double(c.measured) << ',' << format_double(c.tolerance) << ','
        << csv_cell(std::string(c.detail)) << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal distortion energies of hyperbolic collars: solvers, bounds, verification", "extremal"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "extremal 1.0");

  Params ps;
  Output o;
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--out", o.path, "Output file (relative to $EXTREMAL_OUTPUT_DIR if set)");
  };
  auto positive = CLI::PositiveNumber;

  auto* collar = app.add_subcommand("collar", "Maximal collar about a geodesic of length ell");
  collar->add_option("--ell", ps.ell, "Geodesic length")->required()->check(positive);
  common(collar);

  auto* solve = app.add_subcommand("solve", "Extremal stretch of a collar onto a ring");
  solve->add_option("--ell", ps.ell, "Geodesic length")->required()->check(positive);
  solve->add_option("--delta", ps.delta, "Collar radius (default: maximal collar)");
  solve->add_option("--mod-target", ps.mod_target, "Target ring modulus log(outer/inner)");
  solve->add_option("--mod-ratio", ps.mod_ratio, "Target modulus as a multiple of the collar modulus");
  solve->add_option("--p", ps.p, "Exponent p >= 1");
  solve->add_flag("--approx", ps.approx, "Small-ell approximation compared with the exact solver (p > 1)");
  solve->add_option("--samples", ps.samples, "Number of u_x samples to emit");
  common(solve);

  auto* bound = app.add_subcommand("bound", "Evaluate a bound with its hypotheses and sub-terms");
  bound->add_option("--kind", ps.kind, "Bound")
      ->required()
      ->check(CLI::IsMember({"collar", "domain-geodesic", "lp-collar", "stretch-upper", "target-geodesic"}));
  bound->add_option("--ell", ps.ell, "Geodesic length")->required()->check(positive);
  bound->add_option("--delta", ps.delta, "Collar radius");
  bound->add_option("--mod-target", ps.mod_target, "Target ring modulus");
  bound->add_option("--mod-ratio", ps.mod_ratio, "Target modulus / collar modulus");
  bound->add_option("--mod-a1", ps.mod_a1, "Domain collar modulus (stretch-upper)");
  bound->add_option("--m", ps.m, "Target annulus width m = max modulus / (2 pi)");
  bound->add_option("--g", ps.g, "Genus")->check(CLI::Range(2, 1000000));
  bound->add_option("--p", ps.p, "Exponent");
  bound->add_option("--a", ps.a, "Constant of the target-geodesic bound");
  common(bound);

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", ps.suite, "Suite")->check(CLI::IsMember(verify_suites()));
  verify->add_option("--seed", ps.seed, "Master seed");
  verify->add_option("--tol", ps.tol, "Quadrature comparison tolerance")->check(positive);
  common(verify);

  auto* sweep = app.add_subcommand("sweep", "Evaluate a bound or solver over a grid in ell");
  sweep->add_option("--kind", ps.kind, "collar, domain-geodesic, lp-collar, stretch-upper, target-geodesic, solve-p")
      ->required();
  sweep->add_option("--ell-min", ps.ell_min, "Smallest ell");
  sweep->add_option("--ell-max", ps.ell_max, "Largest ell");
  sweep->add_option("--n", ps.n, "Grid points");
  sweep->add_flag("--log", ps.log_grid, "Logarithmic grid");
  sweep->add_option("--threads", ps.threads, "Worker threads (0: hardware)");
  sweep->add_option("--delta", ps.delta, "Collar radius");
  sweep->add_option("--mod-target", ps.mod_target, "Target ring modulus");
  sweep->add_option("--mod-ratio", ps.mod_ratio, "Target modulus / collar modulus");
  sweep->add_option("--mod-a1", ps.mod_a1, "Domain collar modulus");
  sweep->add_option("--m", ps.m, "Target annulus width");
  sweep->add_option("--g", ps.g, "Genus")->check(CLI::Range(2, 1000000));
  sweep->add_option("--p", ps.p, "Exponent");
  sweep->add_option("--a", ps.a, "Constant of the target-geodesic bound");
  common(sweep);

  auto* figure = app.add_subcommand("figure", "Emit the data behind a figure");
  figure->add_option("--name", ps.name, "Figure")->required()->check(CLI::IsMember(figure_names()));
  common(figure);

  auto* intro = app.add_subcommand("intro-example", "Punctured-disc example: energies and divergence");
  common(intro);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (e.get_name() == "CallForVersion" ? std::string(e.what()) + "\n" : app.help());
      return exit_ok;
    }
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*collar) {
      const Record r = cmd_collar(ps);
      with_stream(o, out, [&](std::ostream& s) { emit_record(s, r, o.format.empty() ? "json" : o.format); });
    } else if (*solve) {
      const Record r = cmd_solve(ps);
      with_stream(o, out, [&](std::ostream& s) { emit_record(s, r, o.format.empty() ? "json" : o.format); });
    } else if (*bound) {
      const Record r = cmd_bound(ps);
      with_stream(o, out, [&](std::ostream& s) { emit_record(s, r, o.format.empty() ? "json" : o.format); });
    } else if (*verify) {
      const auto res = run_verify({ps.suite, ps.seed, ps.tol});
      with_stream(o, out, [&](std::ostream& s) { emit_verify(s, ps, res, o.format.empty() ? "json" : o.format); });
      bool all = true;
      for (const auto& c : res) {
        if (!c.passed) {
          err << "FAILED " << c.suite << '.' << c.name << ": " << c.detail << '\n';
          all = false;
        }
      }
      return all ? exit_ok : exit_verification_failed;
    } else if (*sweep) {
      const Table t = cmd_sweep(ps);
      with_stream(o, out, [&](std::ostream& s) { emit_table(s, t, o.format.empty() ? "csv" : o.format); });
    } else if (*figure) {
      const Table t = figure_table(ps.name);
      with_stream(o, out, [&](std::ostream& s) { emit_table(s, t, o.format.empty() ? "csv" : o.format); });
    } else if (*intro) {
      const Record r = cmd_intro();
      with_stream(o, out, [&](std::ostream& s) { emit_record(s, r, o.format.empty() ? "json" : o.format); });
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return exit_usage;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << '\n';
    return exit_solver_failure;
  } catch (const QuadratureError& e) {
    err << "solver failure: " << e.what() << " (partial " << format_double(e.partial().value) << ")\n";
    return exit_solver_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_solver_failure;
  }
  return exit_ok;
}

}  // namespace extremal
