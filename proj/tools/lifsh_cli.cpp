// lifsh: evaluate functions, tabulate them on grids, run verification suites
// and compare closed forms against the quadrature oracle.
//
// Exit codes: 0 ok, 1 usage, 2 no convergence, 3 domain error, 4 verification failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "registry.hpp"

namespace {

using lifsh::Complex;
using lifsh::cli::Params;
using lifsh::cli::UsageError;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kNoConvergence = 2, kDomain = 3, kVerifyFailed = 4 };

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string fn;
  std::string suite;
  std::string format = "json";
  std::string out;
  std::optional<double> tol;
  int samples = 0;
  // Grid-capable axes keep their text; the rest are plain numbers.
  std::map<std::string, std::string> axes;
  std::map<std::string, double> scalars;
};

const char* const kGridAxes[] = {"m", "p", "q", "k1", "k2"};
const char* const kScalarKeys[] = {"a", "b", "bp", "c", "cp", "d", "zre", "zim", "xre", "xim", "yre", "yim"};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Write the whole document or nothing: stdout, or a temp file renamed into place.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string());
    f << text;
    f.flush();
    if (!f) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

const lifsh::cli::FunctionSpec& lookup(const std::string& fn) {
  const auto& reg = lifsh::cli::registry();
  const auto it = reg.find(fn);
  if (it == reg.end()) throw UsageError("unknown function '" + fn + "'");
  return it->second;
}

// One parameter set per grid point, in row-major order over the grid axes
// (in the fixed axis order m, p, q, k1, k2).
struct Grid {
  std::vector<std::string> axes;
  std::vector<Params> points;
};

Grid expand(const Options& opt, const std::vector<std::string>& needed, std::size_t max_axes) {
  Params base = opt.scalars;
  // Imaginary parts default to zero.
  for (const char* key : {"zim", "xim", "yim"}) base.emplace(key, 0.0);
  std::vector<std::pair<std::string, std::vector<double>>> varying;
  for (const char* key : kGridAxes) {
    const auto it = opt.axes.find(key);
    if (it == opt.axes.end()) continue;
    const bool is_grid = it->second.find(':') != std::string::npos;
    auto values = lifsh::cli::parse_grid(it->second);
    if (is_grid) {
      varying.emplace_back(key, std::move(values));
    } else {
      base[key] = values.front();
    }
  }
  if (varying.size() > max_axes) throw UsageError("too many grid axes for this command");
  for (const auto& key : needed) {
    const bool on_grid = std::any_of(varying.begin(), varying.end(), [&](const auto& v) { return v.first == key; });
    if (!on_grid && !base.count(key)) throw UsageError("missing parameter --" + key);
  }
  Grid g;
  for (const auto& v : varying) g.axes.push_back(v.first);
  std::vector<Params> points{base};
  for (const auto& [key, values] : varying) {
    std::vector<Params> next;
    for (const auto& pt : points) {
      for (double v : values) {
        Params q = pt;
        q[key] = v;
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  g.points = std::move(points);
  return g;
}

// Only the keys the function reads.
Params restrict_to(const Params& p, const std::vector<std::string>& keys) {
  Params out;
  for (const auto& k : keys) {
    if (const auto it = p.find(k); it != p.end()) out.insert(*it);
  }
  return out;
}

json params_json(const Params& p) {
  json j = json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

int cmd_eval(const Options& opt) {
  const auto& spec = lookup(opt.fn);
  const Grid g = expand(opt, spec.params, 0);
  const Params& p = g.points.front();
  const double tol = opt.tol.value_or(lifsh::kDefaultTol);
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = spec.eval(p, tol);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  if (opt.format == "csv") {
    os << "fn,value,value_im,abs_err,route\n"
       << opt.fn << ',' << num(r.value.real()) << ',' << num(r.value.imag()) << ',' << num(r.abs_err) << ',' << r.route
       << '\n';
  } else {
    json j;
    j["schema"] = "1";
    j["command"] = "eval";
    j["fn"] = opt.fn;
    j["params"] = params_json(restrict_to(p, spec.params));
    j["value"] = r.value.real();
    j["value_im"] = r.value.imag();
    j["abs_err"] = r.abs_err;
    j["route"] = r.route;
    os << j.dump(2) << '\n';
  }
  emit(os.str(), opt.out);
  // Timing goes to stderr so that the result document stays reproducible.
  std::cerr << "wall_time_s " << num(wall) << '\n';
  return kOk;
}

int cmd_table(const Options& opt) {
  const auto& spec = lookup(opt.fn);
  std::size_t grid_axes = 0;
  for (const auto& [k, v] : opt.axes) grid_axes += v.find(':') != std::string::npos;
  if (grid_axes != 1) throw UsageError("table needs exactly one grid axis (start:stop:step)");
  const Grid g = expand(opt, spec.params, 1);
  const std::string& axis = g.axes.front();
  const double tol = opt.tol.value_or(lifsh::kDefaultTol);
  std::vector<lifsh::cli::Evaluation> rows;
  rows.reserve(g.points.size());
  for (const auto& p : g.points) rows.push_back(spec.eval(p, tol));

  std::ostringstream os;
  if (opt.format == "csv") {
    os << axis << ",value,abs_err\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << num(g.points[i].at(axis)) << ',' << num(rows[i].value.real()) << ',' << num(rows[i].abs_err) << '\n';
    }
  } else {
    json j;
    j["schema"] = "1";
    j["command"] = "table";
    j["fn"] = opt.fn;
    j["axis"] = axis;
    j["columns"] = json::array({axis, "value", "abs_err"});
    json data = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      data.push_back(json::array({g.points[i].at(axis), rows[i].value.real(), rows[i].abs_err}));
    }
    j["rows"] = std::move(data);
    os << j.dump(2) << '\n';
  }
  emit(os.str(), opt.out);
  return kOk;
}

const std::map<std::string, double>& suite_default_tol() {
  static const std::map<std::string, double> t = {
      {"inner-integrals", 1e-8}, {"main-result", 1e-8}, {"special-cases", 1e-8}, {"complex-expansion", 1e-8},
      {"horn-bridges", 1e-9},    {"f1-transform", 1e-8}, {"oracle", 1e-6},       {"properties", 1e-9},
  };
  return t;
}

int cmd_verify(const Options& opt) {
  const auto& suites = lifsh::verify::suites();
  const auto it = suites.find(opt.suite);
  if (it == suites.end()) throw UsageError("unknown suite '" + opt.suite + "'");
  const double tol = opt.tol.value_or(suite_default_tol().at(opt.suite));
  const auto reports = it->second(tol);
  std::size_t failed = 0;
  std::ostringstream os;
  if (opt.format == "csv") {
    os << "name,lhs_re,lhs_im,rhs_re,rhs_im,abs_dev,rel_dev,tol,pass,lhs_route,rhs_route\n";
    for (const auto& r : reports) {
      failed += !r.pass;
      os << '"' << r.name << "\"," << num(r.lhs.real()) << ',' << num(r.lhs.imag()) << ',' << num(r.rhs.real()) << ','
         << num(r.rhs.imag()) << ',' << num(r.abs_dev) << ',' << num(r.rel_dev) << ',' << num(r.tol) << ','
         << (r.pass ? "true" : "false") << ',' << r.route_labels.first << ',' << r.route_labels.second << '\n';
    }
  } else {
    json checks = json::array();
    for (const auto& r : reports) {
      failed += !r.pass;
      json c;
      c["name"] = r.name;
      c["lhs"] = json::array({r.lhs.real(), r.lhs.imag()});
      c["rhs"] = json::array({r.rhs.real(), r.rhs.imag()});
      c["abs_dev"] = std::isfinite(r.abs_dev) ? json(r.abs_dev) : json(nullptr);
      c["rel_dev"] = std::isfinite(r.rel_dev) ? json(r.rel_dev) : json(nullptr);
      c["tol"] = r.tol;
      c["pass"] = r.pass;
      c["routes"] = json::array({r.route_labels.first, r.route_labels.second});
      if (!r.note.empty()) c["note"] = r.note;
      checks.push_back(std::move(c));
    }
    json j;
    j["schema"] = "1";
    j["command"] = "verify";
    j["suite"] = opt.suite;
    j["tol"] = tol;
    j["total"] = reports.size();
    j["failed"] = failed;
    j["checks"] = std::move(checks);
    os << j.dump(2) << '\n';
  }
  emit(os.str(), opt.out);
  if (failed > 0) {
    for (const auto& r : reports) {
      if (!r.pass) std::cerr << "FAILED: " << r.name << (r.note.empty() ? "" : " (" + r.note + ")") << '\n';
    }
    throw VerificationFailed(std::to_string(failed) + " of " + std::to_string(reports.size()) + " checks failed");
  }
  return kOk;
}

// Closed form against quadrature at each grid point.
int cmd_oracle_compare(Options opt) {
  const auto counterpart = lifsh::cli::oracle_counterpart(opt.fn);
  if (!counterpart) throw UsageError("function '" + opt.fn + "' has no oracle counterpart");
  const auto& closed_spec = lookup(opt.fn);
  const auto& oracle_spec = lookup(*counterpart);
  if (opt.fn == "inner_j1" || opt.fn == "inner_j2" || opt.fn == "inner_j3") {
    opt.scalars["d"] = opt.fn.back() - '0';
  }
  if (opt.fn == "i21_closed" || opt.fn == "i31_closed") {
    opt.scalars["d"] = opt.fn == "i21_closed" ? 2.0 : 3.0;
    if (!opt.axes.count("p")) opt.axes["p"] = "1";
  }
  if (opt.fn == "i3m") opt.scalars["d"] = 3.0;

  std::vector<std::string> needed = closed_spec.params;
  for (const auto& k : oracle_spec.params) {
    if (std::find(needed.begin(), needed.end(), k) == needed.end()) needed.push_back(k);
  }
  std::vector<Params> points;
  const bool takes_masses = std::find(needed.begin(), needed.end(), "k1") != needed.end();
  if (opt.samples > 0 && !takes_masses) throw UsageError("--samples applies to functions with masses only");
  const bool random_masses = opt.samples > 0 && !opt.axes.count("k1") && !opt.axes.count("k2");
  if (random_masses) {
    std::vector<std::string> rest;
    for (const auto& k : needed) {
      if (k != "k1" && k != "k2") rest.push_back(k);
    }
    const Grid g = expand(opt, rest, 5);
    std::mt19937_64 rng(20240101);
    std::uniform_real_distribution<double> mass(0.1, 2.5);
    for (const auto& base : g.points) {
      for (int i = 0; i < opt.samples; ++i) {
        Params p = base;
        p["k1"] = mass(rng);
        p["k2"] = mass(rng);
        points.push_back(std::move(p));
      }
    }
  } else {
    points = expand(opt, needed, 5).points;
  }
  if (opt.fn == "i3m") {
    for (const auto& p : points) {
      if (p.at("m") != 1.0) throw lifsh::DomainError("oracle-compare i3m: the quadrature oracle covers m = 1 only");
    }
  }

  const double tol = opt.tol.value_or(1e-6);
  std::size_t flagged = 0;
  json rows = json::array();
  std::ostringstream csv;
  csv << "point,closed_form,oracle,rel_dev,oracle_err,flag\n";
  for (const auto& p : points) {
    const auto c = closed_spec.eval(p, lifsh::kDefaultTol);
    const auto o = oracle_spec.eval(p, lifsh::kDefaultTol);
    const double dev = std::abs(c.value - o.value);
    const double scale = std::max(std::abs(c.value), std::abs(o.value));
    const double rel = scale > 0.0 ? dev / scale : 0.0;
    const bool flag = !(rel <= tol || dev <= o.abs_err + c.abs_err);
    flagged += flag;
    std::string label;
    const Params shown = restrict_to(p, needed);
    for (const auto& [k, v] : shown) label += (label.empty() ? "" : " ") + k + "=" + num(v);
    csv << '"' << label << "\"," << num(c.value.real()) << ',' << num(o.value.real()) << ',' << num(rel) << ','
        << num(o.abs_err) << ',' << (flag ? "true" : "false") << '\n';
    json r;
    r["point"] = params_json(shown);
    r["closed_form"] = c.value.real();
    r["oracle"] = o.value.real();
    r["rel_dev"] = rel;
    r["oracle_err"] = o.abs_err;
    r["flag"] = flag;
    rows.push_back(std::move(r));
  }
  if (opt.format == "csv") {
    emit(csv.str(), opt.out);
  } else {
    json j;
    j["schema"] = "1";
    j["command"] = "oracle-compare";
    j["fn"] = opt.fn;
    j["oracle"] = *counterpart;
    j["tol"] = tol;
    j["flagged"] = flagged;
    j["rows"] = std::move(rows);
    emit(j.dump(2) + "\n", opt.out);
  }
  if (flagged > 0) throw VerificationFailed(std::to_string(flagged) + " points exceed the combined bound");
  return kOk;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--fn", opt.fn, "function id");
  for (const char* key : kGridAxes) {
    cmd->add_option(std::string("--") + key, opt.axes[key], std::string(key) + " value or start:stop:step");
  }
  for (const char* key : kScalarKeys) {
    cmd->add_option(std::string("--") + key, opt.scalars[key], key);
  }
  cmd->add_option("--tol", opt.tol, "tolerance");
  cmd->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opt.out, "output path (written atomically)");
}

// Drop the option slots CLI11 left untouched.
void prune(CLI::App* cmd, Options& opt) {
  for (const char* key : kGridAxes) {
    if (cmd->count(std::string("--") + key) == 0) opt.axes.erase(key);
  }
  for (const char* key : kScalarKeys) {
    if (cmd->count(std::string("--") + key) == 0) opt.scalars.erase(key);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lifsh: anisotropic Feynman integrals and hypergeometric functions"};
  app.require_subcommand(1);
  Options opt;
  auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
  auto* table = app.add_subcommand("table", "tabulate a function along one grid axis");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  auto* oracle = app.add_subcommand("oracle-compare", "compare a closed form with quadrature");
  for (auto* cmd : {eval, table, oracle}) add_common(cmd, opt);
  verify->add_option("--suite", opt.suite, "suite name")->required();
  verify->add_option("--tol", opt.tol, "tolerance");
  verify->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", opt.out, "output path (written atomically)");
  oracle->add_option("--samples", opt.samples, "random mass pairs per point when --k1/--k2 are absent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(opt);
    CLI::App* cmd = *eval ? eval : *table ? table : oracle;
    prune(cmd, opt);
    if (opt.fn.empty()) throw UsageError("--fn is required");
    if (*eval) return cmd_eval(opt);
    if (*table) return cmd_table(opt);
    return cmd_oracle_compare(opt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const lifsh::NoConvergence& e) {
    std::cerr << "no convergence: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const lifsh::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNoConvergence;
  }
}
