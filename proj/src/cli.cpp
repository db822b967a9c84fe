#include "eqa/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "eqa/error.hpp"
#include "eqa/mode_expansion.hpp"
#include "eqa/registry.hpp"
#include "eqa/report.hpp"

namespace eqa {

namespace {

Args parse_assignments(const std::vector<std::string>& items) {
  Args args;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorKind::ConfigError, "args", "expected key=value, got '" + item + "'");
    }
    args.set(item.substr(0, eq), item.substr(eq + 1));
  }
  return args;
}

// Writes through a sibling temporary so a failed run never leaves a partial file.
void write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw Error(ErrorKind::ConfigError, "output", "cannot open " + tmp);
    f << content;
    if (!f) throw Error(ErrorKind::ConfigError, "output", "cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::ConfigError, "config", "cannot open " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ConfigError, "config", std::string("parse error: ") + e.what());
  }
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string summary(const CheckReport& r) {
  std::ostringstream s;
  s << "suite " << r.suite << ": " << (r.passed ? "PASSED" : "FAILED") << " (max_residual "
    << std::setprecision(3) << r.max_residual << ", tolerance " << r.tolerance << ", "
    << r.samples.size() << " samples)\n";
  for (const auto& c : r.checks) {
    s << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << ": " << c.value;
    if (c.bound == BoundKind::Below) s << " < " << c.tolerance;
    if (c.bound == BoundKind::Above) s << " > " << c.tolerance;
    if (c.bound == BoundKind::Within)
      s << " (min " << c.value_min << ") in [" << c.lo << ", " << c.hi << "]";
    if (c.bound == BoundKind::Report) s << " (reported)";
    s << "\n";
  }
  return s.str();
}

struct CheckOptions {
  std::string suite;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<double> eps;
  std::optional<double> tol;
  std::optional<int> count;
  std::string out;
};

int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  Json j;
  if (!o.config.empty()) {
    j = read_json_file(o.config);
    if (j.is_object() && j.contains("parameters")) j = j.at("parameters");
  } else {
    j = Json::object();
  }
  if (!o.suite.empty()) j["suite"] = o.suite;
  if (o.seed) j["seed"] = *o.seed;
  if (o.count) j["count"] = *o.count;
  if (o.tol) j["tolerance"] = *o.tol;
  if (o.eps) {
    if (!j.contains("policy")) j["policy"] = Json::object();
    if (!j.at("policy").is_object())
      throw Error(ErrorKind::ConfigError, "config.policy", "expected an object");
    j["policy"]["eps"] = *o.eps;
  }
  RunConfig cfg = run_config_from_json(j);
  if (!o.out.empty()) cfg.out = o.out;

  const CheckReport report = run_suite(cfg);
  const std::string text = report.to_json().dump(2) + "\n";
  if (!cfg.out.empty()) {
    write_file(cfg.out, text);
    out << summary(report);
  } else {
    out << text;
    err << summary(report);
  }
  return report.passed ? kExitOk : kExitCheckFailed;
}

int cmd_eval(const std::string& function, const std::vector<std::string>& items,
             const TruncationPolicy& policy, const std::string& out_path, std::ostream& out) {
  const Json result = evaluate_function(function, parse_assignments(items), policy);
  const std::string text = result.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

int cmd_modes(int k, double q, int s_max, const TruncationPolicy& policy,
              const std::string& out_path, std::ostream& out) {
  const Prop2Report rep = verify_prop2(q, k, s_max, policy);
  std::ostringstream t;
  t << "s\tnumeric_re\tnumeric_im\tclosed_re\tclosed_im\tresidual\n";
  for (const auto& row : rep.rows) {
    t << row.s << '\t' << fmt(row.numeric.real()) << '\t' << fmt(row.numeric.imag()) << '\t'
      << fmt(row.closed_form.real()) << '\t' << fmt(row.closed_form.imag()) << '\t'
      << fmt(row.residual) << '\n';
  }
  if (out_path.empty()) {
    out << t.str();
  } else {
    write_file(out_path, t.str());
    out << "k=" << k << " q=" << q << " sign=" << rep.sign << " max_residual=" << rep.max_residual
        << " rows=" << rep.rows.size() << "\n";
  }
  return kExitOk;
}

struct PlotOptions {
  std::string function;
  std::vector<std::string> params;
  std::string var = "x";
  std::string real;
  std::string arc;
  std::string out;
};

std::vector<double> split_colon(const std::string& s, std::size_t expected, const char* what) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ':')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ConfigError, what, "cannot read '" + s + "'");
    }
  }
  if (v.size() != expected) throw Error(ErrorKind::ConfigError, what, "malformed '" + s + "'");
  return v;
}

int cmd_plotdata(const PlotOptions& o, const TruncationPolicy& policy, std::ostream& out) {
  const FunctionEntry& entry = find_function(o.function);
  if (!entry.scalar) {
    throw Error(ErrorKind::ConfigError, "plotdata.function", o.function + " is not scalar-valued");
  }
  if (o.real.empty() == o.arc.empty()) {
    throw Error(ErrorKind::ConfigError, "plotdata.axis", "give exactly one of --real or --arc");
  }
  policy.validate();
  Args args = parse_assignments(o.params);

  std::vector<std::pair<double, Complex>> points;
  if (!o.real.empty()) {
    const auto v = split_colon(o.real, 3, "plotdata.real");
    const int n = static_cast<int>(v[2]);
    if (n < 2) throw Error(ErrorKind::ConfigError, "plotdata.real", "need n >= 2");
    for (int i = 0; i < n; ++i) {
      const double t = v[0] + (v[1] - v[0]) * i / (n - 1);
      points.emplace_back(t, Complex{t, 0.0});
    }
  } else {
    const auto v = split_colon(o.arc, 2, "plotdata.arc");
    const int n = static_cast<int>(v[1]);
    if (n < 1 || v[0] <= 0) throw Error(ErrorKind::ConfigError, "plotdata.arc", "need r > 0, n >= 1");
    for (int i = 0; i < n; ++i) {
      const double t = -kPi + 2.0 * kPi * i / n;
      points.emplace_back(t, std::polar(v[0], t));
    }
  }

  std::ostringstream table;
  table << "t\tx_re\tx_im\tvalue_re\tvalue_im\n";
  for (const auto& [t, z] : points) {
    std::ostringstream zs;
    zs << std::setprecision(17) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag())
       << "i";
    args.set(o.var, zs.str());
    try {
      const Complex v = evaluate_scalar(entry, args, policy);
      table << fmt(t) << '\t' << fmt(z.real()) << '\t' << fmt(z.imag()) << '\t' << fmt(v.real())
            << '\t' << fmt(v.imag()) << '\n';
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleProximity && e.kind() != ErrorKind::DegenerateCrossing &&
          e.kind() != ErrorKind::DomainError) {
        throw;
      }
      table << "# gap t=" << fmt(t) << " guard=" << e.guard() << '\n';
    }
  }
  if (o.out.empty()) {
    out << table.str();
  } else {
    write_file(o.out, table.str());
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure functions of the elliptic algebra: evaluation and identity suites", "eqa"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  TruncationPolicy policy;

  auto* eval = app.add_subcommand("eval", "Evaluate a registered function");
  std::string function;
  std::vector<std::string> assignments;
  std::string eval_out;
  bool list = false;
  eval->add_option("function", function, "Function name");
  eval->add_option("args", assignments, "Arguments as key=value");
  eval->add_flag("--list", list, "List registered functions");
  eval->add_option("--eps", policy.eps, "Truncation threshold");
  eval->add_option("--out", eval_out, "Write the result here");

  auto* check = app.add_subcommand("check", "Run an identity suite and write its report");
  CheckOptions co;
  check->add_option("suite", co.suite, "Suite name");
  check->add_option("--config", co.config, "Run config or previous report (JSON)");
  check->add_option("--seed", co.seed, "Random grid seed");
  check->add_option("--eps", co.eps, "Truncation threshold");
  check->add_option("--tol", co.tol, "Override every upper-bound tolerance");
  check->add_option("--count", co.count, "Number of samples");
  check->add_option("--out", co.out, "Report path");

  auto* modes = app.add_subcommand("modes", "Tabulate symmetrized Laurent modes against the kernel");
  int k = 1;
  double q = 0.4;
  int s_max = 10;
  std::string modes_out;
  modes->add_option("--k", k, "Annulus index")->check(CLI::PositiveNumber);
  modes->add_option("--q", q, "Real q in (0, 1)")->check(CLI::Range(0.0, 1.0));
  modes->add_option("--s-max", s_max, "Largest |s|")->check(CLI::NonNegativeNumber);
  modes->add_option("--eps", policy.eps, "Truncation threshold");
  modes->add_option("--out", modes_out, "Table path");

  auto* plot = app.add_subcommand("plotdata", "Sample a scalar function along a line or circle");
  PlotOptions po;
  plot->add_option("function", po.function, "Function name")->required();
  plot->add_option("params", po.params, "Fixed arguments as key=value");
  plot->add_option("--var", po.var, "Argument that is swept (default x)");
  plot->add_option("--real", po.real, "a:b:n, n points on the real segment [a, b]");
  plot->add_option("--arc", po.arc, "r:n, n points on the circle |x| = r");
  plot->add_option("--eps", policy.eps, "Truncation threshold");
  plot->add_option("--out", po.out, "Table path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) {
      if (list) {
        for (const auto& e : function_registry()) {
          out << e.name;
          for (const auto& r : e.required) out << ' ' << r;
          out << '\n';
        }
        return kExitOk;
      }
      if (function.empty()) {
        err << "eval: missing function name\n";
        return kExitUsage;
      }
      return cmd_eval(function, assignments, policy, eval_out, out);
    }
    if (check->parsed()) return cmd_check(co, out, err);
    if (modes->parsed()) return cmd_modes(k, q, s_max, policy, modes_out, out);
    if (plot->parsed()) return cmd_plotdata(po, policy, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::ConfigError:
      case ErrorKind::UnknownFunction:
        return kExitUsage;
      default:
        return kExitDomain;
    }
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace eqa
