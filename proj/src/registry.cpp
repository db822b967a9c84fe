#include "eqa/registry.hpp"

#include <regex>

#include "eqa/elliptic.hpp"
#include "eqa/error.hpp"
#include "eqa/mode_expansion.hpp"
#include "eqa/rmatrix.hpp"
#include "eqa/special_functions.hpp"
#include "eqa/structure_functions.hpp"

namespace eqa {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex parse_complex(const std::string& text) {
  static const std::string num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex real_only("^([+-]?" + num + ")$");
  static const std::regex imag_only("^([+-]?)(" + num + ")?i$");
  static const std::regex both("^([+-]?" + num + ")([+-])(" + num + ")?i$");
  std::smatch m;
  try {
    if (std::regex_match(text, m, real_only)) return {std::stod(m[1]), 0.0};
    if (std::regex_match(text, m, imag_only)) {
      const double mag = m[2].matched ? std::stod(m[2]) : 1.0;
      return {0.0, m[1] == "-" ? -mag : mag};
    }
    if (std::regex_match(text, m, both)) {
      const double mag = m[3].matched ? std::stod(m[3]) : 1.0;
      return {std::stod(m[1]), m[2] == "-" ? -mag : mag};
    }
  } catch (const std::out_of_range&) {
  }
  throw Error(ErrorKind::ConfigError, "parse_complex", "cannot read '" + text + "' as a number");
}

const std::string& Args::raw(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw Error(ErrorKind::ConfigError, "args." + key, "missing argument");
  return it->second;
}

Complex Args::complex(const std::string& key) const { return parse_complex(raw(key)); }

double Args::real(const std::string& key) const {
  const Complex z = complex(key);
  if (z.imag() != 0.0) throw Error(ErrorKind::ConfigError, "args." + key, "must be real");
  return z.real();
}

int Args::integer(const std::string& key) const {
  const std::string& s = raw(key);
  static const std::regex int_re(R"(^[+-]?\d+$)");
  if (!std::regex_match(s, int_re))
    throw Error(ErrorKind::ConfigError, "args." + key, "must be an integer, got '" + s + "'");
  return std::stoi(s);
}

std::vector<Complex> Args::complex_list(const std::string& key) const {
  std::vector<Complex> out;
  const std::string& s = raw(key);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out.push_back(parse_complex(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

Json matrix_json(const CMatrix4& m) {
  Json rows = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Params pq(const Args& a) { return Params::make(a.complex("p"), a.complex("q")); }

Params pqc(const Args& a) {
  Params par = pq(a);
  par.c = a.complex("c");
  return par;
}

using Eval = std::function<Json(const Args&, const TruncationPolicy&)>;

FunctionEntry scalar(std::string name, std::vector<std::string> required,
                     std::function<Complex(const Args&, const TruncationPolicy&)> f,
                     std::map<std::string, std::string> defaults = {}) {
  return FunctionEntry{std::move(name), std::move(required), std::move(defaults), true,
                       [f](const Args& a, const TruncationPolicy& pol) {
                         return complex_to_json(f(a, pol));
                       }};
}

FunctionEntry structured(std::string name, std::vector<std::string> required, Eval f,
                         std::map<std::string, std::string> defaults = {}) {
  return FunctionEntry{std::move(name), std::move(required), std::move(defaults), false,
                       std::move(f)};
}

std::vector<FunctionEntry> build_registry() {
  std::vector<FunctionEntry> r;
  r.push_back(scalar("qpochhammer", {"x", "bases"}, [](const Args& a, const TruncationPolicy& pol) {
    const auto bases = a.complex_list("bases");
    return qpochhammer(a.complex("x"), std::span<const Complex>(bases), pol);
  }));
  r.push_back(scalar("theta", {"x", "t"}, [](const Args& a, const TruncationPolicy& pol) {
    return theta(a.complex("x"), a.complex("t"), pol);
  }));
  r.push_back(scalar("kappa_inv", {"x2", "p", "q"}, [](const Args& a, const TruncationPolicy& pol) {
    return kappa_inv(a.complex("x2"), pq(a), pol);
  }));
  r.push_back(scalar("mu_inv", {"x", "p", "q"}, [](const Args& a, const TruncationPolicy& pol) {
    return mu_inv(a.complex("x"), pq(a), pol);
  }));
  r.push_back(scalar("tau", {"x", "q"}, [](const Args& a, const TruncationPolicy& pol) {
    return tau(a.complex("x"), a.complex("q"), pol);
  }));
  r.push_back(scalar("theta_logderiv", {"x", "t"}, [](const Args& a, const TruncationPolicy& pol) {
    return theta_logderiv(a.complex("x"), a.complex("t"), pol);
  }));
  r.push_back(scalar("tau_logderiv", {"x", "q"}, [](const Args& a, const TruncationPolicy& pol) {
    return tau_logderiv(a.complex("x"), a.complex("q"), pol);
  }));
  r.push_back(structured(
      "nome_to_elliptic", {"p", "q", "x"},
      [](const Args& a, const TruncationPolicy& pol) {
        const EllipticData e = nome_to_elliptic(pq(a), a.complex("x"), pol);
        return Json{{"modulus", complex_to_json(e.modulus)}, {"K", complex_to_json(e.K)},
                    {"Kprime", complex_to_json(e.Kprime)}, {"lambda", complex_to_json(e.lambda)},
                    {"u", complex_to_json(e.u)}};
      },
      {{"x", "1"}}));
  r.push_back(scalar("jacobi_sn", {"u", "p", "q"}, [](const Args& a, const TruncationPolicy& pol) {
    return jacobi_sn(a.complex("u"), nome_to_elliptic(pq(a), pol), pol);
  }));
  r.push_back(scalar("snh", {"u", "p", "q"}, [](const Args& a, const TruncationPolicy& pol) {
    return snh(a.complex("u"), nome_to_elliptic(pq(a), pol), pol);
  }));
  r.push_back(structured("baxter_weights", {"p", "q", "x"},
                         [](const Args& a, const TruncationPolicy& pol) {
                           const BaxterWeights w = baxter_weights(pq(a), a.complex("x"), pol);
                           return Json{{"a", complex_to_json(w.a)},
                                       {"b", complex_to_json(w.b)},
                                       {"c_w", complex_to_json(w.c_w)},
                                       {"d", complex_to_json(w.d)}};
                         }));
  r.push_back(structured("r_matrix", {"p", "q", "x"}, [](const Args& a, const TruncationPolicy& pol) {
    return matrix_json(r_matrix(pq(a), a.complex("x"), pol));
  }));
  r.push_back(structured("r_plus", {"p", "q", "x"}, [](const Args& a, const TruncationPolicy& pol) {
    return matrix_json(r_plus(pq(a), a.complex("x"), pol));
  }));
  r.push_back(structured("r_plus_star", {"p", "q", "x", "c"},
                         [](const Args& a, const TruncationPolicy& pol) {
                           return matrix_json(r_plus_star(pq(a), a.complex("x"), a.complex("c"), pol));
                         }));
  r.push_back(structured("cal_r", {"p", "q", "c", "x"}, [](const Args& a, const TruncationPolicy& pol) {
    return matrix_json(cal_r(pqc(a), a.complex("c"), a.complex("x"), pol));
  }));
  r.push_back(structured("y_operator", {"p", "q", "c", "x"},
                         [](const Args& a, const TruncationPolicy& pol) {
                           return matrix_json(y_operator(pqc(a), a.complex("c"), a.complex("x"), pol));
                         }));
  r.push_back(scalar("t_factor", {"p", "q", "c", "x"}, [](const Args& a, const TruncationPolicy& pol) {
    return t_factor(pqc(a), a.complex("c"), a.complex("x"), pol);
  }));
  r.push_back(scalar("t_factor_dc_closed_form", {"p", "q", "x"},
                     [](const Args& a, const TruncationPolicy& pol) {
                       return t_factor_dc_closed_form(pq(a), a.complex("x"), pol);
                     }));
  r.push_back(scalar("f_skao", {"x", "q_s", "p_s"}, [](const Args& a, const TruncationPolicy& pol) {
    return f_skao(a.complex("x"), a.complex("q_s"), a.complex("p_s"), pol);
  }));
  r.push_back(scalar("f_poisson_series", {"x", "q"}, [](const Args& a, const TruncationPolicy& pol) {
    return f_poisson_series(a.complex("x"), a.complex("q"), pol);
  }));
  r.push_back(scalar("f_poisson_tau", {"x", "q"}, [](const Args& a, const TruncationPolicy& pol) {
    return f_poisson_tau(a.complex("x"), a.complex("q"), pol);
  }));
  r.push_back(scalar("f_exchange", {"m", "x", "p", "q"}, [](const Args& a, const TruncationPolicy& pol) {
    const SurfaceParams s = SurfaceParams::make(a.complex("p"), a.complex("q"), a.integer("m"));
    return f_exchange(s, a.complex("x"), pol);
  }));
  r.push_back(scalar("f_exchange_even_closed_form", {"m", "x", "q"},
                     [](const Args& a, const TruncationPolicy& pol) {
                       return f_exchange_even_closed_form(a.integer("m"), a.complex("x"),
                                                          a.complex("q"), pol);
                     }));
  r.push_back(scalar("y_exchange", {"m", "x", "p", "q"}, [](const Args& a, const TruncationPolicy& pol) {
    const SurfaceParams s = SurfaceParams::make(a.complex("p"), a.complex("q"), a.integer("m"));
    return y_exchange(s, a.complex("x"), pol);
  }));
  r.push_back(scalar("classical_limit_series", {"k", "m", "x", "q"},
                     [](const Args& a, const TruncationPolicy& pol) {
                       return classical_limit_series(a.integer("k"), a.integer("m"), a.complex("x"),
                                                     a.complex("q"), pol);
                     }));
  r.push_back(scalar(
      "classical_limit_numeric", {"k", "m", "x", "p", "beta", "root"},
      [](const Args& a, const TruncationPolicy& pol) {
        const ClassicalLimitSpec spec{a.integer("k"), a.real("beta"), a.integer("root")};
        spec.validate();
        return classical_limit_numeric(a.integer("m"), a.complex("x"), a.complex("p"), spec, pol);
      },
      {{"beta", "1e-4"}, {"root", "0"}}));
  r.push_back(scalar(
      "skao_comparison", {"p", "q", "x", "orientation"},
      [](const Args& a, const TruncationPolicy& pol) {
        const SurfaceParams s = SurfaceParams::make(a.complex("p"), a.complex("q"), 1);
        return skao_comparison(s, a.complex("x"), pol, a.integer("orientation"));
      },
      {{"orientation", "-1"}}));
  r.push_back(scalar("kernel_closed_form", {"k", "s", "q"}, [](const Args& a, const TruncationPolicy&) {
    return kernel_closed_form(a.integer("k"), a.integer("s"), a.complex("q"));
  }));
  return r;
}

bool uses_elliptic(const std::string& name) {
  return name == "nome_to_elliptic" || name == "jacobi_sn" || name == "snh" ||
         name == "baxter_weights" || name.rfind("r_", 0) == 0 || name == "cal_r" ||
         name == "y_operator";
}

}  // namespace

const std::vector<FunctionEntry>& function_registry() {
  static const std::vector<FunctionEntry> r = build_registry();
  return r;
}

const FunctionEntry& find_function(const std::string& name) {
  for (const auto& e : function_registry()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorKind::UnknownFunction, "registry", "no function named '" + name + "'");
}

namespace {

Args complete(const FunctionEntry& entry, Args args) {
  for (const auto& [k, v] : entry.defaults) {
    if (!args.has(k)) args.set(k, v);
  }
  for (const auto& key : args.values()) {
    bool known = false;
    for (const auto& req : entry.required) known = known || req == key.first;
    if (!known)
      throw Error(ErrorKind::ConfigError, "args." + key.first,
                  "not an argument of " + entry.name);
  }
  for (const auto& req : entry.required) {
    if (!args.has(req)) throw Error(ErrorKind::ConfigError, "args." + req, "missing argument");
  }
  return args;
}

}  // namespace

Complex evaluate_scalar(const FunctionEntry& entry, const Args& args,
                        const TruncationPolicy& policy) {
  if (!entry.scalar) {
    throw Error(ErrorKind::ConfigError, "registry", entry.name + " is not scalar-valued");
  }
  const Json v = entry.eval(complete(entry, args), policy);
  return {v[0].get<double>(), v[1].get<double>()};
}

Json evaluate_function(const std::string& name, Args args, const TruncationPolicy& policy) {
  const FunctionEntry& entry = find_function(name);
  policy.validate();
  args = complete(entry, std::move(args));
  Json out;
  out["function"] = name;
  Json echo;
  for (const auto& [k, v] : args.values()) echo[k] = v;
  out["arguments"] = echo;
  out["policy"] = {{"eps", policy.eps},
                   {"max_terms", policy.max_terms},
                   {"base_bound", policy.base_bound}};
  Json branch{{"logarithm", "principal"}};
  if (uses_elliptic(name)) {
    const Complex x = args.has("x") ? args.complex("x") : Complex{1.0, 0.0};
    branch["branch_ambiguous"] = nome_to_elliptic(pq(args), x, policy).branch_ambiguous;
  }
  if (name == "classical_limit_numeric") {
    branch["root_index"] = args.integer("root");
    branch["branch_ambiguous"] = args.integer("root") != 0;
  }
  out["branch"] = branch;
  out["value"] = entry.eval(args, policy);
  return out;
}

}  // namespace eqa
