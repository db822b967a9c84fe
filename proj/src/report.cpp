#include "eqa/report.hpp"

#include <set>

#include "eqa/error.hpp"

namespace eqa {

namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

[[noreturn]] void config_error(const std::string& key, const std::string& detail) {
  throw Error(ErrorKind::ConfigError, "config." + key, detail);
}

template <class T>
void read(const Json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    config_error(key, e.what());
  }
}

void reject_unknown(const Json& j, const std::set<std::string>& known, const std::string& where) {
  if (!j.is_object()) config_error(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) config_error(where, "unknown key '" + key + "'");
  }
}

const char* bound_name(BoundKind b) {
  switch (b) {
    case BoundKind::Below: return "below";
    case BoundKind::Above: return "above";
    case BoundKind::Within: return "within";
    case BoundKind::Report: return "report";
  }
  return "report";
}

}  // namespace

RunConfig run_config_from_json(const Json& j) {
  reject_unknown(j,
                 {"suite", "seed", "count", "region", "policy", "tolerance", "out", "h", "beta",
                  "beta_coarse", "s_max", "mode_q", "mode_k", "surface_m", "degeneration_k",
                  "branch"},
                 "root");
  RunConfig cfg;
  if (!j.contains("suite") || !j.at("suite").is_string()) config_error("suite", "missing suite name");
  cfg.suite = j.at("suite").get<std::string>();
  read(j, "seed", cfg.seed);
  read(j, "count", cfg.count);
  if (j.contains("region")) {
    const Json& r = j.at("region");
    reject_unknown(r, {"p_min", "p_max", "q_min", "q_max", "x_min", "x_max", "real_every",
                       "pole_distance"},
                   "region");
    read(r, "p_min", cfg.region.p_min);
    read(r, "p_max", cfg.region.p_max);
    read(r, "q_min", cfg.region.q_min);
    read(r, "q_max", cfg.region.q_max);
    read(r, "x_min", cfg.region.x_min);
    read(r, "x_max", cfg.region.x_max);
    read(r, "real_every", cfg.region.real_every);
    read(r, "pole_distance", cfg.region.pole_distance);
  }
  if (j.contains("policy")) {
    const Json& p = j.at("policy");
    reject_unknown(p, {"eps", "max_terms", "base_bound"}, "policy");
    read(p, "eps", cfg.policy.eps);
    read(p, "max_terms", cfg.policy.max_terms);
    read(p, "base_bound", cfg.policy.base_bound);
  }
  if (j.contains("tolerance") && !j.at("tolerance").is_null()) {
    double t = 0.0;
    read(j, "tolerance", t);
    cfg.tolerance = t;
  }
  read(j, "out", cfg.out);
  read(j, "h", cfg.h);
  read(j, "beta", cfg.beta);
  read(j, "beta_coarse", cfg.beta_coarse);
  read(j, "s_max", cfg.s_max);
  read(j, "mode_q", cfg.mode_q);
  read(j, "mode_k", cfg.mode_k);
  read(j, "surface_m", cfg.surface_m);
  read(j, "degeneration_k", cfg.degeneration_k);

  if (cfg.count < 1) config_error("count", "must be >= 1");
  if (cfg.region.p_min <= 0 || cfg.region.p_min > cfg.region.p_max || cfg.region.p_max >= 1)
    config_error("region", "need 0 < p_min <= p_max < 1");
  if (cfg.region.q_min <= 0 || cfg.region.q_min > cfg.region.q_max || cfg.region.q_max >= 1)
    config_error("region", "need 0 < q_min <= q_max < 1");
  if (cfg.region.x_min <= 0 || cfg.region.x_min > cfg.region.x_max)
    config_error("region", "need 0 < x_min <= x_max");
  if (cfg.h <= 0) config_error("h", "must be positive");
  if (cfg.beta <= 0 || cfg.beta > 0.1 || cfg.beta_coarse <= 0 || cfg.beta_coarse > 0.1)
    config_error("beta", "must lie in (0, 0.1]");
  if (cfg.s_max < 0) config_error("s_max", "must be >= 0");
  try {
    cfg.policy.validate();
  } catch (const Error& e) {
    config_error("policy", e.what());
  }
  return cfg;
}

Json run_config_to_json(const RunConfig& cfg) {
  Json j;
  j["suite"] = cfg.suite;
  j["seed"] = cfg.seed;
  j["count"] = cfg.count;
  j["region"] = {{"p_min", cfg.region.p_min},   {"p_max", cfg.region.p_max},
                 {"q_min", cfg.region.q_min},   {"q_max", cfg.region.q_max},
                 {"x_min", cfg.region.x_min},   {"x_max", cfg.region.x_max},
                 {"real_every", cfg.region.real_every},
                 {"pole_distance", cfg.region.pole_distance}};
  j["policy"] = {{"eps", cfg.policy.eps},
                 {"max_terms", cfg.policy.max_terms},
                 {"base_bound", cfg.policy.base_bound}};
  j["tolerance"] = cfg.tolerance ? Json(*cfg.tolerance) : Json(nullptr);
  j["h"] = cfg.h;
  j["beta"] = cfg.beta;
  j["beta_coarse"] = cfg.beta_coarse;
  j["s_max"] = cfg.s_max;
  j["mode_q"] = cfg.mode_q;
  j["mode_k"] = cfg.mode_k;
  j["surface_m"] = cfg.surface_m;
  j["degeneration_k"] = cfg.degeneration_k;
  j["branch"] = {{"logarithm", "principal"}, {"classical_root_index", 0}};
  return j;
}

Json CheckReport::to_json(bool with_timestamp) const {
  Json j;
  j["suite"] = suite;
  j["parameters"] = parameters;
  Json rows = Json::array();
  for (const auto& s : samples) {
    Json row;
    row["p"] = complex_json(s.params.p);
    row["q"] = complex_json(s.params.q);
    if (s.params.c) row["c"] = complex_json(*s.params.c);
    if (s.params.m) row["m"] = *s.params.m;
    row["x"] = complex_json(s.x);
    if (!s.labels.empty()) {
      Json labels;
      for (const auto& [k, v] : s.labels) labels[k] = v;
      row["labels"] = labels;
    }
    Json res;
    for (const auto& [k, v] : s.residuals) res[std::string(residual_name(k))] = v;
    row["residuals"] = res;
    rows.push_back(row);
  }
  j["samples"] = rows;
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json row;
    row["name"] = c.name;
    row["residual"] = residual_name(c.residual);
    row["bound"] = bound_name(c.bound);
    if (c.bound == BoundKind::Within) {
      row["lo"] = c.lo;
      row["hi"] = c.hi;
      row["value_min"] = c.value_min;
    } else if (c.bound != BoundKind::Report) {
      row["tolerance"] = c.tolerance;
    }
    row["value"] = c.value;
    row["evaluated"] = c.evaluated;
    row["passed"] = c.passed;
    cs.push_back(row);
  }
  j["checks"] = cs;
  j["max_residual"] = max_residual;
  j["tolerance"] = tolerance;
  j["passed"] = passed;
  if (with_timestamp) j["timestamp"] = timestamp;
  j["version"] = version;
  return j;
}

}  // namespace eqa
