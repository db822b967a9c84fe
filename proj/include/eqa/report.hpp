#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqa/identity_sample.hpp"
#include "eqa/types.hpp"

namespace eqa {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Annular sampling region: |p| in [p_min, p_max], |q| in [q_min, q_max],
/// |x| in [x_min, x_max], phases uniform. Every `real_every`-th sample uses
/// real positive p and real negative q.
struct SampleRegion {
  double p_min = 0.02;
  double p_max = 0.5;
  double q_min = 0.05;
  double q_max = 0.5;
  double x_min = 0.5;
  double x_max = 2.0;
  int real_every = 4;
  /// Minimal |x - image| to the pole images +-q^j and +-p^{1/2} q^j.
  double pole_distance = 1e-3;
};

struct RunConfig {
  std::string suite;
  std::uint64_t seed = 20240611;
  int count = 100;
  SampleRegion region;
  TruncationPolicy policy;
  /// Replaces every upper-bound tolerance of the suite when set.
  std::optional<double> tolerance;
  std::string out;

  // Suite-specific knobs; each suite reads only its own.
  double h = 1e-4;
  double beta = 1e-4;
  double beta_coarse = 1e-3;
  int s_max = 10;
  std::vector<double> mode_q{0.3, 0.4, 0.5};
  std::vector<int> mode_k{1, 2, 3};
  std::vector<int> surface_m{-2, -1, 1, 2};
  std::vector<int> degeneration_k{1, 2, 3};
};

/// Throws Error(ConfigError) on a missing or ill-typed field.
RunConfig run_config_from_json(const Json& j);
Json run_config_to_json(const RunConfig& cfg);

enum class BoundKind { Below, Above, Within, Report };

/// One named verdict over all samples of a suite.
struct CheckResult {
  std::string name;
  Residual residual;
  BoundKind bound = BoundKind::Below;
  double tolerance = 0.0;  // Below / Above
  double lo = 0.0;         // Within
  double hi = 0.0;
  double value = 0.0;      // max over samples (min for Above)
  double value_min = 0.0;  // Within: smallest sampled value
  int evaluated = 0;
  bool passed = false;
};

struct CheckReport {
  std::string suite;
  Json parameters;
  std::vector<IdentitySuiteSample> samples;
  std::vector<CheckResult> checks;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string timestamp;
  std::string version = kVersion;

  Json to_json(bool with_timestamp = true) const;
};

std::vector<std::string> suite_names();

/// Runs a named suite. Throws Error(ConfigError) for an unknown suite.
CheckReport run_suite(const RunConfig& cfg);

}  // namespace eqa
