#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "eqa/report.hpp"
#include "eqa/types.hpp"

namespace eqa {

/// Parses "1.5", "-0.3", "2i", "0.2+0.1i", "0.2-1e-3i", "-i". Throws
/// Error(ConfigError) on anything else.
Complex parse_complex(const std::string& text);

/// Named arguments of an eval call; values stay as text until requested.
class Args {
 public:
  Args() = default;
  explicit Args(std::map<std::string, std::string> values) : values_(std::move(values)) {}

  bool has(const std::string& key) const { return values_.contains(key); }
  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }
  Complex complex(const std::string& key) const;
  int integer(const std::string& key) const;
  double real(const std::string& key) const;
  std::vector<Complex> complex_list(const std::string& key) const;
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  const std::string& raw(const std::string& key) const;
  std::map<std::string, std::string> values_;
};

struct FunctionEntry {
  std::string name;
  std::vector<std::string> required;
  std::map<std::string, std::string> defaults;
  /// True when the result is a single complex number.
  bool scalar = true;
  std::function<Json(const Args&, const TruncationPolicy&)> eval;
};

const std::vector<FunctionEntry>& function_registry();

/// Throws Error(UnknownFunction).
const FunctionEntry& find_function(const std::string& name);

/// Evaluates with defaults filled in and returns
/// {function, arguments, policy, branch, value}.
Json evaluate_function(const std::string& name, Args args, const TruncationPolicy& policy);

/// Scalar value of a registered scalar function, for plot sampling.
Complex evaluate_scalar(const FunctionEntry& entry, const Args& args,
                        const TruncationPolicy& policy);

Json complex_to_json(Complex z);

}  // namespace eqa
