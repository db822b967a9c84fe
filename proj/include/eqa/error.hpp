#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqa {

enum class ErrorKind {
  BaseOutOfDomain,
  TruncationBudgetExceeded,
  DomainError,
  PoleProximity,
  DegenerateCrossing,
  RangeMismatch,
  AliasingSuspected,
  UnknownFunction,
  ConfigError,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Every numerical guard in the library throws this. The guard name identifies
/// which precondition tripped (e.g. "tau.denominator").
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string guard, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& guard() const noexcept { return guard_; }

 private:
  ErrorKind kind_;
  std::string guard_;
};

}  // namespace eqa
