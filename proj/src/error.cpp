#include "eqa/error.hpp"

namespace eqa {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BaseOutOfDomain: return "BaseOutOfDomain";
    case ErrorKind::TruncationBudgetExceeded: return "TruncationBudgetExceeded";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::DegenerateCrossing: return "DegenerateCrossing";
    case ErrorKind::RangeMismatch: return "RangeMismatch";
    case ErrorKind::AliasingSuspected: return "AliasingSuspected";
    case ErrorKind::UnknownFunction: return "UnknownFunction";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string guard, const std::string& detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + " [" + guard +
                         "]: " + detail),
      kind_(kind),
      guard_(std::move(guard)) {}

}  // namespace eqa
