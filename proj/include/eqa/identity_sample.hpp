#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "eqa/types.hpp"

namespace eqa {

/// Fixed registry of residual names used by identity suites.
enum class Residual {
  Unitarity,
  Crossing,
  Antisymmetry,
  Quasiperiodicity,
  QuasiperiodicityAbs,
  YCritical,
  TCritical,
  dR_dc,
  dR_dc_half,
  dT_dc,
  dT_dc_half,
  dY_dc,
  dR_dc_ratio,
  dT_dc_ratio,
  PoissonTwoForm,
  PoissonAntisymmetry,
  PoissonPeriod,
  FeiginFrenkelPeriod,
  FeiginFrenkelReflection,
  FeiginFrenkelPeriodAbs,
  FeiginFrenkelReflectionAbs,
  YInversion,
  Theorem6F,
  Theorem6FAbs,
  Theorem6Y,
  ClassicalLimit,
  ClassicalLimitHalf,
  ClassicalRichardson,
  ClassicalRatio,
  ClassicalKmIndependence,
  Prop2Kernel,
  Prop2Oddness,
  AnnulusDependence,
  RadiusIndependence,
  SkaoRatio,
  SkaoRatioForward,
};

std::string_view residual_name(Residual r) noexcept;
std::optional<Residual> residual_from_name(std::string_view name) noexcept;

/// One evaluated sample of an identity suite.
struct IdentitySuiteSample {
  Params params;
  Complex x{1.0, 0.0};
  std::map<Residual, double> residuals;
  /// Integer or real context of the sample (surface index, annulus, ...).
  std::map<std::string, double> labels;
};

}  // namespace eqa
