#include "eqa/identity_sample.hpp"

#include <array>
#include <utility>

namespace eqa {

namespace {

constexpr std::array<std::pair<Residual, std::string_view>, 37> kNames{{
    {Residual::Unitarity, "unitarity"},
    {Residual::Crossing, "crossing"},
    {Residual::Antisymmetry, "antisymmetry"},
    {Residual::Quasiperiodicity, "quasiperiodicity"},
    {Residual::QuasiperiodicityAbs, "quasiperiodicity_abs"},
    {Residual::YCritical, "y_critical"},
    {Residual::TCritical, "t_critical"},
    {Residual::dR_dc, "dR_dc"},
    {Residual::dR_dc_half, "dR_dc_half"},
    {Residual::dT_dc, "dT_dc"},
    {Residual::dT_dc_half, "dT_dc_half"},
    {Residual::dY_dc, "dY_dc"},
    {Residual::dR_dc_ratio, "dR_dc_ratio"},
    {Residual::dT_dc_ratio, "dT_dc_ratio"},
    {Residual::PoissonTwoForm, "poisson_two_form"},
    {Residual::PoissonAntisymmetry, "poisson_antisymmetry"},
    {Residual::PoissonPeriod, "poisson_period"},
    {Residual::FeiginFrenkelPeriod, "ff_period"},
    {Residual::FeiginFrenkelReflection, "ff_reflection"},
    {Residual::FeiginFrenkelPeriodAbs, "ff_period_abs"},
    {Residual::FeiginFrenkelReflectionAbs, "ff_reflection_abs"},
    {Residual::YInversion, "y_inversion"},
    {Residual::Theorem6F, "theorem6_F"},
    {Residual::Theorem6FAbs, "theorem6_F_abs"},
    {Residual::Theorem6Y, "theorem6_Y"},
    {Residual::ClassicalLimit, "classical_limit"},
    {Residual::ClassicalLimitHalf, "classical_limit_half"},
    {Residual::ClassicalRichardson, "classical_richardson"},
    {Residual::ClassicalRatio, "classical_ratio"},
    {Residual::ClassicalKmIndependence, "classical_km_independence"},
    {Residual::Prop2Kernel, "prop2_kernel"},
    {Residual::Prop2Oddness, "prop2_oddness"},
    {Residual::AnnulusDependence, "annulus_dependence"},
    {Residual::RadiusIndependence, "radius_independence"},
    {Residual::SkaoRatio, "skao_ratio"},
    {Residual::SkaoRatioForward, "skao_ratio_forward"},
}};

}  // namespace

std::string_view residual_name(Residual r) noexcept {
  for (const auto& [kind, name] : kNames) {
    if (kind == r) return name;
  }
  return "unknown";
}

std::optional<Residual> residual_from_name(std::string_view name) noexcept {
  for (const auto& [kind, n] : kNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

}  // namespace eqa
