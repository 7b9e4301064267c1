#pragma once

#include <numbers>

namespace xpm {

// Physical constants, SI. c and h are exact by definition of the SI;
// the vacuum permittivity is the CODATA 2018 value.
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299'792'458.0;            // m/s
inline constexpr double kPlanck = 6.62607015e-34;                 // J s
inline constexpr double kHbar = kPlanck / (2.0 * kPi);            // J s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;   // F/m

}  // namespace xpm
