#pragma once

// Conversions between internal SI quantities and the display units used in
// reports (mrad, nW/um^2).  Pure powers of ten; inverses to machine precision.

namespace xpm {

// 1 nW/um^2 = 1e-9 W / 1e-12 m^2 = 1e3 W/m^2.
inline constexpr double kWm2PerNwUm2 = 1.0e3;

inline constexpr double to_nw_per_um2(double w_per_m2) {
  return w_per_m2 / kWm2PerNwUm2;
}
inline constexpr double from_nw_per_um2(double nw_per_um2) {
  return nw_per_um2 * kWm2PerNwUm2;
}

inline constexpr double to_mrad(double rad) { return rad * 1.0e3; }
inline constexpr double from_mrad(double mrad) { return mrad / 1.0e3; }

}  // namespace xpm
