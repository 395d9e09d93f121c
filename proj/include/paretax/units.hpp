#pragma once

namespace paretax::units {

// All money inside the library is plain EUR. Files and CLI flags speak
// k-EUR and G-EUR and convert at the boundary.
inline constexpr double keur = 1e3;
inline constexpr double geur = 1e9;

constexpr double from_keur(double v) { return v * keur; }
constexpr double to_keur(double v) { return v / keur; }
constexpr double from_geur(double v) { return v * geur; }
constexpr double to_geur(double v) { return v / geur; }

}  // namespace paretax::units
