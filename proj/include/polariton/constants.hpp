#pragma once

// CODATA 2018, SI.
namespace polariton::constants {

inline constexpr double speed_of_light = 299792458.0;         // m/s
inline constexpr double hbar = 1.054571817e-34;               // J s
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double bohr_radius = 5.29177210903e-11;      // m
inline constexpr double pi = 3.14159265358979323846;

}  // namespace polariton::constants
