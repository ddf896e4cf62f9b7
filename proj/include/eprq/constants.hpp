#pragma once

#include <numbers>

// CODATA-2018 exact values. All circuit energies in this library are E/h in
// GHz, fluxes in units of the flux quantum, phases in radians.
namespace eprq::constants {

inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double planck_h = 6.62607015e-34;            // J s
inline constexpr double hbar = planck_h / (2.0 * std::numbers::pi);
inline constexpr double flux_quantum = planck_h / (2.0 * elementary_charge);  // Wb

}  // namespace eprq::constants
