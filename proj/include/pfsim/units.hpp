#pragma once

#include <string>

namespace pfsim {

enum class UnitSystem { Metric, Field, SI };

const char* to_string(UnitSystem u);
UnitSystem unit_system_from_string(const std::string& s);

// Conversion factors to SI. All internal computation is SI:
// Pa, m, s, kg, m^2 (permeability), Pa*s (viscosity).
namespace units {

inline constexpr double cp = 1.0e-3;            // -> Pa*s
inline constexpr double milli_darcy = 9.869233e-16;  // -> m^2
inline constexpr double psi = 6894.757;          // -> Pa
inline constexpr double bar = 1.0e5;             // -> Pa
inline constexpr double ft = 0.3048;             // -> m
inline constexpr double stb = 0.1589873;         // -> m^3
inline constexpr double lbm_per_cuft = 16.01846; // -> kg/m^3
inline constexpr double day = 86400.0;           // -> s
inline constexpr double lbm = 0.45359237;        // -> kg
inline constexpr double lbm_per_stb = lbm / stb; // -> kg/m^3 (polymer concentration)

}  // namespace units

// Per-quantity multipliers from a deck unit system into SI.
struct UnitScale {
    double length = 1.0;        // m
    double pressure = 1.0;      // Pa
    double inv_pressure = 1.0;  // 1/Pa (compressibility)
    double permeability = 1.0;  // m^2
    double viscosity = 1.0;     // Pa*s
    double density = 1.0;       // kg/m^3
    double concentration = 1.0; // kg/m^3 (polymer in water)
    double time = 1.0;          // s
    double volume_rate = 1.0;   // m^3/s (surface volumetric rate)
};

UnitScale unit_scale(UnitSystem u);

}  // namespace pfsim
