#include "pfsim/units.hpp"

#include "pfsim/common.hpp"

namespace pfsim {

const char* to_string(UnitSystem u) {
    switch (u) {
        case UnitSystem::Metric: return "METRIC";
        case UnitSystem::Field: return "FIELD";
        default: return "SI";
    }
}

UnitSystem unit_system_from_string(const std::string& s) {
    if (s == "METRIC") return UnitSystem::Metric;
    if (s == "FIELD") return UnitSystem::Field;
    if (s == "SI") return UnitSystem::SI;
    throw SimError(ErrorKind::Deck, "unknown unit system '" + s + "'");
}

UnitScale unit_scale(UnitSystem u) {
    UnitScale s;
    switch (u) {
        case UnitSystem::Metric:
            s.length = 1.0;
            s.pressure = units::bar;
            s.inv_pressure = 1.0 / units::bar;
            s.permeability = units::milli_darcy;
            s.viscosity = units::cp;
            s.density = 1.0;
            s.concentration = 1.0;
            s.time = units::day;
            s.volume_rate = 1.0 / units::day;  // m^3/day
            break;
        case UnitSystem::Field:
            s.length = units::ft;
            s.pressure = units::psi;
            s.inv_pressure = 1.0 / units::psi;
            s.permeability = units::milli_darcy;
            s.viscosity = units::cp;
            s.density = units::lbm_per_cuft;
            s.concentration = units::lbm_per_stb;
            s.time = units::day;
            s.volume_rate = units::stb / units::day;  // STB/day
            break;
        case UnitSystem::SI:
            break;
    }
    return s;
}

}  // namespace pfsim
