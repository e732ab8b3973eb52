#include "pfsim/deck.hpp"

namespace pfsim {
namespace {

void scale(std::vector<double>& v, double f) {
    for (double& x : v) x *= f;
}

PropertyTable scale_table(const PropertyTable& t, double fx, double fy) {
    std::vector<double> x = t.x(), y = t.y();
    scale(x, fx);
    scale(y, fy);
    return PropertyTable(std::move(x), std::move(y));
}

}  // namespace

SimulationDeck convert_to_si(const SimulationDeck& deck) {
    if (deck.units == UnitSystem::SI) return deck;
    UnitScale u = unit_scale(deck.units);
    SimulationDeck d = deck;
    d.units = UnitSystem::SI;

    scale(d.grid.dx, u.length);
    scale(d.grid.dy, u.length);
    scale(d.grid.dz, u.length);
    d.grid.tops *= u.length;

    scale(d.rock.permx, u.permeability);
    scale(d.rock.permy, u.permeability);
    scale(d.rock.permz, u.permeability);
    d.rock.compressibility *= u.inv_pressure;
    d.rock.ref_pressure *= u.pressure;
    d.rock.density *= u.density;

    for (PhasePvt* p : {&d.water, &d.oil}) {
        p->surface_density *= u.density;
        p->ref_pressure *= u.pressure;
        p->compressibility *= u.inv_pressure;
        p->viscosity *= u.viscosity;
    }

    if (d.swof.loaded) {
        d.swof.krw = scale_table(d.swof.krw, 1.0, 1.0);
        d.swof.kro = scale_table(d.swof.kro, 1.0, 1.0);
        d.swof.pcow = scale_table(d.swof.pcow, 1.0, u.pressure);
    }

    d.polymer.adsorption = scale_table(d.polymer.adsorption, u.concentration, 1.0);
    d.polymer.mu_p_ref *= u.viscosity;
    d.polymer.c_p_ref *= u.concentration;

    for (WellSpec& w : d.wells) {
        w.radius *= u.length;
        w.ref_depth *= u.length;
    }

    for (ScheduleEvent& ev : d.schedule) {
        ev.time *= u.time;
        for (ScheduleAction& a : ev.actions) {
            switch (a.type) {
                case ScheduleAction::Type::SetConstraint:
                    if (a.constraint.kind == ConstraintKind::Bhp)
                        a.constraint.target *= u.pressure;
                    else
                        a.constraint.target *= u.volume_rate;
                    if (a.constraint.bhp_limit)
                        a.constraint.bhp_limit = *a.constraint.bhp_limit * u.pressure;
                    break;
                case ScheduleAction::Type::SetPolymerConcentration:
                    a.value *= u.concentration;
                    break;
                case ScheduleAction::Type::SetMaxTimestep:
                    a.value *= u.time;
                    break;
                default:
                    break;
            }
        }
    }
    d.end_time *= u.time;

    d.solver.dt_init *= u.time;
    d.solver.dt_max *= u.time;
    d.solver.dt_min *= u.time;

    d.init.pressure *= u.pressure;
    d.init.cp *= u.concentration;
    d.init.datum_depth *= u.length;
    d.init.datum_pressure *= u.pressure;
    d.init.owc_depth *= u.length;

    return d;
}

}  // namespace pfsim
