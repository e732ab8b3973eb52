#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pfsim/common.hpp"
#include "pfsim/tables.hpp"
#include "pfsim/units.hpp"

namespace pfsim {

struct GridSpec {
    int nx = 0, ny = 0, nz = 0;
    std::vector<double> dx, dy, dz;  // per cell, natural ordering
    double tops = 0.0;               // depth of the top face of layer k=0
    int ncells() const { return nx * ny * nz; }
};

struct RockSpec {
    std::vector<double> poro;                 // reference porosity per cell
    std::vector<double> permx, permy, permz;  // absolute permeability per cell
    double compressibility = 0.0;             // c_r
    double ref_pressure = 0.0;                // P_r
    double density = 0.0;                     // rock mass density
};

struct PhasePvt {
    double surface_density = 0.0;
    double ref_pressure = 0.0;
    double fvf_ref = 1.0;          // formation volume factor at ref pressure
    double compressibility = 0.0;
    double viscosity = 0.0;
};

struct SwofTable {
    PropertyTable krw;  // vs Sw
    PropertyTable kro;  // vs Sw
    PropertyTable pcow; // vs Sw
    bool loaded = false;
};

enum class MixingRule { Linear, Nonlinear };

struct PolymerSpec {
    bool present = false;
    PropertyTable adsorption;  // conc -> kg adsorbed per kg rock
    double ipv = 0.0;
    double rrf = 1.0;
    double ads_max = 1.0;      // kg/kg cap
    double omega = 1.0;        // Todd-Longstaff mixing parameter
    double mu_p_ref = 0.0;     // fully-mixed viscosity at reference concentration
    double c_p_ref = 1.0;
    MixingRule mixing = MixingRule::Linear;
};

enum class WellKind { Injector, Producer };

struct PerfSpec {
    int i = 0, j = 0, k = 0;   // 0-based after parsing
    Direction dir = Direction::Z;
    double well_fraction = 1.0;
    double thickness_factor = 1.0;
};

struct WellSpec {
    std::string name;
    WellKind kind = WellKind::Producer;
    double radius = 0.0;
    double skin = 0.0;
    double ref_depth = 0.0;
    std::vector<PerfSpec> perfs;
};

enum class ConstraintKind { Bhp, WaterRate, OilRate, LiquidRate };

struct WellConstraintSpec {
    ConstraintKind kind = ConstraintKind::Bhp;
    double target = 0.0;                 // Pa or m^3/s surface
    std::optional<double> bhp_limit;     // cap (injector) / floor (producer)
};

struct ScheduleAction {
    enum class Type { SetConstraint, SetPolymerConcentration, Open, Shut, SetMaxTimestep };
    Type type = Type::SetConstraint;
    std::string well;                    // empty for SetMaxTimestep
    WellConstraintSpec constraint;       // SetConstraint
    double value = 0.0;                  // concentration or dt_max
};

struct ScheduleEvent {
    double time = 0.0;
    std::vector<ScheduleAction> actions;
};

enum class NewtonMode { Standard, Inexact };
enum class PrecondKind { CprFp, Ilu0, None };
enum class AmgSmoother { Jacobi, GaussSeidel };

struct SolverConfig {
    double newton_tol = 1e-6;
    int newton_max_iter = 12;
    NewtonMode newton_mode = NewtonMode::Inexact;
    double newton_eta_fixed = 1e-8;      // standard mode
    double forcing_gamma = 0.5;
    double forcing_beta = 1.6180339887498949;  // (sqrt(5)+1)/2
    double eta_min = 0.01;
    double eta_max = 0.1;
    int gmres_restart = 30;
    int gmres_max_iter = 200;
    PrecondKind precond = PrecondKind::CprFp;
    int ras_overlap = 1;
    double amg_strength = 0.25;
    int amg_max_levels = 25;
    int amg_coarse_size = 64;
    AmgSmoother amg_smoother = AmgSmoother::Jacobi;
    double amg_jacobi_weight = 0.8;
    int amg_pre_sweeps = 1;
    int amg_post_sweeps = 1;
    double dt_init = 86400.0;            // s
    double dt_max = 30.0 * 86400.0;
    double dt_min = 86.4;                // 1e-3 day
    double dt_grow = 2.0;
    double dt_cut = 0.5;
};

struct InitialConditions {
    enum class Mode { Uniform, Equilibrate };
    Mode mode = Mode::Uniform;
    double pressure = 0.0;       // uniform
    double sw = 0.0;             // uniform
    double cp = 0.0;             // uniform initial polymer concentration
    double datum_depth = 0.0;    // equilibration
    double datum_pressure = 0.0;
    double owc_depth = 0.0;
};

struct SimulationDeck {
    std::string title;
    UnitSystem units = UnitSystem::Metric;
    GridSpec grid;
    RockSpec rock;
    PhasePvt water, oil;
    SwofTable swof;
    PolymerSpec polymer;
    std::vector<WellSpec> wells;
    std::vector<ScheduleEvent> schedule;
    SolverConfig solver;
    InitialConditions init;
    double end_time = 0.0;

    int well_index(const std::string& name) const;  // -1 if unknown
};

// --- parsing / writing -------------------------------------------------

SimulationDeck parse_deck(std::istream& in);
SimulationDeck parse_deck_string(const std::string& text);
SimulationDeck parse_deck_file(const std::string& path);

// Canonical text form in the deck's declared unit system. A parse of the
// output reproduces the deck exactly.
std::string write_deck(const SimulationDeck& deck);

inline bool deck_equal(const SimulationDeck& a, const SimulationDeck& b) {
    return write_deck(a) == write_deck(b);
}

// --- unit conversion ---------------------------------------------------

// Pure transform into SI; idempotent on SI decks.
SimulationDeck convert_to_si(const SimulationDeck& deck);

// --- validation --------------------------------------------------------

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;     // stable identifier, unit-system independent
    std::string context;  // well name / cell index / table name
    std::string message;
};

std::vector<Diagnostic> validate(const SimulationDeck& deck);
bool has_errors(const std::vector<Diagnostic>& diags);

}  // namespace pfsim
