#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "pfsim/deck.hpp"

namespace pfsim {
namespace {

struct Token {
    std::string text;
    int line = 0;
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw SimError(ErrorKind::Deck, "deck line " + std::to_string(line) + ": " + msg);
}

bool looks_numeric(const std::string& t) {
    char c = t[0];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
}

class TokenStream {
public:
    explicit TokenStream(std::istream& in) {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens_.push_back({tok, lineno});
        }
    }

    bool done() const { return pos_ >= tokens_.size(); }
    const Token& peek() const {
        if (done()) fail(last_line(), "unexpected end of deck");
        return tokens_[pos_];
    }
    Token next() {
        Token t = peek();
        ++pos_;
        return t;
    }
    int last_line() const {
        return tokens_.empty() ? 0 : tokens_.back().line;
    }

    std::string word() {
        Token t = next();
        return t.text;
    }

    double number() {
        Token t = next();
        try {
            std::size_t used = 0;
            double v = std::stod(t.text, &used);
            if (used != t.text.size()) fail(t.line, "bad number '" + t.text + "'");
            return v;
        } catch (const std::logic_error&) {
            fail(t.line, "expected a number, got '" + t.text + "'");
        }
    }

    int integer() {
        Token t = next();
        try {
            std::size_t used = 0;
            int v = std::stoi(t.text, &used);
            if (used != t.text.size()) fail(t.line, "bad integer '" + t.text + "'");
            return v;
        } catch (const std::logic_error&) {
            fail(t.line, "expected an integer, got '" + t.text + "'");
        }
    }

    // Reads numeric tokens (supporting count*value repeats) until the next
    // token is non-numeric. Returns at least one value.
    std::vector<double> array(const std::string& kw) {
        std::vector<double> out;
        while (!done()) {
            const Token& t = peek();
            if (!looks_numeric(t.text)) break;
            Token tok = next();
            auto star = tok.text.find('*');
            if (star != std::string::npos) {
                int count = 0;
                double value = 0.0;
                try {
                    count = std::stoi(tok.text.substr(0, star));
                    value = std::stod(tok.text.substr(star + 1));
                } catch (const std::logic_error&) {
                    fail(tok.line, "bad repeat token '" + tok.text + "'");
                }
                if (count <= 0) fail(tok.line, "repeat count must be positive");
                out.insert(out.end(), static_cast<std::size_t>(count), value);
            } else {
                try {
                    out.push_back(std::stod(tok.text));
                } catch (const std::logic_error&) {
                    fail(tok.line, "bad number '" + tok.text + "'");
                }
            }
        }
        if (out.empty()) fail(last_line(), kw + ": expected values");
        return out;
    }

    // Reads rows of `cols` numbers until a '/' terminator.
    std::vector<std::vector<double>> table(const std::string& kw, int cols, int decl_line) {
        std::vector<std::vector<double>> rows;
        while (true) {
            if (done()) fail(decl_line, kw + ": missing '/' terminator");
            if (peek().text == "/") {
                next();
                break;
            }
            std::vector<double> row;
            for (int c = 0; c < cols; ++c) row.push_back(number());
            rows.push_back(std::move(row));
        }
        if (rows.size() < 2) fail(decl_line, kw + ": needs at least 2 rows");
        return rows;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::vector<double> cell_array(TokenStream& ts, const std::string& kw,
                               const GridSpec& grid, int line) {
    if (grid.ncells() == 0) fail(line, kw + ": GRID must come first");
    std::vector<double> vals = ts.array(kw);
    std::size_t n = static_cast<std::size_t>(grid.ncells());
    if (vals.size() == 1) return std::vector<double>(n, vals[0]);
    if (vals.size() != n)
        fail(line, kw + ": expected 1 or " + std::to_string(n) + " values, got " +
                       std::to_string(vals.size()));
    return vals;
}

void check_monotone(const std::vector<std::vector<double>>& rows, const std::string& kw,
                    int line) {
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (!(rows[i][0] > rows[i - 1][0]))
            fail(line, kw + ": breakpoints must be strictly increasing");
}

PhasePvt parse_pvt(TokenStream& ts) {
    PhasePvt p;
    p.surface_density = ts.number();
    p.ref_pressure = ts.number();
    p.fvf_ref = ts.number();
    p.compressibility = ts.number();
    p.viscosity = ts.number();
    return p;
}

ConstraintKind rate_kind(const std::string& word, int line) {
    if (word == "BHP") return ConstraintKind::Bhp;
    if (word == "RATE" || word == "WRATE") return ConstraintKind::WaterRate;
    if (word == "ORATE") return ConstraintKind::OilRate;
    if (word == "LRATE") return ConstraintKind::LiquidRate;
    fail(line, "unknown constraint kind '" + word + "'");
}

void parse_schedule(TokenStream& ts, SimulationDeck& deck, int line) {
    bool have_time = false;
    while (true) {
        if (ts.done()) fail(line, "SCHEDULE: missing END");
        Token t = ts.next();
        const std::string& kw = t.text;
        if (kw == "END") break;
        if (kw == "TIME") {
            ScheduleEvent ev;
            ev.time = ts.number();
            deck.schedule.push_back(ev);
            deck.end_time = deck.schedule.back().time;
            have_time = true;
            continue;
        }
        if (!have_time) fail(t.line, "schedule actions must follow a TIME marker");
        ScheduleAction a;
        if (kw == "WCONINJE" || kw == "WCONPROD") {
            a.type = ScheduleAction::Type::SetConstraint;
            a.well = ts.word();
            std::string mode = ts.word();
            a.constraint.kind = rate_kind(mode, t.line);
            a.constraint.target = ts.number();
            if (!ts.done() && ts.peek().text == "BHP") {
                ts.next();
                a.constraint.bhp_limit = ts.number();
            }
        } else if (kw == "WPOLYMER") {
            a.type = ScheduleAction::Type::SetPolymerConcentration;
            a.well = ts.word();
            a.value = ts.number();
        } else if (kw == "WOPEN") {
            a.type = ScheduleAction::Type::Open;
            a.well = ts.word();
        } else if (kw == "WSHUT") {
            a.type = ScheduleAction::Type::Shut;
            a.well = ts.word();
        } else if (kw == "DTMAX") {
            a.type = ScheduleAction::Type::SetMaxTimestep;
            a.value = ts.number();
        } else {
            fail(t.line, "unknown schedule keyword '" + kw + "'");
        }
        deck.schedule.back().actions.push_back(std::move(a));
    }
}

void parse_solver(TokenStream& ts, SolverConfig& cfg, int line) {
    while (true) {
        if (ts.done()) fail(line, "SOLVER: missing '/' terminator");
        Token t = ts.next();
        const std::string& kw = t.text;
        if (kw == "/") break;
        if (kw == "NEWTON_TOL") cfg.newton_tol = ts.number();
        else if (kw == "NEWTON_MAXIT") cfg.newton_max_iter = ts.integer();
        else if (kw == "NEWTON_MODE") {
            std::string m = ts.word();
            if (m == "STANDARD") cfg.newton_mode = NewtonMode::Standard;
            else if (m == "INEXACT") cfg.newton_mode = NewtonMode::Inexact;
            else fail(t.line, "NEWTON_MODE must be STANDARD or INEXACT");
        }
        else if (kw == "NEWTON_ETA") cfg.newton_eta_fixed = ts.number();
        else if (kw == "ETA_MIN") cfg.eta_min = ts.number();
        else if (kw == "ETA_MAX") cfg.eta_max = ts.number();
        else if (kw == "FORCING_GAMMA") cfg.forcing_gamma = ts.number();
        else if (kw == "FORCING_BETA") cfg.forcing_beta = ts.number();
        else if (kw == "GMRES_RESTART") cfg.gmres_restart = ts.integer();
        else if (kw == "GMRES_MAXIT") cfg.gmres_max_iter = ts.integer();
        else if (kw == "PRECOND") {
            std::string m = ts.word();
            if (m == "CPRFP") cfg.precond = PrecondKind::CprFp;
            else if (m == "ILU0") cfg.precond = PrecondKind::Ilu0;
            else if (m == "NONE") cfg.precond = PrecondKind::None;
            else fail(t.line, "PRECOND must be CPRFP, ILU0 or NONE");
        }
        else if (kw == "RAS_OVERLAP") cfg.ras_overlap = ts.integer();
        else if (kw == "AMG_STRENGTH") cfg.amg_strength = ts.number();
        else if (kw == "AMG_MAXLEVELS") cfg.amg_max_levels = ts.integer();
        else if (kw == "AMG_COARSE") cfg.amg_coarse_size = ts.integer();
        else if (kw == "AMG_SMOOTHER") {
            std::string m = ts.word();
            if (m == "JACOBI") cfg.amg_smoother = AmgSmoother::Jacobi;
            else if (m == "GS") cfg.amg_smoother = AmgSmoother::GaussSeidel;
            else fail(t.line, "AMG_SMOOTHER must be JACOBI or GS");
        }
        else if (kw == "AMG_JACOBI_WEIGHT") cfg.amg_jacobi_weight = ts.number();
        else if (kw == "AMG_PRE") cfg.amg_pre_sweeps = ts.integer();
        else if (kw == "AMG_POST") cfg.amg_post_sweeps = ts.integer();
        else if (kw == "DT_INIT") cfg.dt_init = ts.number();
        else if (kw == "DT_MAX") cfg.dt_max = ts.number();
        else if (kw == "DT_MIN") cfg.dt_min = ts.number();
        else if (kw == "DT_GROW") cfg.dt_grow = ts.number();
        else if (kw == "DT_CUT") cfg.dt_cut = ts.number();
        else fail(t.line, "unknown SOLVER keyword '" + kw + "'");
    }
}

}  // namespace

int SimulationDeck::well_index(const std::string& name) const {
    for (std::size_t i = 0; i < wells.size(); ++i)
        if (wells[i].name == name) return static_cast<int>(i);
    return -1;
}

SimulationDeck parse_deck(std::istream& in) {
    TokenStream ts(in);
    SimulationDeck deck;
    // Defaults: SOLVER timestep values are in days for METRIC/FIELD decks
    // and converted later; fill them per unit system once UNITS is known.
    bool have_units = false, have_grid = false, have_rockc = false;
    bool have_pvtw = false, have_pvto = false, have_swof = false;
    bool have_schedule = false, have_pressure = false, have_swat = false;
    bool have_equil = false, have_solver_section = false;
    bool have_plyrock = false, have_plyvisc = false, have_plyads = false;

    // Deck-unit defaults (days); SI decks must set them explicitly or accept
    // second-based defaults applied in convert_to_si.
    deck.solver.dt_init = 1.0;
    deck.solver.dt_max = 30.0;
    deck.solver.dt_min = 1e-3;

    while (true) {
        if (ts.done()) fail(ts.last_line(), "missing END keyword");
        Token t = ts.next();
        const std::string& kw = t.text;
        if (kw == "END") break;

        if (kw == "TITLE") {
            // Consume one word; titles are single tokens (use_underscores).
            deck.title = ts.word();
        } else if (kw == "UNITS") {
            std::string u = ts.word();
            try {
                deck.units = unit_system_from_string(u);
            } catch (const SimError& e) {
                fail(t.line, e.what());
            }
            have_units = true;
        } else if (kw == "GRID") {
            deck.grid.nx = ts.integer();
            deck.grid.ny = ts.integer();
            deck.grid.nz = ts.integer();
            if (deck.grid.nx < 1 || deck.grid.ny < 1 || deck.grid.nz < 1)
                fail(t.line, "GRID dimensions must be >= 1");
            have_grid = true;
        } else if (kw == "DX") {
            deck.grid.dx = cell_array(ts, kw, deck.grid, t.line);
        } else if (kw == "DY") {
            deck.grid.dy = cell_array(ts, kw, deck.grid, t.line);
        } else if (kw == "DZ") {
            deck.grid.dz = cell_array(ts, kw, deck.grid, t.line);
        } else if (kw == "TOPS") {
            deck.grid.tops = ts.number();
        } else if (kw == "PORO") {
            deck.rock.poro = cell_array(ts, kw, deck.grid, t.line);
        } else if (kw == "PERMX") {
            deck.rock.permx = cell_array(ts, kw, deck.grid, t.line);
        } else if (kw == "PERMY") {
            deck.rock.permy = cell_array(ts, kw, deck.grid, t.line);
        } else if (kw == "PERMZ") {
            deck.rock.permz = cell_array(ts, kw, deck.grid, t.line);
        } else if (kw == "ROCKC") {
            deck.rock.compressibility = ts.number();
            deck.rock.ref_pressure = ts.number();
            deck.rock.density = ts.number();
            have_rockc = true;
        } else if (kw == "PVTW") {
            deck.water = parse_pvt(ts);
            have_pvtw = true;
        } else if (kw == "PVTO") {
            deck.oil = parse_pvt(ts);
            have_pvto = true;
        } else if (kw == "SWOF") {
            auto rows = ts.table(kw, 4, t.line);
            check_monotone(rows, kw, t.line);
            std::vector<double> sw, krw, kro, pc;
            for (auto& r : rows) {
                sw.push_back(r[0]);
                krw.push_back(r[1]);
                kro.push_back(r[2]);
                pc.push_back(r[3]);
            }
            deck.swof.krw = PropertyTable(sw, krw);
            deck.swof.kro = PropertyTable(sw, kro);
            deck.swof.pcow = PropertyTable(sw, pc);
            deck.swof.loaded = true;
            have_swof = true;
        } else if (kw == "PLYADS") {
            auto rows = ts.table(kw, 2, t.line);
            check_monotone(rows, kw, t.line);
            std::vector<double> c, a;
            for (auto& r : rows) {
                c.push_back(r[0]);
                a.push_back(r[1]);
            }
            deck.polymer.adsorption = PropertyTable(c, a);
            have_plyads = true;
        } else if (kw == "PLYROCK") {
            deck.polymer.ipv = ts.number();
            deck.polymer.rrf = ts.number();
            deck.polymer.ads_max = ts.number();
            have_plyrock = true;
        } else if (kw == "PLYVISC") {
            deck.polymer.omega = ts.number();
            deck.polymer.mu_p_ref = ts.number();
            deck.polymer.c_p_ref = ts.number();
            std::string rule = ts.word();
            if (rule == "LINEAR") deck.polymer.mixing = MixingRule::Linear;
            else if (rule == "NONLINEAR") deck.polymer.mixing = MixingRule::Nonlinear;
            else fail(t.line, "PLYVISC mixing rule must be LINEAR or NONLINEAR");
            have_plyvisc = true;
        } else if (kw == "WELSPECS") {
            WellSpec w;
            w.name = ts.word();
            std::string kind = ts.word();
            if (kind == "INJECTOR") w.kind = WellKind::Injector;
            else if (kind == "PRODUCER") w.kind = WellKind::Producer;
            else fail(t.line, "well kind must be INJECTOR or PRODUCER");
            w.radius = ts.number();
            w.skin = ts.number();
            w.ref_depth = ts.number();
            deck.wells.push_back(std::move(w));
        } else if (kw == "COMPDAT") {
            std::string name = ts.word();
            int wi = deck.well_index(name);
            if (wi < 0) fail(t.line, "COMPDAT references unknown well '" + name + "'");
            PerfSpec p;
            p.i = ts.integer() - 1;
            p.j = ts.integer() - 1;
            p.k = ts.integer() - 1;
            std::string dir = ts.word();
            if (dir == "X") p.dir = Direction::X;
            else if (dir == "Y") p.dir = Direction::Y;
            else if (dir == "Z") p.dir = Direction::Z;
            else fail(t.line, "COMPDAT direction must be X, Y or Z");
            if (!ts.done() && looks_numeric(ts.peek().text)) p.well_fraction = ts.number();
            if (!ts.done() && looks_numeric(ts.peek().text)) p.thickness_factor = ts.number();
            deck.wells[wi].perfs.push_back(p);
        } else if (kw == "EQUIL") {
            deck.init.mode = InitialConditions::Mode::Equilibrate;
            deck.init.datum_depth = ts.number();
            deck.init.datum_pressure = ts.number();
            deck.init.owc_depth = ts.number();
            have_equil = true;
        } else if (kw == "PRESSURE") {
            deck.init.pressure = ts.number();
            have_pressure = true;
        } else if (kw == "SWAT") {
            deck.init.sw = ts.number();
            have_swat = true;
        } else if (kw == "CPOLY") {
            deck.init.cp = ts.number();
        } else if (kw == "SOLVER") {
            parse_solver(ts, deck.solver, t.line);
            have_solver_section = true;
        } else if (kw == "SCHEDULE") {
            parse_schedule(ts, deck, t.line);
            have_schedule = true;
            break;  // SCHEDULE..END closes the deck
        } else {
            fail(t.line, "unknown keyword '" + kw + "'");
        }
    }
    (void)have_solver_section;

    auto require = [&](bool ok, const std::string& what) {
        if (!ok) fail(ts.last_line(), "missing mandatory section " + what);
    };
    require(have_units, "UNITS");
    require(have_grid, "GRID");
    require(!deck.grid.dx.empty(), "DX");
    require(!deck.grid.dy.empty(), "DY");
    require(!deck.grid.dz.empty(), "DZ");
    require(!deck.rock.poro.empty(), "PORO");
    require(!deck.rock.permx.empty(), "PERMX");
    require(!deck.rock.permy.empty(), "PERMY");
    require(!deck.rock.permz.empty(), "PERMZ");
    require(have_rockc, "ROCKC");
    require(have_pvtw, "PVTW");
    require(have_pvto, "PVTO");
    require(have_swof, "SWOF");
    require(have_schedule, "SCHEDULE");
    if (deck.init.mode == InitialConditions::Mode::Uniform)
        require(have_pressure && have_swat, "PRESSURE/SWAT (or EQUIL)");
    else
        require(have_equil, "EQUIL");

    int n_poly = (have_plyrock ? 1 : 0) + (have_plyvisc ? 1 : 0) + (have_plyads ? 1 : 0);
    if (n_poly != 0 && n_poly != 3)
        fail(ts.last_line(), "polymer requires PLYADS, PLYROCK and PLYVISC together");
    deck.polymer.present = n_poly == 3;
    if (!deck.polymer.present) {
        // Inert defaults so the polymer equation degenerates cleanly.
        deck.polymer.adsorption = PropertyTable({0.0, 1.0}, {0.0, 0.0});
        deck.polymer.ipv = 0.0;
        deck.polymer.rrf = 1.0;
        deck.polymer.ads_max = 1.0;
        deck.polymer.omega = 1.0;
        deck.polymer.mu_p_ref = deck.water.viscosity;
        deck.polymer.c_p_ref = 1.0;
        deck.polymer.mixing = MixingRule::Linear;
    }
    return deck;
}

SimulationDeck parse_deck_string(const std::string& text) {
    std::istringstream in(text);
    return parse_deck(in);
}

SimulationDeck parse_deck_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SimError(ErrorKind::Io, "cannot open deck file '" + path + "'");
    return parse_deck(in);
}

}  // namespace pfsim
