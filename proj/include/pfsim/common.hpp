#pragma once

#include <stdexcept>
#include <string>

namespace pfsim {

// Standard gravity, m/s^2.
inline constexpr double kGravity = 9.80665;

enum class Direction { X = 0, Y = 1, Z = 2 };

inline const char* to_string(Direction d) {
    switch (d) {
        case Direction::X: return "X";
        case Direction::Y: return "Y";
        default: return "Z";
    }
}

// Error categories map onto the CLI exit codes: deck errors exit 2,
// convergence failures exit 3, everything else exits 1.
enum class ErrorKind { Deck, Convergence, Config, Io, Internal };

class SimError : public std::runtime_error {
public:
    SimError(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace pfsim
