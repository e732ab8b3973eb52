#pragma once

#include <cstddef>
#include <vector>

namespace pfsim {

// Piecewise-linear lookup table. Breakpoints strictly increasing,
// evaluation clamps to the end values outside the range (derivative 0
// there). At an interior breakpoint the lower segment's slope is used.
class PropertyTable {
public:
    PropertyTable() = default;
    PropertyTable(std::vector<double> x, std::vector<double> y);

    double eval(double xi) const;
    double deriv(double xi) const;

    // Inverse lookup for monotone tables (used by capillary inversion).
    // Values are clamped to the breakpoint range of y.
    double inverse(double yi) const;

    bool monotone_x() const;
    std::size_t size() const { return x_.size(); }
    const std::vector<double>& x() const { return x_; }
    const std::vector<double>& y() const { return y_; }
    double front_y() const { return y_.front(); }
    double back_y() const { return y_.back(); }
    double front_x() const { return x_.front(); }
    double back_x() const { return x_.back(); }

private:
    std::size_t segment(double xi) const;
    std::vector<double> x_, y_;
};

}  // namespace pfsim
