#include "pfsim/tables.hpp"

#include <algorithm>
#include <cmath>

#include "pfsim/common.hpp"

namespace pfsim {

PropertyTable::PropertyTable(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    if (x_.size() != y_.size() || x_.size() < 2)
        throw SimError(ErrorKind::Deck, "table needs >= 2 rows");
}

bool PropertyTable::monotone_x() const {
    for (std::size_t i = 1; i < x_.size(); ++i)
        if (!(x_[i] > x_[i - 1])) return false;
    return true;
}

std::size_t PropertyTable::segment(double xi) const {
    // Index of the segment [x_i, x_{i+1}) containing xi; clamped.
    auto it = std::upper_bound(x_.begin(), x_.end(), xi);
    if (it == x_.begin()) return 0;
    std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
    return std::min(i, x_.size() - 2);
}

double PropertyTable::eval(double xi) const {
    if (xi <= x_.front()) return y_.front();
    if (xi >= x_.back()) return y_.back();
    std::size_t i = segment(xi);
    double t = (xi - x_[i]) / (x_[i + 1] - x_[i]);
    return y_[i] + t * (y_[i + 1] - y_[i]);
}

double PropertyTable::deriv(double xi) const {
    if (xi < x_.front() || xi > x_.back()) return 0.0;
    // At a breakpoint use the lower segment's slope.
    std::size_t i;
    if (xi == x_.front()) {
        i = 0;
    } else {
        auto it = std::lower_bound(x_.begin(), x_.end(), xi);
        if (it != x_.end() && *it == xi && it != x_.begin())
            i = static_cast<std::size_t>(it - x_.begin()) - 1;
        else
            i = segment(xi);
    }
    return (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
}

double PropertyTable::inverse(double yi) const {
    // Assumes y monotone (either direction); walks segments.
    bool increasing = y_.back() >= y_.front();
    double ylo = increasing ? y_.front() : y_.back();
    double yhi = increasing ? y_.back() : y_.front();
    if (yi <= ylo) return increasing ? x_.front() : x_.back();
    if (yi >= yhi) return increasing ? x_.back() : x_.front();
    for (std::size_t i = 0; i + 1 < y_.size(); ++i) {
        double a = y_[i], b = y_[i + 1];
        if ((yi >= a && yi <= b) || (yi >= b && yi <= a)) {
            if (a == b) return x_[i];
            double t = (yi - a) / (b - a);
            return x_[i] + t * (x_[i + 1] - x_[i]);
        }
    }
    return x_.back();
}

}  // namespace pfsim
