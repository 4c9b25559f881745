#pragma once

#include <algorithm>
#include <cmath>

#include "limset/errors.hpp"

namespace limset {

// Closed real interval [lo, hi] with lo < hi.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
            throw InvalidSystem("interval: endpoints must be finite with lo < hi");
    }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x, double tol = 0.0) const {
        return x >= lo - tol && x <= hi + tol;
    }
    bool strictly_inside(double x, double tol = 0.0) const {
        return x > lo + tol && x < hi - tol;
    }
};

inline bool intervals_overlap(const Interval& u, const Interval& v, double tol = 0.0) {
    return u.lo < v.hi - tol && v.lo < u.hi - tol;
}

} // namespace limset
