#pragma once

#include <algorithm>
#include <span>

namespace tiresense::estimation {

/// Closed interval; used for model validity ranges.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const { return x >= lo && x <= hi; }
    double span() const { return hi - lo; }

    template <typename Range, typename Proj>
    static Interval hull(const Range& r, Proj proj) {
        Interval out{0.0, 0.0};
        bool first = true;
        for (const auto& item : r) {
            const double v = proj(item);
            out.lo = first ? v : std::min(out.lo, v);
            out.hi = first ? v : std::max(out.hi, v);
            first = false;
        }
        return out;
    }
};

}  // namespace tiresense::estimation
