#pragma once

#include <rotor/circle.hpp>

#include <vector>

namespace rotor {

// Interval of R; lo <= hi. A degenerate closed interval is a single point.
struct Interval {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = true;

    static Interval point(const Rational& x) { return {x, x, true, true}; }
    static Interval closed(const Rational& a, const Rational& b) { return {a, b, true, true}; }
    static Interval open(const Rational& a, const Rational& b) { return {a, b, false, false}; }

    bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
    bool contains(const Rational& x) const;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed && a.hi_closed == b.hi_closed;
    }
};

// Finite union of intervals of the circle. Stored canonically as sorted disjoint
// non-adjacent intervals inside [0, 1); an interval ending at 1 is open there.
class CircleSet {
public:
    CircleSet() = default;

    static CircleSet full();
    // Projects intervals of R to the circle; anything of length >= 1 covers it.
    static CircleSet from_intervals(const std::vector<Interval>& pieces);
    static CircleSet from_points(const std::vector<CirclePoint>& points);

    bool empty() const { return parts_.empty(); }
    bool is_full() const;
    bool contains(const CirclePoint& x) const;

    CircleSet unite(const CircleSet& other) const;
    CircleSet intersect(const CircleSet& other) const;

    const std::vector<Interval>& parts() const { return parts_; }
    // Connected components with the piece through 0 merged: lo in [0, 1), hi may exceed 1.
    std::vector<Interval> components() const;
    // Smallest point of the set in [0, 1); requires the set to have one (e.g. closed sets).
    Rational first_point() const;
    // Up to `per_component` deterministic sample points from each component.
    std::vector<CirclePoint> sample(int per_component) const;

    friend bool operator==(const CircleSet& a, const CircleSet& b) { return a.parts_ == b.parts_; }

private:
    static std::vector<Interval> normalize(std::vector<Interval> pieces);
    std::vector<Interval> parts_;
};

}  // namespace rotor
