#pragma once

#include <rotor/rational.hpp>

#include <string>
#include <vector>

namespace rotor {

// A point of R/Z, stored by its representative in [0, 1).
class CirclePoint {
public:
    CirclePoint() = default;
    explicit CirclePoint(const Rational& x) : rep_(frac(x)) {}

    const Rational& rep() const { return rep_; }
    CirclePoint antipode() const { return CirclePoint(rep_ + Rational(1, 2)); }

    friend bool operator==(const CirclePoint& a, const CirclePoint& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const CirclePoint& a, const CirclePoint& b) { return a.rep_ != b.rep_; }
    friend bool operator<(const CirclePoint& a, const CirclePoint& b) { return a.rep_ < b.rep_; }

private:
    Rational rep_;
};

enum class Orientation { Positive, Degenerate, Negative };

int sign_of(Orientation o);

CirclePoint parse_point(const std::string& text);
std::string to_string(const CirclePoint& p);

// The unique lift of x in [base, base + 1).
Rational lift_in_window(const CirclePoint& x, const Rational& base);

// Smallest lift of x that is >= floor (or > floor when strict).
Rational lift_above(const CirclePoint& x, const Rational& floor, bool strict);

// Weak or strict positive orientation of a cyclic tuple, by greedy minimal lifting.
// Throws Error(InvalidInput) on an empty tuple.
bool oriented(const std::vector<CirclePoint>& tuple, bool strict);

Orientation orientation(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z);

}  // namespace rotor
