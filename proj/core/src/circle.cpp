#include <rotor/circle.hpp>
#include <rotor/error.hpp>

namespace rotor {

int sign_of(Orientation o) {
    switch (o) {
    case Orientation::Positive: return 1;
    case Orientation::Negative: return -1;
    case Orientation::Degenerate: return 0;
    }
    return 0;
}

CirclePoint parse_point(const std::string& text) { return CirclePoint(parse_rational(text)); }

std::string to_string(const CirclePoint& p) { return to_string(p.rep()); }

Rational lift_in_window(const CirclePoint& x, const Rational& base) {
    Rational shift = Rational(ceil_of(base - x.rep()));
    Rational out = x.rep() + shift;
    return out;
}

Rational lift_above(const CirclePoint& x, const Rational& floor, bool strict) {
    Rational y = lift_in_window(x, floor);
    if (strict && y == floor) y += 1;
    return y;
}

bool oriented(const std::vector<CirclePoint>& tuple, bool strict) {
    if (tuple.empty()) throw Error(ErrorCode::InvalidInput, "empty tuple");
    const Rational first = tuple.front().rep();
    Rational prev = first;
    for (std::size_t i = 1; i < tuple.size(); ++i) prev = lift_above(tuple[i], prev, strict);
    Rational bound = first + 1;
    return strict ? prev < bound : prev <= bound;
}

Orientation orientation(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) {
    if (oriented({x, y, z}, true)) return Orientation::Positive;
    if (oriented({y, x, z}, true)) return Orientation::Negative;
    return Orientation::Degenerate;
}

}  // namespace rotor
