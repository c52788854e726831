#include <rotor/circle_set.hpp>
#include <rotor/error.hpp>

#include <algorithm>

namespace rotor {

bool Interval::contains(const Rational& x) const {
    bool above = lo_closed ? x >= lo : x > lo;
    bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
}

CircleSet CircleSet::full() {
    CircleSet s;
    s.parts_.push_back({Rational(0), Rational(1), true, false});
    return s;
}

CircleSet CircleSet::from_intervals(const std::vector<Interval>& pieces) {
    std::vector<Interval> out;
    for (const Interval& piece : pieces) {
        if (piece.empty()) continue;
        Rational length = piece.hi - piece.lo;
        if (length >= 1) return full();
        Rational n = Rational(floor_of(piece.lo));
        Interval p{piece.lo - n, piece.hi - n, piece.lo_closed, piece.hi_closed};
        if (p.hi < 1) {
            out.push_back(p);
        } else if (p.hi == 1) {
            out.push_back({p.lo, Rational(1), p.lo_closed, false});
            if (p.hi_closed) out.push_back(Interval::point(Rational(0)));
        } else {
            out.push_back({p.lo, Rational(1), p.lo_closed, false});
            out.push_back({Rational(0), p.hi - 1, true, p.hi_closed});
        }
    }
    CircleSet s;
    s.parts_ = normalize(std::move(out));
    return s;
}

CircleSet CircleSet::from_points(const std::vector<CirclePoint>& points) {
    std::vector<Interval> pieces;
    for (const CirclePoint& p : points) pieces.push_back(Interval::point(p.rep()));
    return from_intervals(pieces);
}

std::vector<Interval> CircleSet::normalize(std::vector<Interval> pieces) {
    pieces.erase(std::remove_if(pieces.begin(), pieces.end(), [](const Interval& i) { return i.empty(); }),
                 pieces.end());
    std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    std::vector<Interval> out;
    for (const Interval& p : pieces) {
        if (!out.empty()) {
            Interval& c = out.back();
            bool touches = p.lo < c.hi || (p.lo == c.hi && (c.hi_closed || p.lo_closed));
            if (touches) {
                if (p.hi > c.hi) {
                    c.hi = p.hi;
                    c.hi_closed = p.hi_closed;
                } else if (p.hi == c.hi) {
                    c.hi_closed = c.hi_closed || p.hi_closed;
                }
                continue;
            }
        }
        out.push_back(p);
    }
    return out;
}

bool CircleSet::is_full() const {
    return parts_.size() == 1 && parts_[0].lo == 0 && parts_[0].lo_closed && parts_[0].hi == 1;
}

bool CircleSet::contains(const CirclePoint& x) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.contains(x.rep()); });
}

CircleSet CircleSet::unite(const CircleSet& other) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    CircleSet s;
    s.parts_ = normalize(std::move(all));
    return s;
}

CircleSet CircleSet::intersect(const CircleSet& other) const {
    std::vector<Interval> out;
    for (const Interval& a : parts_) {
        for (const Interval& b : other.parts_) {
            Interval c;
            if (a.lo > b.lo) {
                c.lo = a.lo;
                c.lo_closed = a.lo_closed;
            } else if (b.lo > a.lo) {
                c.lo = b.lo;
                c.lo_closed = b.lo_closed;
            } else {
                c.lo = a.lo;
                c.lo_closed = a.lo_closed && b.lo_closed;
            }
            if (a.hi < b.hi) {
                c.hi = a.hi;
                c.hi_closed = a.hi_closed;
            } else if (b.hi < a.hi) {
                c.hi = b.hi;
                c.hi_closed = b.hi_closed;
            } else {
                c.hi = a.hi;
                c.hi_closed = a.hi_closed && b.hi_closed;
            }
            if (!c.empty()) out.push_back(c);
        }
    }
    CircleSet s;
    s.parts_ = normalize(std::move(out));
    return s;
}

std::vector<Interval> CircleSet::components() const {
    std::vector<Interval> out = parts_;
    if (out.size() >= 2 && !is_full()) {
        const Interval& first = out.front();
        const Interval& last = out.back();
        if (first.lo == 0 && first.lo_closed && last.hi == 1) {
            Interval merged{last.lo, first.hi + 1, last.lo_closed, first.hi_closed};
            out.pop_back();
            out.erase(out.begin());
            out.push_back(merged);
        }
    }
    return out;
}

Rational CircleSet::first_point() const {
    if (parts_.empty() || !parts_[0].lo_closed) throw Error(ErrorCode::Invalid, "set has no least point");
    return parts_[0].lo;
}

std::vector<CirclePoint> CircleSet::sample(int per_component) const {
    std::vector<CirclePoint> out;
    for (const Interval& c : components()) {
        if (c.lo == c.hi) {
            out.emplace_back(c.lo);
            continue;
        }
        if (c.lo_closed) out.emplace_back(c.lo);
        if (c.hi_closed) out.emplace_back(c.hi);
        Rational width = c.hi - c.lo;
        for (int j = 1; j <= per_component; ++j) {
            Rational x = c.lo + width * make_rational(j, per_component + 1);
            out.emplace_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace rotor
