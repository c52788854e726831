#include <rotor/error.hpp>
#include <rotor/sullivan.hpp>

#include <algorithm>
#include <map>

namespace rotor {

namespace {

const Rational kHalf(1, 2);

}  // namespace

bool is_antipode_equivariant(const PLLift& lift) {
    if (lift.kind() != LiftKind::Strict) return false;
    for (const Node& n : lift.nodes()) {
        Rational y = n.x + kHalf;
        if (lift.eval(y) != n.point + kHalf) return false;
        if (lift.eval(n.x - kHalf) != n.point - kHalf) return false;
    }
    return true;
}

DoubleCoverHomeo::DoubleCoverHomeo(const PLLift& lift) {
    if (!is_antipode_equivariant(lift)) throw Error(ErrorCode::InvalidAction, "map does not commute with the antipode");
    homeo_ = CircleHomeo(lift);
}

DoubleCoverHomeo DoubleCoverHomeo::from_half_points(const std::vector<std::pair<Rational, Rational>>& points) {
    std::vector<std::pair<Rational, Rational>> all;
    for (const auto& [x, y] : points) {
        if (x < 0 || x >= kHalf) throw Error(ErrorCode::InvalidInput, "half-cover abscissa outside [0, 1/2)");
        all.emplace_back(x, y);
        all.emplace_back(x + kHalf, y + kHalf);
    }
    return DoubleCoverHomeo(PLLift::from_points(LiftKind::Strict, all));
}

CircleHomeo project(const DoubleCoverHomeo& h) {
    std::vector<std::pair<Rational, Rational>> points;
    for (const Node& n : h.homeo().sigma().nodes()) {
        if (n.x < kHalf) points.emplace_back(2 * n.x, 2 * n.point);
    }
    if (points.empty() || points.front().first != 0) {
        points.insert(points.begin(), {Rational(0), 2 * h.homeo().sigma().eval(Rational(0))});
    }
    return CircleHomeo(PLLift::from_points(LiftKind::Strict, points));
}

CirclePoint double_point(const CirclePoint& x) { return CirclePoint(2 * x.rep()); }

bool is_nondegenerate(const std::vector<CirclePoint>& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j] || points[i] == points[j].antipode()) return false;
        }
    }
    return true;
}

const char* nondeg_class_name(NondegClass c) {
    switch (c) {
    case NondegClass::Id: return "Id";
    case NondegClass::T01: return "(01)";
    case NondegClass::T02: return "(02)";
    case NondegClass::T12: return "(12)";
    case NondegClass::C012: return "(012)";
    case NondegClass::C021: return "(021)";
    case NondegClass::Plus: return "O+";
    case NondegClass::Minus: return "O-";
    }
    return "?";
}

namespace {

// A point nudged forward by an infinitesimal; a larger `nudge` is a larger (dominant) move.
struct Nudged {
    Rational v;
    int nudge;
};

bool before(const Nudged& a, const Nudged& b) {
    if (a.v != b.v) return a.v < b.v;
    return a.nudge < b.nudge;
}

// Classification of three pairwise distinct nudged points. A permutation class sends
// input i to cyclic position sigma(i), counted from just after the gap above 1/2.
NondegClass classify_nudged(const std::array<Nudged, 3>& pts) {
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return before(pts[a], pts[b]); });
    // Gap from sorted position i to i+1, compared with 1/2.
    int big = -1;  // sorted position where a gap above 1/2 starts
    for (int i = 0; i < 3; ++i) {
        const Nudged& a = pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        const Nudged& b = pts[static_cast<std::size_t>(idx[static_cast<std::size_t>((i + 1) % 3)])];
        Rational d = b.v - a.v;
        if (i == 2) d += 1;
        bool above = d > kHalf || (d == kHalf && b.nudge > a.nudge);
        if (above) big = i;
    }
    if (big < 0) {
        // Sorted order is positive; the input is positive iff it is a rotation of it.
        bool positive = false;
        for (int r = 0; r < 3; ++r) {
            if (idx[static_cast<std::size_t>(r)] == 0) {
                positive = idx[static_cast<std::size_t>((r + 1) % 3)] == 1;
            }
        }
        return positive ? NondegClass::Plus : NondegClass::Minus;
    }
    // rank[j] = cyclic position of input j, counted from just after the big gap.
    std::array<int, 3> rank{};
    for (int i = 0; i < 3; ++i) rank[static_cast<std::size_t>(idx[static_cast<std::size_t>((big + 1 + i) % 3)])] = i;
    const std::array<int, 3> s = rank;
    if (s == std::array<int, 3>{0, 1, 2}) return NondegClass::Id;
    if (s == std::array<int, 3>{1, 0, 2}) return NondegClass::T01;
    if (s == std::array<int, 3>{2, 1, 0}) return NondegClass::T02;
    if (s == std::array<int, 3>{0, 2, 1}) return NondegClass::T12;
    if (s == std::array<int, 3>{1, 2, 0}) return NondegClass::C012;
    return NondegClass::C021;
}

std::array<Nudged, 3> nudge(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) {
    return {Nudged{x.rep(), 3}, Nudged{y.rep(), 2}, Nudged{z.rep(), 1}};
}

}  // namespace

NondegClass classify_nondeg_triple(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) {
    if (!is_nondegenerate({x, y, z})) throw Error(ErrorCode::Invalid, "degenerate triple");
    return classify_nudged(nudge(x, y, z));
}

std::array<CirclePoint, 3> nondeg_representative(NondegClass c) {
    const std::array<CirclePoint, 3> p = {CirclePoint(Rational(0)), CirclePoint(Rational(1, 8)),
                                          CirclePoint(Rational(1, 4))};
    switch (c) {
    case NondegClass::Id: return {p[0], p[1], p[2]};
    case NondegClass::T01: return {p[1], p[0], p[2]};
    case NondegClass::T02: return {p[2], p[1], p[0]};
    case NondegClass::T12: return {p[0], p[2], p[1]};
    case NondegClass::C012: return {p[1], p[2], p[0]};
    case NondegClass::C021: return {p[2], p[0], p[1]};
    case NondegClass::Plus: return {p[0], p[2], p[1].antipode()};
    case NondegClass::Minus: return {p[0], p[1].antipode(), p[2]};
    }
    return p;
}

long NondegCochain2::at(NondegClass c) const { return const_cast<NondegCochain2*>(this)->at(c); }

long& NondegCochain2::at(NondegClass c) {
    switch (c) {
    case NondegClass::Id: return fid;
    case NondegClass::T01: return f01;
    case NondegClass::T02: return f02;
    case NondegClass::T12: return f12;
    case NondegClass::C012: return f012;
    case NondegClass::C021: return f021;
    case NondegClass::Plus: return fplus;
    case NondegClass::Minus: return fminus;
    }
    return fid;
}

NondegCochain2 sullivan_table() { return {0, 0, 0, 0, 0, 0, 1, -1}; }

NondegCochain2 restrict_to_nondeg(
    const std::function<long(const CirclePoint&, const CirclePoint&, const CirclePoint&)>& f) {
    NondegCochain2 out;
    for (NondegClass c : all_nondeg_classes) {
        auto r = nondeg_representative(c);
        out.at(c) = f(r[0], r[1], r[2]);
    }
    return out;
}

NondegCochain2 pullback_by_double(const HomCochain2& f) {
    return restrict_to_nondeg([&](const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) {
        return f(double_point(x), double_point(y), double_point(z));
    });
}

NondegAnalysis analyze_nondeg_cochain2(const NondegCochain2& f) {
    NondegAnalysis a;
    a.is_cocycle = f.fid == f.f012 && f.fid == f.f021 && f.f01 == f.f02 && f.f01 == f.f12 &&
                   f.fid + f.f01 == f.fplus + f.fminus;
    if (a.is_cocycle) a.class_index = f.fplus - 2 * f.fid + f.f01;
    return a;
}

NondegCochain2 nondeg_coboundary(long w_plus, long w_minus) {
    return {w_plus, w_minus, w_minus, w_minus, w_plus, w_plus, 2 * w_plus - w_minus, 2 * w_minus - w_plus};
}

long evaluate_nondeg(const NondegCochain2& table, const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) {
    return table.at(classify_nudged(nudge(x, y, z)));
}

long sullivan_eval(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) {
    std::array<Nudged, 3> pts = nudge(x, y, z);
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return before(pts[a], pts[b]); });
    for (int i = 0; i < 3; ++i) {
        const Nudged& a = pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        const Nudged& b = pts[static_cast<std::size_t>(idx[static_cast<std::size_t>((i + 1) % 3)])];
        Rational d = b.v - a.v;
        if (i == 2) d += 1;
        bool below = d < kHalf || (d == kHalf && b.nudge < a.nudge);
        if (!below) return 0;
    }
    for (int r = 0; r < 3; ++r) {
        if (idx[static_cast<std::size_t>(r)] == 0) return idx[static_cast<std::size_t>((r + 1) % 3)] == 1 ? 1 : -1;
    }
    return 0;
}

bool is_small(const std::vector<CirclePoint>& points) {
    if (points.empty()) throw Error(ErrorCode::Invalid, "empty point set");
    for (const CirclePoint& a : points) {
        bool inside = std::all_of(points.begin(), points.end(),
                                  [&](const CirclePoint& p) { return lift_in_window(p, a.rep()) - a.rep() < kHalf; });
        if (inside) return true;
    }
    return false;
}

bool sullivan_vanishes_on_cube(const std::vector<CirclePoint>& points) {
    std::vector<CirclePoint> xs = points;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.size() > 12) throw Error(ErrorCode::TooLarge, "more than 12 points");
    for (const CirclePoint& a : xs) {
        for (const CirclePoint& b : xs) {
            for (const CirclePoint& c : xs) {
                if (sullivan_eval(a, b, c) != 0) return false;
            }
        }
    }
    return true;
}

namespace {

void require_equivariant(const GroupAction& action) {
    for (const CircleHomeo& g : action.generators()) {
        if (!is_antipode_equivariant(g.sigma())) {
            throw Error(ErrorCode::InvalidAction, "generator does not commute with the antipode");
        }
    }
}

}  // namespace

WordTripleFunction pullback_sullivan(const GroupAction& action, const CirclePoint& x, const NondegCochain2& table) {
    require_equivariant(action);
    return [action, x, table](const Word& w0, const Word& w1, const Word& w2) {
        return evaluate_nondeg(table, evaluate_word(action, w0)(x), evaluate_word(action, w1)(x),
                               evaluate_word(action, w2)(x));
    };
}

ZeroTest sullivan_zero_test(const GroupAction& action, const CirclePoint& x, int radius, const NondegCochain2& table) {
    require_equivariant(action);
    std::map<CirclePoint, Word> orbit;
    for (const BallElement& e : ball_images(action, radius)) orbit.emplace(e.element(x), e.word);
    ZeroTest out;
    out.orbit_points = orbit.size();
    if (orbit.size() > 200) throw Error(ErrorCode::TooLarge, "more than 200 orbit points");
    for (const auto& [a, wa] : orbit) {
        for (const auto& [b, wb] : orbit) {
            for (const auto& [c, wc] : orbit) {
                if (evaluate_nondeg(table, a, b, c) != 0) {
                    out.vanished = false;
                    out.witness = std::array<Word, 3>{wa, wb, wc};
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace rotor
