#include <rotor/error.hpp>
#include <rotor/plmap.hpp>

#include <algorithm>
#include <random>

namespace rotor {

namespace {

Rational interpolate(const Node& a, const Node& b, const Rational& x) {
    Rational v = a.right + (b.left - a.right) * (x - a.x) / (b.x - a.x);
    return v;
}

Rational segment_slope(const Node& a, const Node& b) {
    Rational s = (b.left - a.right) / (b.x - a.x);
    return s;
}

void sort_unique(std::vector<Rational>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

void check_abscissae(const std::vector<Node>& nodes) {
    if (nodes.empty()) throw Error(ErrorCode::InvalidInput, "a lift needs at least one breakpoint");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].x < 0 || nodes[i].x >= 1) {
            throw Error(ErrorCode::InvalidInput, "breakpoint outside [0,1): " + to_string(nodes[i].x));
        }
        if (i > 0 && nodes[i].x <= nodes[i - 1].x) {
            throw Error(ErrorCode::InvalidInput, "breakpoints must be strictly increasing");
        }
    }
}

}  // namespace

PLLift PLLift::raw(LiftKind kind, std::vector<Node> nodes, long rise) {
    return PLLift(kind, std::move(nodes), rise);
}

PLLift PLLift::from_nodes(LiftKind kind, std::vector<Node> nodes) {
    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.x < b.x; });
    check_abscissae(nodes);
    PLLift f(kind, std::move(nodes), 1);
    bool ok = kind == LiftKind::Strict ? validate_strict(f) : validate_good_lift(f);
    if (!ok) {
        throw Error(ErrorCode::InvalidInput,
                    kind == LiftKind::Strict ? "data is not a strictly increasing continuous lift"
                                             : "data is not a non-decreasing lift");
    }
    f.canonicalize();
    return f;
}

PLLift PLLift::from_points(LiftKind kind, const std::vector<std::pair<Rational, Rational>>& points) {
    std::vector<Node> nodes;
    nodes.reserve(points.size());
    for (const auto& [x, y] : points) nodes.push_back({x, y, y, y});
    return from_nodes(kind, std::move(nodes));
}

PLLift PLLift::identity() { return translation(Rational(0)); }

PLLift PLLift::translation(const Rational& c) {
    return PLLift(LiftKind::Strict, {Node{Rational(0), c, c, c}}, 1);
}

bool PLLift::continuous() const {
    return std::all_of(nodes_.begin(), nodes_.end(),
                       [](const Node& n) { return n.left == n.point && n.point == n.right; });
}

Node PLLift::node_at(long i) const {
    const long m = static_cast<long>(nodes_.size());
    long q = i >= 0 ? i / m : -((-i + m - 1) / m);
    const Node& n = nodes_[static_cast<std::size_t>(i - q * m)];
    Rational dx(q);
    Rational dy(q * rise_);
    return Node{n.x + dx, n.left + dy, n.point + dy, n.right + dy};
}

long PLLift::locate(const Rational& t) const {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t,
                               [](const Rational& v, const Node& n) { return v < n.x; });
    return static_cast<long>(it - nodes_.begin()) - 1;
}

Rational PLLift::eval(const Rational& x) const {
    Integer s = floor_of(x);
    Rational t = x - Rational(s);
    Rational offset = Rational(s * rise_);
    long i = locate(t);
    if (i >= 0 && nodes_[static_cast<std::size_t>(i)].x == t) {
        return nodes_[static_cast<std::size_t>(i)].point + offset;
    }
    return interpolate(node_at(i), node_at(i + 1), t) + offset;
}

Rational PLLift::eval_left(const Rational& x) const {
    Integer s = floor_of(x);
    Rational t = x - Rational(s);
    Rational offset = Rational(s * rise_);
    long i = locate(t);
    if (i >= 0 && nodes_[static_cast<std::size_t>(i)].x == t) {
        return nodes_[static_cast<std::size_t>(i)].left + offset;
    }
    return interpolate(node_at(i), node_at(i + 1), t) + offset;
}

Rational PLLift::eval_right(const Rational& x) const {
    Integer s = floor_of(x);
    Rational t = x - Rational(s);
    Rational offset = Rational(s * rise_);
    long i = locate(t);
    if (i >= 0 && nodes_[static_cast<std::size_t>(i)].x == t) {
        return nodes_[static_cast<std::size_t>(i)].right + offset;
    }
    return interpolate(node_at(i), node_at(i + 1), t) + offset;
}

Rational PLLift::slope_left(const Rational& x) const {
    Rational t = frac(x);
    long i = locate(t);
    if (i >= 0 && nodes_[static_cast<std::size_t>(i)].x == t) return segment_slope(node_at(i - 1), node_at(i));
    return segment_slope(node_at(i), node_at(i + 1));
}

Rational PLLift::slope_right(const Rational& x) const {
    Rational t = frac(x);
    long i = locate(t);
    return segment_slope(node_at(i), node_at(i + 1));
}

void PLLift::canonicalize() {
    const long m = static_cast<long>(nodes_.size());
    std::vector<Node> kept;
    for (long i = 0; i < m; ++i) {
        const Node& n = nodes_[static_cast<std::size_t>(i)];
        bool continuous_here = n.left == n.point && n.point == n.right;
        bool removable = continuous_here &&
                         segment_slope(node_at(i - 1), node_at(i)) == segment_slope(node_at(i), node_at(i + 1));
        if (!removable) kept.push_back(n);
    }
    if (kept.empty()) {
        Rational v = eval(Rational(0));
        kept.push_back(Node{Rational(0), v, v, v});
    }
    nodes_ = std::move(kept);
}

bool validate_good_lift(const PLLift& f) {
    if (f.rise_ != 1 || f.nodes_.empty()) return false;
    for (std::size_t i = 0; i < f.nodes_.size(); ++i) {
        const Node& n = f.nodes_[i];
        if (n.x < 0 || n.x >= 1) return false;
        if (i > 0 && n.x <= f.nodes_[i - 1].x) return false;
        if (!(n.left <= n.point && n.point <= n.right)) return false;
    }
    const long m = static_cast<long>(f.nodes_.size());
    for (long i = 0; i < m; ++i) {
        if (f.node_at(i).right > f.node_at(i + 1).left) return false;
    }
    return true;
}

bool validate_strict(const PLLift& f) {
    if (!validate_good_lift(f)) return false;
    const long m = static_cast<long>(f.nodes_.size());
    for (long i = 0; i < m; ++i) {
        const Node& n = f.nodes_[static_cast<std::size_t>(i)];
        if (n.left != n.point || n.point != n.right) return false;
        if (f.node_at(i).right >= f.node_at(i + 1).left) return false;
    }
    return true;
}

PLLift compose(const PLLift& f, const PLLift& g) {
    std::vector<Rational> xs;
    for (const Node& n : g.nodes()) xs.push_back(n.x);
    const long m = static_cast<long>(g.nodes().size());
    std::vector<Node> gnodes;
    gnodes.reserve(static_cast<std::size_t>(m) + 1);
    for (long i = 0; i <= m; ++i) {
        // node_at is private; rebuild the periodic neighbour explicitly
        if (i < m) {
            gnodes.push_back(g.nodes()[static_cast<std::size_t>(i)]);
        } else {
            const Node& n0 = g.nodes().front();
            Rational r(g.rise());
            gnodes.push_back(Node{n0.x + 1, n0.left + r, n0.point + r, n0.right + r});
        }
    }
    for (long i = 0; i < m; ++i) {
        const Node& a = gnodes[static_cast<std::size_t>(i)];
        const Node& b = gnodes[static_cast<std::size_t>(i + 1)];
        if (b.left <= a.right) continue;
        Rational slope = segment_slope(a, b);
        for (const Node& fn : f.nodes()) {
            Integer kmin = floor_of(a.right - fn.x) + 1;
            Integer kmax = ceil_of(b.left - fn.x) - 1;
            for (Integer k = kmin; k <= kmax; ++k) {
                Rational y = fn.x + Rational(k);
                Rational x = a.x + (y - a.right) / slope;
                xs.push_back(frac(x));
            }
        }
    }
    sort_unique(xs);
    std::vector<Node> nodes;
    nodes.reserve(xs.size());
    for (const Rational& c : xs) {
        Rational gl = g.eval_left(c);
        Rational gr = g.eval_right(c);
        Rational left = g.slope_left(c) > 0 ? f.eval_left(gl) : f.eval(gl);
        Rational right = g.slope_right(c) > 0 ? f.eval_right(gr) : f.eval(gr);
        nodes.push_back(Node{c, left, f.eval(g.eval(c)), right});
    }
    LiftKind kind =
        f.kind() == LiftKind::Strict && g.kind() == LiftKind::Strict ? LiftKind::Strict : LiftKind::Monotone;
    return PLLift::from_nodes(kind, std::move(nodes));
}

PLLift invert(const PLLift& f) {
    if (f.kind() != LiftKind::Strict) throw Error(ErrorCode::InvalidInput, "only strict lifts are invertible");
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(f.nodes().size());
    for (const Node& n : f.nodes()) {
        Integer k = floor_of(n.point);
        points.emplace_back(n.point - Rational(k), n.x - Rational(k));
    }
    std::sort(points.begin(), points.end());
    return PLLift::from_points(LiftKind::Strict, points);
}

PLLift shift(const PLLift& f, const Rational& c) {
    std::vector<Node> nodes = f.nodes();
    for (Node& n : nodes) {
        n.left += c;
        n.point += c;
        n.right += c;
    }
    return PLLift::from_nodes(f.kind(), std::move(nodes));
}

PLLift pointwise_max(const PLLift& f, const PLLift& g) {
    std::vector<Rational> xs;
    for (const Node& n : f.nodes()) xs.push_back(n.x);
    for (const Node& n : g.nodes()) xs.push_back(n.x);
    sort_unique(xs);
    std::vector<Rational> crossings;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rational a = xs[i];
        Rational b = i + 1 < xs.size() ? xs[i + 1] : xs.front() + 1;
        Rational da = f.eval_right(a) - g.eval_right(a);
        Rational db = f.eval_left(b) - g.eval_left(b);
        if ((da < 0 && db > 0) || (da > 0 && db < 0)) {
            Rational x = a + (b - a) * da / (da - db);
            crossings.push_back(frac(x));
        }
    }
    xs.insert(xs.end(), crossings.begin(), crossings.end());
    sort_unique(xs);
    std::vector<Node> nodes;
    nodes.reserve(xs.size());
    for (const Rational& c : xs) {
        nodes.push_back(Node{c, std::max(f.eval_left(c), g.eval_left(c)), std::max(f.eval(c), g.eval(c)),
                             std::max(f.eval_right(c), g.eval_right(c))});
    }
    LiftKind kind =
        f.kind() == LiftKind::Strict && g.kind() == LiftKind::Strict ? LiftKind::Strict : LiftKind::Monotone;
    return PLLift::from_nodes(kind, std::move(nodes));
}

PLLift power(const PLLift& f, long n) {
    if (n < 0) return power(invert(f), -n);
    PLLift result = PLLift::identity();
    PLLift base = f;
    while (n > 0) {
        if (n & 1) result = compose(base, result);
        n >>= 1;
        if (n > 0) base = compose(base, base);
    }
    return result;
}

CircleHomeo::CircleHomeo(const PLLift& any_lift) {
    if (any_lift.kind() != LiftKind::Strict) {
        throw Error(ErrorCode::InvalidInput, "a circle homeomorphism needs a strict lift");
    }
    Integer n = floor_of(any_lift.eval(Rational(0)));
    sigma_ = n == 0 ? any_lift : shift(any_lift, -Rational(n));
}

CircleHomeo CircleHomeo::from_circle_nodes(std::vector<std::pair<Rational, CirclePoint>> nodes) {
    if (nodes.empty()) throw Error(ErrorCode::InvalidInput, "no nodes");
    for (auto& node : nodes) node.first = frac(node.first);
    std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Rational, Rational>> points;
    Rational prev = nodes.front().second.rep();
    points.emplace_back(nodes.front().first, prev);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (nodes[i].first == nodes[i - 1].first) {
            if (nodes[i].second != nodes[i - 1].second) throw Error(ErrorCode::InvalidInput, "conflicting nodes");
            continue;
        }
        prev = lift_above(nodes[i].second, prev, true);
        points.emplace_back(nodes[i].first, prev);
    }
    if (!(prev < points.front().second + 1)) {
        throw Error(ErrorCode::InvalidInput, "nodes are not cyclically increasing");
    }
    return CircleHomeo(PLLift::from_points(LiftKind::Strict, points));
}

CircleHomeo compose(const CircleHomeo& a, const CircleHomeo& b) {
    return CircleHomeo(compose(a.sigma(), b.sigma()));
}

CircleHomeo invert(const CircleHomeo& h) { return CircleHomeo(invert(h.sigma())); }

std::pair<CircleHomeo, long> decompose(const PLLift& lift) {
    long n = to_long(floor_of(lift.eval(Rational(0))));
    return {CircleHomeo(lift), n};
}

PLLift recombine(const CircleHomeo& h, long n) { return n == 0 ? h.sigma() : shift(h.sigma(), Rational(n)); }

CircleSet solve_shifted_fixed(const PLLift& f, const Rational& c) {
    std::vector<Node> nodes = f.nodes();
    const Node& n0 = nodes.front();
    nodes.push_back(Node{n0.x + 1, n0.left + 1, n0.point + 1, n0.right + 1});
    std::vector<Interval> pieces;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const Node& a = nodes[i];
        const Node& b = nodes[i + 1];
        Rational da = a.right - a.x - c;
        Rational db = b.left - b.x - c;
        if (da == 0 && db == 0) {
            pieces.push_back(Interval::closed(a.x, b.x));
        } else if (da == 0) {
            pieces.push_back(Interval::point(a.x));
        } else if (db == 0) {
            pieces.push_back(Interval::point(b.x));
        } else if ((da < 0) != (db < 0)) {
            Rational x = a.x + (b.x - a.x) * da / (da - db);
            pieces.push_back(Interval::point(x));
        }
    }
    return CircleSet::from_intervals(pieces);
}

namespace {

// Ranks of points in a sorted list of distinct points.
long rank_of(const std::vector<CirclePoint>& sorted, const CirclePoint& p) {
    return static_cast<long>(std::lower_bound(sorted.begin(), sorted.end(), p) - sorted.begin());
}

// Weak positive orientation of a tuple of ranks (see oriented()).
bool weakly_oriented_ranks(const std::vector<long>& r) {
    int wraps = 0;
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (r[i] < r[i - 1]) ++wraps;
    }
    return wraps == 0 || (wraps == 1 && r.back() <= r.front());
}

}  // namespace

TupleTestResult tuple_test(const PointTable& table, int arity) {
    if (table.empty()) throw Error(ErrorCode::InvalidInput, "empty table");
    if (arity < 1) throw Error(ErrorCode::InvalidInput, "arity must be positive");
    std::vector<CirclePoint> domain;
    std::vector<CirclePoint> images;
    for (const auto& [x, y] : table) {
        domain.push_back(x);
        images.push_back(y);
    }
    std::vector<CirclePoint> image_sorted = images;
    std::sort(image_sorted.begin(), image_sorted.end());
    image_sorted.erase(std::unique(image_sorted.begin(), image_sorted.end()), image_sorted.end());
    std::vector<long> image_rank(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) image_rank[i] = rank_of(image_sorted, images[i]);

    const long n = static_cast<long>(domain.size());
    TupleTestResult result;
    std::vector<long> idx(static_cast<std::size_t>(arity), 0);
    std::vector<long> img(static_cast<std::size_t>(arity));
    auto check = [&]() {
        if (!weakly_oriented_ranks(idx)) return true;
        for (int j = 0; j < arity; ++j) img[static_cast<std::size_t>(j)] = image_rank[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
        if (weakly_oriented_ranks(img)) return true;
        result.passed = false;
        for (long i : idx) result.witness.push_back(domain[static_cast<std::size_t>(i)]);
        return false;
    };
    if (n <= 40) {
        while (true) {
            if (!check()) return result;
            int j = arity - 1;
            while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == n) idx[static_cast<std::size_t>(j--)] = 0;
            if (j < 0) break;
        }
        return result;
    }
    result.exhaustive = false;
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<long> pick(0, n - 1);
    for (int s = 0; s < 200000; ++s) {
        for (auto& i : idx) i = pick(rng);
        if (!check()) return result;
    }
    return result;
}

PLLift extract_good_lift(const PointTable& table) {
    TupleTestResult q = quadruple_test(table);
    if (!q.passed) throw Error(ErrorCode::NotADegreeOneMap, "table fails the quadruple test");
    const CirclePoint x0 = table.begin()->first;
    const CirclePoint y0 = table.begin()->second;
    const Rational ty0 = y0.rep();

    // First point after x0 (cyclically, i.e. in sorted order) with a different image.
    auto it1 = std::find_if(table.begin(), table.end(), [&](const auto& kv) { return kv.second != y0; });
    if (it1 == table.end()) {
        return PLLift::from_nodes(LiftKind::Monotone, {Node{Rational(0), ty0 - 1, ty0, ty0}});
    }
    const Rational tx0 = x0.rep();
    const Rational tx1 = it1->first.rep();

    // Window lifts on [x0, x0 + 1): domain points are already sorted from x0.
    std::vector<std::pair<Rational, Rational>> values;
    for (const auto& [x, y] : table) {
        Rational tx = x.rep();
        Rational ty = tx <= tx1 ? lift_in_window(y, ty0) : lift_above(y, ty0, true);
        values.emplace_back(tx, ty);
    }
    (void)tx0;
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < values.size(); ++i) {
        Rational prev = i > 0 ? values[i - 1].second : values.back().second - 1;
        nodes.push_back(Node{values[i].first, prev, values[i].second, values[i].second});
    }
    return PLLift::from_nodes(LiftKind::Monotone, std::move(nodes));
}

PLLift upper_semicontinuize(const PLLift& f) {
    std::vector<Node> nodes = f.nodes();
    for (Node& n : nodes) n.point = n.left;
    return PLLift::from_nodes(f.kind() == LiftKind::Strict ? LiftKind::Strict : LiftKind::Monotone, std::move(nodes));
}

Arc make_arc(const Rational& start, const Rational& end) {
    if (end < start) throw Error(ErrorCode::InvalidArcSystem, "arc end precedes its start");
    Rational s = frac(start);
    Rational e = end - (start - s);
    if (e - s >= 1) throw Error(ErrorCode::InvalidArcSystem, "arc covers the circle");
    return Arc{s, e};
}

void check_arc_system(const std::vector<Arc>& arcs) {
    std::vector<Arc> sorted = arcs;
    std::sort(sorted.begin(), sorted.end(), [](const Arc& a, const Arc& b) { return a.start < b.start; });
    Rational total(0);
    for (const Arc& a : sorted) {
        if (a.start < 0 || a.start >= 1 || a.end < a.start) throw Error(ErrorCode::InvalidArcSystem, "malformed arc");
        total += a.length();
    }
    if (total >= 1) throw Error(ErrorCode::InvalidArcSystem, "total arc length must be < 1");
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const Arc& a = sorted[i];
        Rational next_start = i + 1 < sorted.size() ? sorted[i + 1].start : sorted.front().start + 1;
        if (sorted.size() > 1 && !(a.end < next_start)) throw Error(ErrorCode::InvalidArcSystem, "arcs overlap");
    }
}

PLLift devil_staircase(const std::vector<Arc>& arcs) {
    check_arc_system(arcs);
    if (arcs.empty()) return PLLift::identity();
    Rational total(0);
    for (const Arc& a : arcs) total += a.length();
    // Measure of the periodic arc set inside [0, e], for e in [0, 1).
    auto collapsed_before = [&](const Rational& e) {
        Rational mu(0);
        for (const Arc& a : arcs) {
            for (int k = -1; k <= 0; ++k) {
                Rational lo = std::max(Rational(a.start + k), Rational(0));
                Rational hi = std::min(Rational(a.end + k), e);
                if (hi > lo) mu += hi - lo;
            }
        }
        return mu;
    };
    std::vector<std::pair<Rational, Rational>> points;
    for (const Arc& a : arcs) {
        for (const Rational& e : {a.start, frac(a.end)}) {
            Rational v = (e - collapsed_before(e)) / (1 - total);
            points.emplace_back(e, v);
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return PLLift::from_points(LiftKind::Monotone, points);
}

}  // namespace rotor
