#include <rotor/error.hpp>
#include <rotor/semiconj.hpp>

#include <algorithm>
#include <cmath>

namespace rotor {

std::optional<long> StepTable::constant() const {
    if (at.empty()) return std::nullopt;
    long v = at.front();
    for (std::size_t i = 0; i < at.size(); ++i) {
        if (at[i] != v || after[i] != v) return std::nullopt;
    }
    return v;
}

long StepTable::eval(const Rational& t) const {
    Rational r = frac(t);
    auto it = std::upper_bound(x.begin(), x.end(), r);
    if (it == x.begin()) return after.back();
    std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
    return x[i] == r ? at[i] : after[i];
}

std::optional<StepTable> integer_difference(const PLLift& a, const PLLift& b) {
    std::vector<Rational> xs;
    for (const Node& n : a.nodes()) xs.push_back(n.x);
    for (const Node& n : b.nodes()) xs.push_back(n.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    StepTable t;
    for (const Rational& c : xs) {
        Rational dl = a.eval_left(c) - b.eval_left(c);
        Rational dv = a.eval(c) - b.eval(c);
        Rational dr = a.eval_right(c) - b.eval_right(c);
        if (!is_integer(dl) || !is_integer(dv) || !is_integer(dr)) return std::nullopt;
        if (a.slope_right(c) != b.slope_right(c)) return std::nullopt;
        t.x.push_back(c);
        t.at.push_back(to_long(floor_of(dv)));
        t.after.push_back(to_long(floor_of(dr)));
    }
    return t;
}

bool check_left_semiconjugacy(const GroupAction& rho1, const GroupAction& rho2, const PLLift& phi) {
    if (rho1.rank() != rho2.rank()) throw Error(ErrorCode::InvalidInput, "actions have different ranks");
    for (int i = 0; i < rho1.rank(); ++i) {
        const PLLift& g1 = rho1.generators()[static_cast<std::size_t>(i)].sigma();
        const PLLift& g2 = rho2.generators()[static_cast<std::size_t>(i)].sigma();
        if (!integer_difference(compose(g1, phi), compose(phi, g2))) return false;
    }
    return true;
}

SemiConjReport analyze_n_gamma(const GroupAction& rho1, const GroupAction& rho2, const PLLift& phi) {
    if (rho1.rank() != rho2.rank()) throw Error(ErrorCode::InvalidInput, "actions have different ranks");
    SemiConjReport r;
    r.equivariant = true;
    bool all_constant = true;
    for (int i = 0; i < rho1.rank(); ++i) {
        const PLLift& g1 = rho1.lifts()[static_cast<std::size_t>(i)];
        const PLLift& g2 = rho2.lifts()[static_cast<std::size_t>(i)];
        auto table = integer_difference(compose(g1, phi), compose(phi, g2));
        if (!table) {
            r.equivariant = false;
            r.n_gamma.clear();
            r.constants.clear();
            return r;
        }
        r.constants.push_back(table->constant());
        all_constant = all_constant && table->constant().has_value();
        r.n_gamma.push_back(std::move(*table));
    }
    if (all_constant) {
        std::vector<PLLift> lifts;
        for (int i = 0; i < rho1.rank(); ++i) {
            const PLLift& g1 = rho1.lifts()[static_cast<std::size_t>(i)];
            long n = *r.constants[static_cast<std::size_t>(i)];
            lifts.push_back(n == 0 ? g1 : shift(g1, Rational(-n)));
        }
        r.normalized_lifts = std::move(lifts);
    }
    return r;
}

namespace {

struct Atom {
    bool is_node;
    Rational lo;
    Rational hi;
    std::optional<Rational> value;  // set when the map is constant on the atom
};

}  // namespace

InvariantSets injective_invariant_sets(const PLLift& phi) {
    const std::vector<Node>& nodes = phi.nodes();
    const std::size_t m = nodes.size();
    std::vector<Atom> atoms;
    for (int p = -1; p <= 1; ++p) {
        Rational shift_by(p);
        for (std::size_t i = 0; i < m; ++i) {
            const Node& a = nodes[i];
            Rational next_x = i + 1 < m ? nodes[i + 1].x : nodes[0].x + 1;
            Rational next_left = i + 1 < m ? nodes[i + 1].left : nodes[0].left + 1;
            atoms.push_back({true, a.x + shift_by, a.x + shift_by, a.point + shift_by});
            std::optional<Rational> v;
            if (a.right == next_left) v = a.right + shift_by;
            atoms.push_back({false, a.x + shift_by, next_x + shift_by, v});
        }
    }
    const std::size_t first = 2 * m;
    const std::size_t last = 4 * m;
    std::vector<Interval> minus;
    std::vector<Interval> plus;
    std::size_t s = 0;
    while (s < atoms.size()) {
        if (!atoms[s].value) {
            if (s >= first && s < last) {
                minus.push_back(Interval::open(atoms[s].lo, atoms[s].hi));
                plus.push_back(Interval::open(atoms[s].lo, atoms[s].hi));
            }
            ++s;
            continue;
        }
        std::size_t e = s;
        while (e + 1 < atoms.size() && atoms[e + 1].value && *atoms[e + 1].value == *atoms[s].value) ++e;
        if (s >= first && s < last) {
            if (atoms[s].is_node) minus.push_back(Interval::point(atoms[s].lo));
            if (atoms[e].is_node) plus.push_back(Interval::point(atoms[e].hi));
        }
        s = e + 1;
    }
    return {CircleSet::from_intervals(minus), CircleSet::from_intervals(plus)};
}

const char* status_name(SupConstruction::Status s) {
    switch (s) {
    case SupConstruction::Status::Stabilized: return "stabilized";
    case SupConstruction::Status::Diverged: return "diverged";
    case SupConstruction::Status::Stalled: return "stalled";
    case SupConstruction::Status::Unresolved: return "unresolved";
    }
    return "?";
}

PLLift next_fixed_point_map(const PLLift& f) {
    CircleSet fixed = lift_fixed_set(f);
    if (fixed.empty()) throw Error(ErrorCode::Invalid, "map has no fixed point");
    if (fixed.is_full()) return PLLift::from_nodes(LiftKind::Monotone, {Node{0, 0, 0, 0}});
    std::vector<Interval> comps = fixed.components();
    std::sort(comps.begin(), comps.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Node> nodes;
    auto add = [&](const Rational& x, const Rational& left, const Rational& point, const Rational& right) {
        Rational k = Rational(floor_of(x));
        nodes.push_back(Node{x - k, left - k, point - k, right - k});
    };
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const Interval& c = comps[i];
        Rational next = i + 1 < comps.size() ? comps[i + 1].lo : comps[0].lo + 1;
        if (c.lo == c.hi) {
            add(c.lo, c.lo, c.lo, next);
        } else {
            add(c.lo, c.lo, c.lo, c.lo);
            add(c.hi, c.hi, c.hi, next);
        }
    }
    return PLLift::from_nodes(LiftKind::Monotone, std::move(nodes));
}

namespace {

bool is_translation(const PLLift& f) { return f.nodes().size() == 1 && f.kind() == LiftKind::Strict; }

// Largest value of f(x) - x, attained at a breakpoint or one-sided limit there.
Rational max_displacement(const PLLift& f) {
    Rational best = f.nodes().front().point - f.nodes().front().x;
    for (const Node& n : f.nodes()) {
        for (const Rational* v : {&n.left, &n.point, &n.right}) {
            Rational d = *v - n.x;
            if (d > best) best = d;
        }
    }
    return best;
}

double grid_gap(const PLLift& a, const PLLift& b, int grid) {
    double worst = 0;
    for (int j = 0; j < grid; ++j) {
        Rational x = make_rational(j, grid);
        Rational d = a.eval(x) - b.eval(x);
        worst = std::max(worst, std::fabs(d.get_d()));
    }
    return worst;
}

// Exact sup over all of Z for a pair with equal translation number t = p/q + m where one
// lift is the translation by t.
PLLift z_pair_limit(const PLLift& a, const PLLift& b, const Rational& t, long q) {
    const Rational qt = t * q;
    if (is_translation(a)) {
        // sup_n b^n(x) - n t = max_r U(b^r(x)) - r t, with U the next fixed point of b^q - qt.
        PLLift f = shift(power(b, q), -qt);
        PLLift u = next_fixed_point_map(f);
        PLLift result = u;
        PLLift br = PLLift::identity();
        for (long r = 1; r < q; ++r) {
            br = compose(b, br);
            Rational rt = t * r;
            result = pointwise_max(result, shift(compose(u, br), -rt));
        }
        return result;
    }
    // sup_n a^-n(x + n t) = max_r a^-r(U(x + r t)), with U the next fixed point of a^q - qt.
    PLLift f = shift(power(a, q), -qt);
    PLLift u = next_fixed_point_map(f);
    PLLift a_inv = invert(a);
    PLLift result = u;
    PLLift ar = PLLift::identity();
    for (long r = 1; r < q; ++r) {
        ar = compose(a_inv, ar);
        Rational rt = t * r;
        result = pointwise_max(result, compose(ar, compose(u, PLLift::translation(rt))));
    }
    return result;
}

}  // namespace

SupConstruction construct_semiconjugacy_sup(const GroupAction& rho1, const GroupAction& rho2,
                                            const SupOptions& options) {
    if (rho1.rank() != rho2.rank()) throw Error(ErrorCode::InvalidInput, "actions have different ranks");
    if (options.ball_radius < 1) throw Error(ErrorCode::InvalidInput, "ball radius must be positive");
    SupConstruction out;
    out.phi = PLLift::identity();

    std::optional<TranslationNumberResult> t1;
    std::optional<TranslationNumberResult> t2;
    if (rho1.rank() == 1) {
        t1 = translation_number(rho1.lifts().front(), options.caps);
        t2 = translation_number(rho2.lifts().front(), options.caps);
        if (t1->exact && t2->exact && t1->value != t2->value) {
            out.status = SupConstruction::Status::Diverged;
            return out;
        }
    }

    std::vector<LiftedBallElement> ball1 = lifted_ball_images(rho1, options.ball_radius);
    std::vector<LiftedBallElement> ball2 = lifted_ball_images(rho2, options.ball_radius);
    PLLift current = PLLift::identity();
    bool stalled = false;
    std::size_t k = 1;
    for (int n = 1; n <= options.ball_radius; ++n) {
        PLLift previous = current;
        for (; k < ball1.size() && static_cast<int>(ball1[k].word.size()) == n; ++k) {
            current = pointwise_max(current, compose(invert(ball1[k].element), ball2[k].element));
        }
        out.radius = n;
        out.phi = current;
        if (max_displacement(current) >= 2) {
            out.status = SupConstruction::Status::Diverged;
            return out;
        }
        if (current.same_graph(previous)) {
            out.status = SupConstruction::Status::Stabilized;
            out.verified = check_left_semiconjugacy(rho1, rho2, current);
            return out;
        }
        stalled = grid_gap(current, previous, options.grid) < std::ldexp(1.0, -40);
    }

    if (t1 && t1->exact && t2->exact && t1->period <= out.radius &&
        (is_translation(rho1.lifts().front()) || is_translation(rho2.lifts().front()))) {
        long q = std::max(t1->period, t2->period);
        out.phi = z_pair_limit(rho1.lifts().front(), rho2.lifts().front(), t1->value, q);
        out.from_limit = true;
        out.status = SupConstruction::Status::Stabilized;
        out.verified = check_left_semiconjugacy(rho1, rho2, out.phi) &&
                       pointwise_max(out.phi, current).same_graph(out.phi);
        return out;
    }
    out.status = stalled ? SupConstruction::Status::Stalled : SupConstruction::Status::Unresolved;
    return out;
}

GroupAction match_lifts(const GroupAction& rho1, const GroupAction& rho2, const TranslationCaps& caps) {
    if (rho1.rank() != 1 || rho2.rank() != 1) throw Error(ErrorCode::InvalidInput, "lift matching needs Z-actions");
    TranslationNumberResult t1 = translation_number(rho1.lifts().front(), caps);
    TranslationNumberResult t2 = translation_number(rho2.lifts().front(), caps);
    if (!t1.exact || !t2.exact) throw Error(ErrorCode::Inconclusive, "rotation number not resolved within caps");
    Rational d = t1.value - t2.value;
    if (!is_integer(d)) throw Error(ErrorCode::NotSemiconjugate, "rotation numbers differ");
    if (d == 0) return rho2;
    return rho2.with_lifts({shift(rho2.lifts().front(), d)});
}

Straightening straighten_to_rotation(const GroupAction& rho, const SupOptions& options) {
    if (rho.rank() != 1) throw Error(ErrorCode::InvalidInput, "straightening needs a Z-action");
    GroupAction lifted = rho.has_lifts() ? rho : rho.with_lifts({rho.generators().front().sigma()});
    Straightening s;
    TranslationNumberResult t = translation_number(lifted.lifts().front(), options.caps);
    s.rotation_number = reduce_mod_one(t);
    if (!t.exact) return s;
    GroupAction rotation = GroupAction::cyclic(PLLift::translation(t.value));
    SupOptions opts = options;
    opts.ball_radius = std::max<int>(options.ball_radius, static_cast<int>(3 * t.period));
    s.to_rotation = construct_semiconjugacy_sup(rotation, lifted, opts);
    s.from_rotation = construct_semiconjugacy_sup(lifted, rotation, opts);
    s.rotation = rotation;
    s.conclusive = s.to_rotation.status == SupConstruction::Status::Stabilized && s.to_rotation.verified &&
                   s.from_rotation.status == SupConstruction::Status::Stabilized && s.from_rotation.verified;
    return s;
}

namespace {

// Index j with h(points[i]) = points[i + j] for all i, points sorted.
long cyclic_shift(const CircleHomeo& h, const std::vector<CirclePoint>& points) {
    const long k = static_cast<long>(points.size());
    auto index = [&](const CirclePoint& p) {
        return static_cast<long>(std::lower_bound(points.begin(), points.end(), p) - points.begin());
    };
    long j = index(h(points.front()));
    for (long i = 0; i < k; ++i) {
        if (h(points[static_cast<std::size_t>(i)]) != points[static_cast<std::size_t>((i + j) % k)]) {
            throw Error(ErrorCode::InvalidOrbit, "orbit is not permuted cyclically");
        }
    }
    return j;
}

}  // namespace

Gluing glue_finite_orbit_actions(const GroupAction& rho1, const GroupAction& rho2,
                                 const std::vector<CirclePoint>& orbit1, const std::vector<CirclePoint>& orbit2) {
    if (rho1.rank() != rho2.rank()) throw Error(ErrorCode::Invalid, "actions have different ranks");
    if (orbit1.size() != orbit2.size() || orbit1.empty()) throw Error(ErrorCode::Invalid, "orbit sizes differ");
    if (!is_invariant(rho1, orbit1) || !is_invariant(rho2, orbit2)) {
        throw Error(ErrorCode::InvalidOrbit, "orbit is not invariant");
    }
    std::vector<CirclePoint> xs = orbit1;
    std::vector<CirclePoint> ys = orbit2;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    if (xs.size() != ys.size()) throw Error(ErrorCode::Invalid, "orbit sizes differ");
    const std::size_t k = xs.size();

    std::vector<long> shifts;
    for (int g = 0; g < rho1.rank(); ++g) {
        long j1 = cyclic_shift(rho1.generators()[static_cast<std::size_t>(g)], xs);
        long j2 = cyclic_shift(rho2.generators()[static_cast<std::size_t>(g)], ys);
        if (j1 != j2) throw Error(ErrorCode::CannotGlue, "generators permute the orbits differently");
        shifts.push_back(j1);
    }

    // Arc lengths and start positions on the doubled circle (total length 2, halved at the end).
    auto gap = [](const std::vector<CirclePoint>& pts, std::size_t i) {
        Rational next = i + 1 < pts.size() ? pts[i + 1].rep() : pts[0].rep() + 1;
        Rational g = next - pts[i].rep();
        return g;
    };
    std::vector<Rational> u_start(k);
    std::vector<Rational> v_start(k);
    Rational pos(0);
    for (std::size_t i = 0; i < k; ++i) {
        u_start[i] = pos;
        pos += gap(xs, i);
        v_start[i] = pos;
        pos += gap(ys, i);
    }
    const Rational half(1, 2);
    // Position in X of a point of the source circle, inside the arc starting at pts[i].
    auto place = [&](const std::vector<CirclePoint>& pts, const std::vector<Rational>& starts, const Rational& x) {
        CirclePoint p(x);
        auto it = std::upper_bound(pts.begin(), pts.end(), p);
        std::size_t i = it == pts.begin() ? pts.size() - 1 : static_cast<std::size_t>(it - pts.begin()) - 1;
        Rational offset = lift_in_window(p, pts[i].rep()) - pts[i].rep();
        Rational v = (starts[i] + offset) * half;
        return v;
    };

    std::vector<CircleHomeo> generators;
    for (int g = 0; g < rho1.rank(); ++g) {
        const CircleHomeo& h1 = rho1.generators()[static_cast<std::size_t>(g)];
        const CircleHomeo& h2 = rho2.generators()[static_cast<std::size_t>(g)];
        const std::size_t j = static_cast<std::size_t>(shifts[static_cast<std::size_t>(g)]);
        std::vector<std::pair<Rational, CirclePoint>> nodes;
        for (std::size_t i = 0; i < k; ++i) {
            Rational us = u_start[i] * half;
            Rational vs = v_start[i] * half;
            nodes.emplace_back(us, CirclePoint(u_start[(i + j) % k] * half));
            nodes.emplace_back(vs, CirclePoint(v_start[(i + j) % k] * half));
        }
        for (const Node& n : h1.sigma().nodes()) {
            CirclePoint b(n.x);
            if (std::binary_search(xs.begin(), xs.end(), b)) continue;
            nodes.emplace_back(place(xs, u_start, n.x), CirclePoint(place(xs, u_start, h1(b).rep())));
        }
        for (const Node& n : h2.sigma().nodes()) {
            CirclePoint b(n.x);
            if (std::binary_search(ys.begin(), ys.end(), b)) continue;
            nodes.emplace_back(place(ys, v_start, n.x), CirclePoint(place(ys, v_start, h2(b).rep())));
        }
        generators.push_back(CircleHomeo::from_circle_nodes(std::move(nodes)));
    }

    Gluing out;
    for (std::size_t i = 0; i < k; ++i) {
        out.u_arcs.push_back(Arc{u_start[i] * half, v_start[i] * half});
        Rational v_end = i + 1 < k ? u_start[i + 1] : Rational(2);
        out.v_arcs.push_back(Arc{v_start[i] * half, v_end * half});
    }
    out.action = GroupAction(std::move(generators), std::nullopt, {});
    out.phi1 = shift(devil_staircase(out.v_arcs), xs.front().rep());
    out.phi2 = shift(devil_staircase(out.u_arcs), ys.front().rep());
    if (!check_left_semiconjugacy(rho1, out.action, out.phi1) || !check_left_semiconjugacy(rho2, out.action, out.phi2)) {
        throw Error(ErrorCode::ValidationError, "glued action is not collapsed equivariantly");
    }
    return out;
}

}  // namespace rotor
