#include <rotor/actions.hpp>
#include <rotor/cocycles.hpp>
#include <rotor/error.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace rotor {

Word reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter) {
            out.pop_back();
        } else {
            out.push_back(letter);
        }
    }
    return out;
}

Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& letter : out) letter = -letter;
    return out;
}

Word multiply(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return reduce(std::move(w));
}

GroupAction::GroupAction(std::vector<CircleHomeo> generators, std::optional<std::vector<PLLift>> lifts,
                         std::vector<Word> relations)
    : generators_(std::move(generators)), lifts_(std::move(lifts)), relations_(std::move(relations)) {
    if (lifts_) {
        if (lifts_->size() != generators_.size()) {
            throw Error(ErrorCode::ValidationError, "lift count differs from generator count");
        }
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if ((*lifts_)[i].kind() != LiftKind::Strict || decompose((*lifts_)[i]).first != generators_[i]) {
                throw Error(ErrorCode::ValidationError,
                            "lift " + std::to_string(i + 1) + " does not project to its generator");
            }
        }
    }
    for (const Word& r : relations_) {
        if (evaluate_word(*this, r) != CircleHomeo::identity()) {
            throw Error(ErrorCode::ValidationError, "relation does not act trivially");
        }
    }
}

GroupAction GroupAction::cyclic(const PLLift& lift) {
    return GroupAction({CircleHomeo(lift)}, std::vector<PLLift>{lift});
}

const std::vector<PLLift>& GroupAction::lifts() const {
    if (!lifts_) throw Error(ErrorCode::InvalidInput, "action has no chosen lifts");
    return *lifts_;
}

GroupAction GroupAction::with_lifts(std::vector<PLLift> lifts) const {
    return GroupAction(generators_, std::move(lifts), relations_);
}

GroupAction GroupAction::without_lifts() const {
    GroupAction a = *this;
    a.lifts_.reset();
    return a;
}

namespace {

void check_letter(const GroupAction& action, int letter) {
    if (letter == 0 || std::abs(letter) > action.rank()) {
        throw Error(ErrorCode::InvalidWord, "letter " + std::to_string(letter) + " out of range");
    }
}

CircleHomeo letter_image(const GroupAction& action, int letter) {
    check_letter(action, letter);
    const CircleHomeo& g = action.generators()[static_cast<std::size_t>(std::abs(letter) - 1)];
    return letter > 0 ? g : invert(g);
}

PLLift lifted_letter_image(const GroupAction& action, int letter) {
    check_letter(action, letter);
    const PLLift& g = action.lifts()[static_cast<std::size_t>(std::abs(letter) - 1)];
    return letter > 0 ? g : invert(g);
}

std::vector<int> alphabet(int rank) {
    std::vector<int> letters;
    for (int i = 1; i <= rank; ++i) {
        letters.push_back(i);
        letters.push_back(-i);
    }
    return letters;
}

}  // namespace

CircleHomeo evaluate_word(const GroupAction& action, const Word& w) {
    CircleHomeo result;
    for (auto it = w.rbegin(); it != w.rend(); ++it) result = compose(letter_image(action, *it), result);
    return result;
}

PLLift evaluate_lifted_word(const GroupAction& action, const Word& w) {
    PLLift result = PLLift::identity();
    for (auto it = w.rbegin(); it != w.rend(); ++it) result = compose(lifted_letter_image(action, *it), result);
    return result;
}

std::vector<Word> word_ball(int rank, int radius) {
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    const std::vector<int> letters = alphabet(rank);
    for (int len = 1; len <= radius; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (int a : letters) {
                if (!out[i].empty() && out[i].back() == -a) continue;
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        }
        begin = end;
    }
    return out;
}

std::vector<BallElement> ball_images(const GroupAction& action, int radius) {
    std::vector<CircleHomeo> letters;
    for (int a : alphabet(action.rank())) letters.push_back(letter_image(action, a));
    std::vector<BallElement> out{{Word{}, CircleHomeo::identity()}};
    std::size_t begin = 0;
    const std::vector<int> alpha = alphabet(action.rank());
    for (int len = 1; len <= radius; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = 0; j < alpha.size(); ++j) {
                if (!out[i].word.empty() && out[i].word.back() == -alpha[j]) continue;
                Word w = out[i].word;
                w.push_back(alpha[j]);
                out.push_back({std::move(w), compose(out[i].element, letters[j])});
            }
        }
        begin = end;
    }
    return out;
}

std::vector<LiftedBallElement> lifted_ball_images(const GroupAction& action, int radius) {
    std::vector<PLLift> letters;
    for (int a : alphabet(action.rank())) letters.push_back(lifted_letter_image(action, a));
    std::vector<LiftedBallElement> out{{Word{}, PLLift::identity()}};
    std::size_t begin = 0;
    const std::vector<int> alpha = alphabet(action.rank());
    for (int len = 1; len <= radius; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = 0; j < alpha.size(); ++j) {
                if (!out[i].word.empty() && out[i].word.back() == -alpha[j]) continue;
                Word w = out[i].word;
                w.push_back(alpha[j]);
                out.push_back({std::move(w), compose(out[i].element, letters[j])});
            }
        }
        begin = end;
    }
    return out;
}

CircleSet fixed_set(const CircleHomeo& h) {
    // sigma(h)(x) - x lies in (-1, 2), so only shifts 0 and 1 can occur.
    return solve_shifted_fixed(h.sigma(), Rational(0)).unite(solve_shifted_fixed(h.sigma(), Rational(1)));
}

CircleSet lift_fixed_set(const PLLift& lift) { return solve_shifted_fixed(lift, Rational(0)); }

CircleSet global_fixed_set(const GroupAction& action) {
    CircleSet s = CircleSet::full();
    for (const CircleHomeo& g : action.generators()) {
        s = s.intersect(fixed_set(g));
        if (s.empty()) break;
    }
    return s;
}

std::optional<std::vector<CirclePoint>> orbit_closure(const GroupAction& action, const CirclePoint& x,
                                                      int size_bound) {
    std::vector<CircleHomeo> letters;
    for (int a : alphabet(action.rank())) letters.push_back(letter_image(action, a));
    std::set<CirclePoint> seen{x};
    std::deque<CirclePoint> queue{x};
    while (!queue.empty()) {
        CirclePoint p = queue.front();
        queue.pop_front();
        for (const CircleHomeo& g : letters) {
            CirclePoint q = g(p);
            if (seen.insert(q).second) {
                if (static_cast<int>(seen.size()) > size_bound) return std::nullopt;
                queue.push_back(q);
            }
        }
    }
    return std::vector<CirclePoint>(seen.begin(), seen.end());
}

bool is_invariant(const GroupAction& action, const std::vector<CirclePoint>& points) {
    std::set<CirclePoint> s(points.begin(), points.end());
    for (const CircleHomeo& g : action.generators()) {
        std::set<CirclePoint> image;
        for (const CirclePoint& p : s) image.insert(g(p));
        if (image != s) return false;
    }
    return true;
}

namespace {

void add_fixed_candidates(const CircleSet& fixed, std::set<CirclePoint>& candidates) {
    for (const Interval& c : fixed.components()) {
        candidates.insert(CirclePoint(c.lo));
        candidates.insert(CirclePoint(c.hi));
    }
}

}  // namespace

std::optional<std::vector<CirclePoint>> finite_orbit_search(const GroupAction& action, int size_bound) {
    if (size_bound < 1) throw Error(ErrorCode::InvalidInput, "size bound must be positive");
    std::set<CirclePoint> candidates{CirclePoint(Rational(0))};
    for (const BallElement& e : ball_images(action, 2)) {
        if (!e.word.empty()) add_fixed_candidates(fixed_set(e.element), candidates);
    }
    for (const CircleHomeo& g : action.generators()) {
        CircleHomeo gk = g;
        for (int k = 2; k <= size_bound; ++k) {
            gk = compose(g, gk);
            add_fixed_candidates(fixed_set(gk), candidates);
        }
    }
    std::optional<std::vector<CirclePoint>> best;
    for (const CirclePoint& c : candidates) {
        int bound = best ? static_cast<int>(best->size()) - 1 : size_bound;
        if (bound < 1) break;
        auto orbit = orbit_closure(action, c, bound);
        if (orbit) best = std::move(orbit);
    }
    return best;
}

SupFixedPointResult sup_fixed_point(const GroupAction& action, int ball_radius) {
    if (ball_radius < 1) throw Error(ErrorCode::InvalidInput, "ball radius must be positive");
    SupFixedPointResult r;
    r.radius = ball_radius;
    std::vector<Rational> best_by_length(static_cast<std::size_t>(ball_radius) + 1, Rational(0));
    for (const LiftedBallElement& e : lifted_ball_images(action, ball_radius)) {
        Rational v = e.element.eval(Rational(0));
        for (std::size_t len = e.word.size(); len < best_by_length.size(); ++len) {
            if (v > best_by_length[len]) best_by_length[len] = v;
        }
    }
    const Rational& top = best_by_length.back();
    r.value = top;
    bool unchanged = best_by_length[best_by_length.size() - 2] == top;
    bool fixed = std::all_of(action.lifts().begin(), action.lifts().end(),
                             [&](const PLLift& g) { return g.eval(top) == top; });
    if (unchanged && fixed) {
        r.status = SupFixedPointResult::Status::Stabilized;
        r.from_ball = true;
        return r;
    }
    CircleSet common = CircleSet::full();
    for (const PLLift& g : action.lifts()) common = common.intersect(lift_fixed_set(g));
    if (common.empty()) {
        r.status = SupFixedPointResult::Status::Unbounded;
        return r;
    }
    // Orbits are bounded by the least common fixed point at or above 0, and the sup is itself fixed.
    r.status = SupFixedPointResult::Status::Stabilized;
    r.value = common.first_point();
    return r;
}

namespace {

void check_primitive(const GroupAction& action, const WordFunction& u, int check_radius) {
    std::vector<BallElement> ball = ball_images(action, check_radius);
    for (const BallElement& a : ball) {
        for (const BallElement& b : ball) {
            long lhs = obstruction_cocycle(a.element, b.element);
            long rhs = u(b.word) - u(multiply(a.word, b.word)) + u(a.word);
            if (lhs != rhs) {
                throw Error(ErrorCode::NotAPrimitive, "coboundary equation fails on a sampled pair");
            }
        }
    }
}

}  // namespace

GroupAction lift_correspondence(const GroupAction& action, const WordFunction& u, int check_radius) {
    check_primitive(action, u, check_radius);
    std::vector<PLLift> lifts;
    for (int i = 1; i <= action.rank(); ++i) {
        const CircleHomeo& g = action.generators()[static_cast<std::size_t>(i - 1)];
        lifts.push_back(recombine(g, -u(Word{i})));
    }
    GroupAction lifted = action.without_lifts().with_lifts(std::move(lifts));
    // Lifts assembled from sigma and u on the whole ball must multiply like the words.
    for (const LiftedBallElement& e : lifted_ball_images(lifted, check_radius)) {
        PLLift expected = recombine(evaluate_word(action, e.word), -u(e.word));
        if (expected != e.element) throw Error(ErrorCode::NotAPrimitive, "lifted words do not multiply");
    }
    return lifted;
}

WordFunction primitive_from_lift(const GroupAction& action, int check_radius) {
    GroupAction copy = action;
    WordFunction u = [copy](const Word& w) { return -t_floor(evaluate_lifted_word(copy, w)); };
    check_primitive(action, u, check_radius);
    return u;
}

TranslationNumberResult rotation_number(const GroupAction& action, const TranslationCaps& caps) {
    if (action.rank() != 1) throw Error(ErrorCode::InvalidInput, "rotation number needs a Z-action");
    const PLLift& lift = action.has_lifts() ? action.lifts().front() : action.generators().front().sigma();
    return reduce_mod_one(translation_number(lift, caps));
}

bool equal_mod_translation(const PLLift& a, const PLLift& b) {
    Rational d = a.eval(Rational(0)) - b.eval(Rational(0));
    if (!is_integer(d)) return false;
    std::vector<Node> nodes = b.nodes();
    for (Node& n : nodes) {
        n.left += d;
        n.point += d;
        n.right += d;
    }
    return PLLift::raw(a.kind(), nodes, b.rise()).same_graph(a);
}

BlowUpResult blow_up(const GroupAction& action, const std::vector<CirclePoint>& orbit,
                     const std::vector<Rational>& widths) {
    if (orbit.empty() || orbit.size() != widths.size()) {
        throw Error(ErrorCode::InvalidWidths, "need one width per orbit point");
    }
    std::map<CirclePoint, Rational> width_of;
    Rational total(0);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        if (widths[i] <= 0) throw Error(ErrorCode::InvalidWidths, "widths must be positive");
        if (!width_of.emplace(orbit[i], widths[i]).second) throw Error(ErrorCode::InvalidOrbit, "repeated orbit point");
        total += widths[i];
    }
    if (total >= 1) throw Error(ErrorCode::InvalidWidths, "widths must sum to less than 1");
    if (!is_invariant(action, orbit)) throw Error(ErrorCode::InvalidOrbit, "orbit is not invariant");

    const Rational scale = 1 - total;
    std::map<CirclePoint, Rational> arc_start;
    Rational before(0);
    for (const auto& [p, w] : width_of) {
        arc_start[p] = scale * p.rep() + before;
        before += w;
    }
    // Position of a non-orbit point on the new circle.
    auto embed = [&](const CirclePoint& x) {
        Rational v = scale * x.rep();
        for (const auto& [p, w] : width_of) {
            if (p < x) v += w;
        }
        return v;
    };

    std::vector<CircleHomeo> generators;
    for (const CircleHomeo& g : action.generators()) {
        std::vector<std::pair<Rational, CirclePoint>> nodes;
        for (const Node& n : g.sigma().nodes()) {
            CirclePoint b(n.x);
            if (width_of.count(b)) continue;
            nodes.emplace_back(embed(b), CirclePoint(embed(g(b))));
        }
        for (const auto& [p, w] : width_of) {
            CirclePoint q = g(p);
            nodes.emplace_back(arc_start[p], CirclePoint(arc_start[q]));
            nodes.emplace_back(arc_start[p] + w, CirclePoint(arc_start[q] + width_of[q]));
        }
        generators.push_back(CircleHomeo::from_circle_nodes(std::move(nodes)));
    }
    BlowUpResult r;
    r.action = GroupAction(std::move(generators), std::nullopt, action.relations());
    for (const auto& [p, w] : width_of) r.arcs.push_back(Arc{arc_start[p], arc_start[p] + w});
    return r;
}

namespace {

// Image of an arc under h as an arc with start in [0, 1).
Arc image_arc(const CircleHomeo& h, const Arc& a) {
    Rational s = h.sigma().eval(a.start);
    Rational e = h.sigma().eval(a.end);
    return make_arc(s, e);
}

bool in_open_arc(const std::vector<Arc>& arcs, const Rational& x) {
    for (const Arc& a : arcs) {
        for (int k = -1; k <= 0; ++k) {
            if (a.start + k < x && x < a.end + k) return true;
        }
    }
    return false;
}

}  // namespace

CollapseResult collapse(const GroupAction& action, const std::vector<Arc>& arcs) {
    check_arc_system(arcs);
    for (const CircleHomeo& g : action.generators()) {
        for (const Arc& a : arcs) {
            Arc img = image_arc(g, a);
            if (std::find(arcs.begin(), arcs.end(), img) == arcs.end()) {
                throw Error(ErrorCode::InvalidArcSystem, "arc system is not invariant");
            }
        }
    }
    PLLift phi = devil_staircase(arcs);
    std::vector<CircleHomeo> generators;
    for (const CircleHomeo& g : action.generators()) {
        std::vector<std::pair<Rational, CirclePoint>> nodes;
        std::vector<Rational> sources;
        for (const Node& n : g.sigma().nodes()) {
            if (!in_open_arc(arcs, n.x)) sources.push_back(n.x);
        }
        for (const Arc& a : arcs) sources.push_back(a.start);
        for (const Rational& x : sources) {
            nodes.emplace_back(frac(phi.eval(x)), CirclePoint(phi.eval(g.sigma().eval(x))));
        }
        CircleHomeo quotient = CircleHomeo::from_circle_nodes(std::move(nodes));
        if (!equal_mod_translation(compose(quotient.sigma(), phi), compose(phi, g.sigma()))) {
            throw Error(ErrorCode::ValidationError, "collapsed generator is not equivariant");
        }
        generators.push_back(quotient);
    }
    return {GroupAction(std::move(generators), std::nullopt, action.relations()), phi};
}

}  // namespace rotor
