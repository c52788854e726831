#pragma once

#include <rotor/circle.hpp>
#include <rotor/circle_set.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace rotor {

enum class LiftKind { Strict, Monotone };

// One breakpoint of a PL lift: left limit, value at the point, right limit.
struct Node {
    Rational x;
    Rational left;
    Rational point;
    Rational right;

    friend bool operator==(const Node& a, const Node& b) {
        return a.x == b.x && a.left == b.left && a.point == b.point && a.right == b.right;
    }
};

// Piecewise-linear map R -> R given by its breakpoints in [0, 1). Between
// consecutive breakpoints it interpolates affinely from the right limit to the
// next left limit; f(x + 1) = f(x) + rise. Valid lifts have rise 1.
class PLLift {
public:
    PLLift() : PLLift(identity()) {}

    // Validates and canonicalizes; throws Error(InvalidInput) unless the data is a
    // strict homeomorphism lift (Strict) or a good lift (Monotone).
    static PLLift from_nodes(LiftKind kind, std::vector<Node> nodes);
    // Continuous data given as (x, f(x)) pairs with x in [0, 1).
    static PLLift from_points(LiftKind kind, const std::vector<std::pair<Rational, Rational>>& points);
    // No validation; for inspecting arbitrary data with validate_good_lift.
    static PLLift raw(LiftKind kind, std::vector<Node> nodes, long rise);

    static PLLift identity();
    static PLLift translation(const Rational& c);

    LiftKind kind() const { return kind_; }
    long rise() const { return rise_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    bool continuous() const;

    Rational operator()(const Rational& x) const { return eval(x); }
    Rational eval(const Rational& x) const;
    Rational eval_left(const Rational& x) const;
    Rational eval_right(const Rational& x) const;
    // Slope of the affine piece just left (right) of x.
    Rational slope_left(const Rational& x) const;
    Rational slope_right(const Rational& x) const;

    // Same function, ignoring the kind tag.
    bool same_graph(const PLLift& other) const { return rise_ == other.rise_ && nodes_ == other.nodes_; }
    friend bool operator==(const PLLift& a, const PLLift& b) { return a.kind_ == b.kind_ && a.same_graph(b); }
    friend bool operator!=(const PLLift& a, const PLLift& b) { return !(a == b); }

private:
    PLLift(LiftKind kind, std::vector<Node> nodes, long rise)
        : kind_(kind), nodes_(std::move(nodes)), rise_(rise) {}

    void canonicalize();
    // Index of the breakpoint at or before t in [0, 1); -1 if t precedes all.
    long locate(const Rational& t) const;
    Node node_at(long i) const;  // breakpoint i with periodic extension to all of Z

    LiftKind kind_ = LiftKind::Strict;
    std::vector<Node> nodes_;
    long rise_ = 1;

    friend bool validate_good_lift(const PLLift& f);
    friend bool validate_strict(const PLLift& f);
};

bool validate_good_lift(const PLLift& f);
bool validate_strict(const PLLift& f);

// f after g.
PLLift compose(const PLLift& f, const PLLift& g);
// Throws Error(InvalidInput) on Monotone input.
PLLift invert(const PLLift& f);
// x -> f(x) + c.
PLLift shift(const PLLift& f, const Rational& c);
PLLift pointwise_max(const PLLift& f, const PLLift& g);
// n-fold composite; n may be negative for strict lifts.
PLLift power(const PLLift& f, long n);

// Element of Homeo+(S^1); stores sigma(h), the lift with value at 0 in [0, 1).
class CircleHomeo {
public:
    CircleHomeo() = default;
    // Any strict lift of the homeomorphism; it is normalized to sigma(h).
    explicit CircleHomeo(const PLLift& any_lift);

    static CircleHomeo identity() { return CircleHomeo(); }
    static CircleHomeo rotation(const Rational& alpha) { return CircleHomeo(PLLift::translation(alpha)); }
    // Strictly increasing circle map through the given nodes (x in [0, 1), images on the circle);
    // affine in between. Throws Error(InvalidInput) if the nodes are not cyclically increasing.
    static CircleHomeo from_circle_nodes(std::vector<std::pair<Rational, CirclePoint>> nodes);

    const PLLift& sigma() const { return sigma_; }
    CirclePoint operator()(const CirclePoint& x) const { return CirclePoint(sigma_.eval(x.rep())); }

    friend bool operator==(const CircleHomeo& a, const CircleHomeo& b) { return a.sigma_ == b.sigma_; }
    friend bool operator!=(const CircleHomeo& a, const CircleHomeo& b) { return !(a == b); }

private:
    PLLift sigma_;
};

CircleHomeo compose(const CircleHomeo& a, const CircleHomeo& b);
CircleHomeo invert(const CircleHomeo& h);

// (sigma(p(h)), floor(h(0))), so that h = sigma(p(h)) + n.
std::pair<CircleHomeo, long> decompose(const PLLift& lift);
PLLift recombine(const CircleHomeo& h, long n);

// Solutions of f(x) = x + c on the circle, for a strict lift f.
CircleSet solve_shifted_fixed(const PLLift& f, const Rational& c);

// Finite table of a circle map.
using PointTable = std::map<CirclePoint, CirclePoint>;

struct TupleTestResult {
    bool passed = true;
    bool exhaustive = true;
    std::vector<CirclePoint> witness;  // a weakly oriented tuple whose image is not
};

// Every weakly positively oriented k-tuple from the domain maps to a weakly
// positively oriented one. Exhaustive for |domain| <= 40, otherwise sampled.
TupleTestResult tuple_test(const PointTable& table, int arity);
inline TupleTestResult quadruple_test(const PointTable& table) { return tuple_test(table, 4); }

// Right-continuous step good lift agreeing with the table.
// Throws Error(NotADegreeOneMap) if the quadruple test fails.
PLLift extract_good_lift(const PointTable& table);

// Point values replaced by left limits.
PLLift upper_semicontinuize(const PLLift& f);

// Closed arc [start, end] of the circle; start in [0, 1), end >= start, end - start < 1.
struct Arc {
    Rational start;
    Rational end;

    Rational length() const { return end - start; }
    friend bool operator==(const Arc& a, const Arc& b) { return a.start == b.start && a.end == b.end; }
};

Arc make_arc(const Rational& start, const Rational& end);
// Throws Error(InvalidArcSystem) if arcs overlap or total length >= 1.
void check_arc_system(const std::vector<Arc>& arcs);
// Continuous monotone lift collapsing each arc; value 0 at 0 after collapsing.
PLLift devil_staircase(const std::vector<Arc>& arcs);

}  // namespace rotor
