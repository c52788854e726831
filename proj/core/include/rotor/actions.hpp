#pragma once

#include <rotor/group_action.hpp>
#include <rotor/rotation.hpp>

#include <functional>
#include <optional>

namespace rotor {

// Exact fixed set of h on the circle.
CircleSet fixed_set(const CircleHomeo& h);
// Points fixed by every generator.
CircleSet global_fixed_set(const GroupAction& action);
// Fixed points of a lift on R, projected to the circle (a Z-periodic set).
CircleSet lift_fixed_set(const PLLift& lift);

// Orbit of x under the generators if it has at most `size_bound` points.
std::optional<std::vector<CirclePoint>> orbit_closure(const GroupAction& action, const CirclePoint& x,
                                                      int size_bound);
bool is_invariant(const GroupAction& action, const std::vector<CirclePoint>& points);

// Smallest finite orbit found among [0] and the fixed points and arc endpoints of
// fixed sets of short words and generator powers. Semi-decision: none means none found.
std::optional<std::vector<CirclePoint>> finite_orbit_search(const GroupAction& action, int size_bound);

struct SupFixedPointResult {
    enum class Status { Stabilized, Unbounded, Growing };
    Status status = Status::Growing;
    Rational value;   // the sup (Stabilized) or the largest value seen (Growing)
    int radius = 0;   // ball radius used
    bool from_ball = false;  // true when the ball maximum itself stabilized
};

// sup of rho~(w)(0) over the group. The ball maximum is reported when it is unchanged
// between the last two radii and fixed by every lifted generator; otherwise the sup is
// settled from the fixed set of the lifted action: it is the least common fixed point
// >= 0, and the orbit of 0 is unbounded when there is none.
SupFixedPointResult sup_fixed_point(const GroupAction& action, int ball_radius);

using WordFunction = std::function<long(const Word&)>;

// Lifts rho~(g) = sigma(rho(g)) - u(g). Checks rho^*c_sigma = du on all pairs from the
// ball of radius `check_radius` and homomorphy of the resulting lifts on the same pairs.
// Throws Error(NotAPrimitive) on the first failing pair.
GroupAction lift_correspondence(const GroupAction& action, const WordFunction& u, int check_radius = 2);
// u(w) = -(rho~(w)(0) - sigma(rho(w))(0)); verified as above. Requires lifts.
WordFunction primitive_from_lift(const GroupAction& action, int check_radius = 2);

// Rotation number of a Z-action, from its lift when present.
TranslationNumberResult rotation_number(const GroupAction& action, const TranslationCaps& caps = {});

struct BlowUpResult {
    GroupAction action;  // without lifts
    std::vector<Arc> arcs;
};

// Replaces each orbit point by an arc of the given width (widths[i] goes with
// orbit[i]); generators map arcs affinely onto arcs.
// Throws Error(InvalidWidths) or Error(InvalidOrbit).
BlowUpResult blow_up(const GroupAction& action, const std::vector<CirclePoint>& orbit,
                     const std::vector<Rational>& widths);

struct CollapseResult {
    GroupAction action;  // without lifts
    PLLift phi;          // devil's staircase of the arcs
};

// Collapses an invariant arc system; rho'(g) phi = phi rho(g) is verified for every
// generator. Throws Error(InvalidArcSystem) if the system is not invariant.
CollapseResult collapse(const GroupAction& action, const std::vector<Arc>& arcs);

// True iff the lifts differ by an integer translation.
bool equal_mod_translation(const PLLift& a, const PLLift& b);

}  // namespace rotor
