#pragma once

#include <rotor/actions.hpp>

#include <optional>

namespace rotor {

// Integer-valued function on R, invariant under integer translation: its value at
// each breakpoint and on the open piece after it.
struct StepTable {
    std::vector<Rational> x;
    std::vector<long> at;
    std::vector<long> after;

    std::optional<long> constant() const;
    long eval(const Rational& t) const;
};

// a - b as a step table, or none if the difference is not integer-valued everywhere.
std::optional<StepTable> integer_difference(const PLLift& a, const PLLift& b);

// rho1(g) phi = phi rho2(g) for every generator, phi given by a good lift.
bool check_left_semiconjugacy(const GroupAction& rho1, const GroupAction& rho2, const PLLift& phi);

struct SemiConjReport {
    bool equivariant = false;
    std::vector<StepTable> n_gamma;           // one per generator
    std::vector<std::optional<long>> constants;
    std::optional<std::vector<PLLift>> normalized_lifts;  // rho1 lifts shifted by -n_gamma
};

// n_gamma(x) = rho1~(g) phi~(x) - phi~(rho2~(g) x) per generator. Both actions need lifts.
SemiConjReport analyze_n_gamma(const GroupAction& rho1, const GroupAction& rho2, const PLLift& phi);

struct InvariantSets {
    CircleSet k_minus;  // points that are the least element of their level set
    CircleSet k_plus;   // points that are the largest element of their level set
};

InvariantSets injective_invariant_sets(const PLLift& phi);

struct SupConstruction {
    enum class Status { Stabilized, Diverged, Stalled, Unresolved };
    Status status = Status::Unresolved;
    PLLift phi;
    int radius = 0;          // radius of the last finite stage computed
    bool from_limit = false; // phi is the exact limit rather than a finite stage
    bool verified = false;   // check_left_semiconjugacy passed
};

const char* status_name(SupConstruction::Status s);

struct SupOptions {
    int ball_radius = 6;
    int grid = 64;  // grid points per period for the stall test
    TranslationCaps caps;
};

// phi~_N(x) = max over words w with |w| <= N of rho1~(w)^-1 rho2~(w)(x). Stabilized when two
// consecutive stages agree, diverged when some stage exceeds x + 2 somewhere (impossible for
// matched lifts) or the exact translation numbers of a Z-pair differ. For Z-pairs with equal
// exact rotation number where one side is a translation, the sup over all of Z is computed
// in closed form once the ball covers one period.
SupConstruction construct_semiconjugacy_sup(const GroupAction& rho1, const GroupAction& rho2,
                                            const SupOptions& options = {});

// Shifts rho2's lift by the integer making the exact translation numbers equal.
// Throws Error(NotSemiconjugate) if they differ mod 1, Error(Inconclusive) if either is not exact.
GroupAction match_lifts(const GroupAction& rho1, const GroupAction& rho2, const TranslationCaps& caps = {});

struct Straightening {
    bool conclusive = false;
    TranslationNumberResult rotation_number;
    std::optional<GroupAction> rotation;  // the rotation action, lifted by x + p/q
    SupConstruction to_rotation;          // from the rotation to rho
    SupConstruction from_rotation;        // from rho to the rotation
};

Straightening straighten_to_rotation(const GroupAction& rho, const SupOptions& options = {});

struct Gluing {
    GroupAction action;
    PLLift phi1;  // collapses the arcs coming from rho2
    PLLift phi2;  // collapses the arcs coming from rho1
    std::vector<Arc> u_arcs;
    std::vector<Arc> v_arcs;
};

// Throws Error(Invalid) on size mismatch, Error(InvalidOrbit) on a non-invariant orbit,
// Error(CannotGlue) when some generator permutes the orbits differently.
Gluing glue_finite_orbit_actions(const GroupAction& rho1, const GroupAction& rho2,
                                 const std::vector<CirclePoint>& orbit1, const std::vector<CirclePoint>& orbit2);

// Least fixed point of f at or above y, as a monotone lift. f must have a fixed point.
PLLift next_fixed_point_map(const PLLift& f);

}  // namespace rotor
