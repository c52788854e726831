#pragma once

#include <rotor/group_action.hpp>
#include <rotor/sullivan.hpp>

#include <random>
#include <vector>

namespace rotor::samples {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);  // inclusive
// Rational in [0, 1) with denominator at most max_den.
Rational unit_rational(Rng& rng, long max_den = 24);
CirclePoint point(Rng& rng, long max_den = 24);
// Mostly generic points, sometimes drawn from the quarter grid so that
// coincidences and antipodal pairs occur.
CirclePoint mixed_point(Rng& rng);
std::vector<CirclePoint> mixed_points(Rng& rng, std::size_t n);
// n distinct sorted values in [0, 1).
std::vector<Rational> distinct_sorted(Rng& rng, std::size_t n, long max_den = 24);

// PL homeomorphism with 1..max_breaks breakpoints.
CircleHomeo homeo(Rng& rng, int max_breaks = 6);
// The same with an integer shift in [-2, 2] on top of sigma.
PLLift lift(Rng& rng, int max_breaks = 6);
// PL homeomorphism with a fixed point.
CircleHomeo homeo_with_fixed_point(Rng& rng, int max_breaks = 6);
// Homeomorphism fixing every point j/q, with extra breakpoints inside the gaps.
CircleHomeo orbit_fixing(Rng& rng, long q, int breaks_per_gap = 2);
// (orbit-fixing map) after R_{p/q}, conjugated by a random map: rotation number p/q with
// a periodic orbit, usually not conjugate to the rotation.
CircleHomeo periodic(Rng& rng, long p, long q);
CircleHomeo conjugate(const CircleHomeo& h, const CircleHomeo& g);  // g h g^-1

// p/q in lowest terms with 1 <= q <= max_q and 0 <= p < q.
std::pair<long, long> fraction(Rng& rng, long max_q);

// Weakly order preserving table on distinct points.
PointTable monotone_table(Rng& rng, std::size_t size);
// Weakly positively oriented tuple of the given length.
std::vector<CirclePoint> weakly_oriented_tuple(Rng& rng, std::size_t n);

GroupAction action(Rng& rng, int rank, bool with_lifts, int max_breaks = 4);
Word word(Rng& rng, int rank, int max_length);

DoubleCoverHomeo double_cover_homeo(Rng& rng, int max_breaks = 4);
// Rank-1 or rank-2 action by double cover homeomorphisms; sometimes with a common
// fixed pair of antipodal points.
GroupAction double_cover_action(Rng& rng);

// Map u with nodes 0 -> 0, 1/4 -> 3/8, 1/2 -> 1/2, 3/4 -> 7/8.
PLLift example_u();
// The pair (x + 1/2, u + 1/2): same rotation number 1/2, semi-conjugate, not conjugate.
std::pair<GroupAction, GroupAction> example_pair();

}  // namespace rotor::samples
