#pragma once

#include <rotor/cocycles.hpp>
#include <rotor/group_action.hpp>

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace rotor {

// Homeomorphism of the double cover, modeled on R/Z with antipode x -> x + 1/2.
class DoubleCoverHomeo {
public:
    DoubleCoverHomeo() = default;
    // Throws Error(InvalidAction) unless lift(x + 1/2) = lift(x) + 1/2.
    explicit DoubleCoverHomeo(const PLLift& lift);
    // Strict map through (x, y) pairs with x in [0, 1/2), extended by the antipode.
    static DoubleCoverHomeo from_half_points(const std::vector<std::pair<Rational, Rational>>& points);
    static DoubleCoverHomeo rotation(const Rational& alpha) { return DoubleCoverHomeo(PLLift::translation(alpha)); }

    const CircleHomeo& homeo() const { return homeo_; }
    CirclePoint operator()(const CirclePoint& x) const { return homeo_(x); }

private:
    CircleHomeo homeo_;
};

bool is_antipode_equivariant(const PLLift& lift);
// The induced map on the quotient by the antipode: y -> 2 h(y / 2).
CircleHomeo project(const DoubleCoverHomeo& h);
// The quotient map itself, x -> 2x.
CirclePoint double_point(const CirclePoint& x);

// No two entries equal or antipodal.
bool is_nondegenerate(const std::vector<CirclePoint>& points);

// Non-degenerate orbits on triples. The six permutation classes hold triples inside an
// open half-circle; Plus and Minus hold triples whose hull contains the center.
enum class NondegClass { Id, T01, T02, T12, C012, C021, Plus, Minus };

constexpr std::array<NondegClass, 8> all_nondeg_classes = {NondegClass::Id,   NondegClass::T01,  NondegClass::T02,
                                                           NondegClass::T12,  NondegClass::C012, NondegClass::C021,
                                                           NondegClass::Plus, NondegClass::Minus};

const char* nondeg_class_name(NondegClass c);
// Throws Error(Invalid) on a degenerate triple.
NondegClass classify_nondeg_triple(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z);
// Built from x0 = 0, x1 = 1/8, x2 = 1/4.
std::array<CirclePoint, 3> nondeg_representative(NondegClass c);

struct NondegCochain2 {
    long fid = 0;
    long f01 = 0;
    long f02 = 0;
    long f12 = 0;
    long f012 = 0;
    long f021 = 0;
    long fplus = 0;
    long fminus = 0;

    long at(NondegClass c) const;
    long& at(NondegClass c);

    friend bool operator==(const NondegCochain2&, const NondegCochain2&) = default;
};

NondegCochain2 sullivan_table();
// Values of an arbitrary invariant function on the eight representatives.
NondegCochain2 restrict_to_nondeg(const std::function<long(const CirclePoint&, const CirclePoint&, const CirclePoint&)>& f);
// Composition of a circle cochain with the quotient map x -> 2x.
NondegCochain2 pullback_by_double(const HomCochain2& f);

struct NondegAnalysis {
    bool is_cocycle = false;
    std::optional<long> class_index;  // f_+ - 2 f^+ + f^-
};

NondegAnalysis analyze_nondeg_cochain2(const NondegCochain2& f);
NondegCochain2 nondeg_coboundary(long w_plus, long w_minus);

// Sullivan cocycle: orientation sign when all cyclic gaps are below 1/2, else 0.
// Degenerate triples are perturbed symbolically: x gets the largest nudge, then y, then z.
long sullivan_eval(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z);
// The same extension for any table on the eight classes.
long evaluate_nondeg(const NondegCochain2& table, const CirclePoint& x, const CirclePoint& y, const CirclePoint& z);

// Contained in a half-open half-circle [a, a + 1/2). Throws Error(Invalid) on empty input.
bool is_small(const std::vector<CirclePoint>& points);
// Brute force over X^3; throws Error(TooLarge) above 12 distinct points.
bool sullivan_vanishes_on_cube(const std::vector<CirclePoint>& points);

// Throws Error(InvalidAction) unless every generator commutes with the antipode.
WordTripleFunction pullback_sullivan(const GroupAction& action, const CirclePoint& x,
                                     const NondegCochain2& table = sullivan_table());

struct ZeroTest {
    bool vanished = true;
    std::optional<std::array<Word, 3>> witness;
    std::size_t orbit_points = 0;
};

// Evaluates the pullback on all triples of orbit points reached by the word ball.
// Throws Error(TooLarge) above 200 distinct orbit points.
ZeroTest sullivan_zero_test(const GroupAction& action, const CirclePoint& x, int radius,
                            const NondegCochain2& table = sullivan_table());

}  // namespace rotor
