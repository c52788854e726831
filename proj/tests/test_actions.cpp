#include <rotor/actions.hpp>
#include <rotor/error.hpp>
#include <rotor/samples.hpp>

#include <gtest/gtest.h>

using namespace rotor;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }
CirclePoint P(long a, long b = 1) { return CirclePoint(q(a, b)); }

CircleHomeo fixing_zero_and_half() { return decompose(samples::example_u()).first; }

CircleHomeo fixing_zero_and_third() {
    return CircleHomeo::from_circle_nodes({{q(0), P(0)}, {q(1, 6), P(1, 4)}, {q(1, 3), P(1, 3)}, {q(2, 3), P(3, 4)}});
}

// Only 1/4 is fixed; everything else moves forward.
CircleHomeo fixing_quarter() {
    return CircleHomeo::from_circle_nodes({{q(1, 4), P(1, 4)}, {q(1, 2), P(3, 4)}, {q(3, 4), P(7, 8)}});
}

}  // namespace

TEST(Words, Evaluation) {
    samples::Rng rng(51);
    GroupAction a = samples::action(rng, 2, false, 3);
    EXPECT_EQ(evaluate_word(a, {}), CircleHomeo::identity());
    Word w = samples::word(rng, 2, 5);
    EXPECT_EQ(compose(evaluate_word(a, w), evaluate_word(a, inverse_word(w))), CircleHomeo::identity());
    EXPECT_THROW(evaluate_word(a, {3}), Error);
    GroupAction rot({CircleHomeo::rotation(q(1, 3)), CircleHomeo::rotation(q(1, 4))});
    EXPECT_EQ(evaluate_word(rot, {1, 2, -1, -2}), CircleHomeo::identity());
    EXPECT_EQ(word_ball(2, 2).size(), 1u + 4u + 12u);
    EXPECT_EQ(reduce({1, 2, -2, -1, 2}), (Word{2}));
}

TEST(Relations, Checked) {
    EXPECT_NO_THROW(GroupAction({CircleHomeo::rotation(q(1, 3))}, std::nullopt, {{1, 1, 1}}));
    EXPECT_THROW(GroupAction({CircleHomeo::rotation(q(1, 3))}, std::nullopt, {{1, 1}}), Error);
    EXPECT_THROW(GroupAction({CircleHomeo::rotation(q(1, 3))}, std::vector<PLLift>{PLLift::translation(q(1, 2))}),
                 Error);
}

TEST(FixedSet, Examples) {
    EXPECT_TRUE(fixed_set(CircleHomeo::rotation(q(1, 3))).empty());
    EXPECT_TRUE(fixed_set(CircleHomeo::identity()).is_full());
    EXPECT_EQ(fixed_set(fixing_zero_and_half()), CircleSet::from_points({P(0), P(1, 2)}));
}

TEST(GlobalFixedSet, Examples) {
    EXPECT_TRUE(global_fixed_set(GroupAction({CircleHomeo::identity()})).is_full());
    EXPECT_TRUE(global_fixed_set(GroupAction({CircleHomeo::rotation(q(1, 2))})).empty());
    GroupAction two({fixing_zero_and_half(), fixing_zero_and_third()});
    EXPECT_EQ(global_fixed_set(two), CircleSet::from_points({P(0)}));
}

TEST(FiniteOrbitSearch, Examples) {
    auto o = finite_orbit_search(GroupAction({CircleHomeo::rotation(q(2, 5))}), 12);
    ASSERT_TRUE(o.has_value());
    EXPECT_EQ(o->size(), 5u);
    o = finite_orbit_search(GroupAction({fixing_zero_and_half(), fixing_zero_and_third()}), 12);
    ASSERT_TRUE(o.has_value());
    EXPECT_EQ(o->size(), 1u);
    o = finite_orbit_search(GroupAction({CircleHomeo::rotation(q(1, 3)), CircleHomeo::rotation(q(1, 4))}), 12);
    ASSERT_TRUE(o.has_value());
    EXPECT_LE(o->size(), 12u);
    EXPECT_TRUE(is_invariant(GroupAction({CircleHomeo::rotation(q(1, 3)), CircleHomeo::rotation(q(1, 4))}), *o));
    EXPECT_FALSE(finite_orbit_search(GroupAction({CircleHomeo::rotation(q(1, 13))}), 12).has_value());
}

TEST(FiniteOrbitSearch, FindsPeriodicOrbits) {
    samples::Rng rng(52);
    for (int i = 0; i < 30; ++i) {
        auto [p, qq] = samples::fraction(rng, 5);
        GroupAction a({samples::periodic(rng, p, qq)});
        auto o = finite_orbit_search(a, 12);
        ASSERT_TRUE(o.has_value());
        ASSERT_EQ(static_cast<long>(o->size()), qq);
        ASSERT_TRUE(is_invariant(a, *o));
    }
}

TEST(SupFixedPoint, Examples) {
    SupFixedPointResult r = sup_fixed_point(GroupAction::cyclic(PLLift::identity()), 3);
    EXPECT_EQ(r.status, SupFixedPointResult::Status::Stabilized);
    EXPECT_EQ(r.value, 0);
    r = sup_fixed_point(GroupAction::cyclic(PLLift::translation(q(1, 2))), 3);
    EXPECT_EQ(r.status, SupFixedPointResult::Status::Unbounded);
    PLLift lift = fixing_quarter().sigma();
    ASSERT_EQ(lift.eval(q(1, 4)), q(1, 4));
    r = sup_fixed_point(GroupAction::cyclic(lift), 4);
    ASSERT_EQ(r.status, SupFixedPointResult::Status::Stabilized);
    EXPECT_EQ(r.value, q(1, 4));
}

TEST(SupFixedPoint, StabilizedValueIsCommonFixedPoint) {
    samples::Rng rng(53);
    for (int i = 0; i < 60; ++i) {
        GroupAction a = i % 2 == 0 ? GroupAction::cyclic(recombine(samples::homeo_with_fixed_point(rng), 0))
                                   : samples::action(rng, 2, true, 3);
        SupFixedPointResult r = sup_fixed_point(a, 3);
        if (r.status != SupFixedPointResult::Status::Stabilized) continue;
        for (const PLLift& l : a.lifts()) ASSERT_EQ(l.eval(r.value), r.value);
        ASSERT_GE(r.value, 0);
    }
}

TEST(LiftCorrespondence, TrivialAndRoundTrip) {
    GroupAction trivial({CircleHomeo::identity(), CircleHomeo::identity()});
    GroupAction lifted = lift_correspondence(trivial, [](const Word&) { return 0L; });
    EXPECT_EQ(lifted.lifts(), (std::vector<PLLift>{PLLift::identity(), PLLift::identity()}));
    samples::Rng rng(54);
    for (int i = 0; i < 20; ++i) {
        GroupAction a = samples::action(rng, 2, true, 3);
        WordFunction u = primitive_from_lift(a);
        ASSERT_EQ(lift_correspondence(a.without_lifts(), u).lifts(), a.lifts());
    }
    EXPECT_THROW(lift_correspondence(GroupAction({CircleHomeo::rotation(q(1, 2))}), [](const Word&) { return 0L; }),
                 Error);
}

TEST(LiftCorrespondence, BoundedPrimitiveWithFixedPoint) {
    PLLift lift = fixing_quarter().sigma();
    GroupAction a = GroupAction::cyclic(lift);
    WordFunction u = primitive_from_lift(a);
    for (int n = -100; n <= 100; n += 10) {
        Word w(static_cast<std::size_t>(std::abs(n)), n < 0 ? -1 : 1);
        long v = u(w);
        EXPECT_GE(v, -1);
        EXPECT_LE(v, 1);
    }
}

TEST(RotationNumber, FixedPointIffZero) {
    samples::Rng rng(55);
    for (int i = 0; i < 200; ++i) {
        CircleHomeo h = i % 2 == 0 ? samples::homeo_with_fixed_point(rng) : samples::homeo(rng);
        TranslationNumberResult r = rotation_number(GroupAction({h}));
        bool fixed = !fixed_set(h).empty();
        bool zero = r.exact && r.value == 0;
        ASSERT_EQ(fixed, zero);
    }
}

TEST(BlowUp, Examples) {
    BlowUpResult id = blow_up(GroupAction({CircleHomeo::identity()}), {P(1, 3)}, {q(1, 10)});
    EXPECT_EQ(id.action.generators()[0], CircleHomeo::identity());

    GroupAction rot({CircleHomeo::rotation(q(1, 3))});
    BlowUpResult b = blow_up(rot, {P(0), P(1, 3), P(2, 3)}, {q(1, 12), q(1, 12), q(1, 12)});
    EXPECT_EQ(b.arcs.size(), 3u);
    TranslationNumberResult r = rotation_number(b.action);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.value, q(1, 3));
    CollapseResult c = collapse(b.action, b.arcs);
    r = rotation_number(c.action);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.value, q(1, 3));

    EXPECT_THROW(blow_up(rot, {P(0), P(1, 3), P(2, 3)}, {q(1, 2), q(1, 2), q(1, 12)}), Error);
    EXPECT_THROW(blow_up(rot, {P(0), P(1, 3)}, {q(1, 12), q(1, 12)}), Error);
}

TEST(Collapse, EmptySystemAndRejection) {
    samples::Rng rng(56);
    GroupAction a = samples::action(rng, 2, false, 3);
    CollapseResult c = collapse(a, {});
    EXPECT_EQ(c.action, a);
    EXPECT_TRUE(c.phi.same_graph(PLLift::identity()));
    EXPECT_THROW(collapse(GroupAction({CircleHomeo::rotation(q(1, 3))}), {make_arc(q(0), q(1, 10))}), Error);
}

TEST(BlowUp, OutputAcceptedByCollapse) {
    samples::Rng rng(57);
    for (int i = 0; i < 30; ++i) {
        auto [p, qq] = samples::fraction(rng, 4);
        GroupAction a({samples::periodic(rng, p, qq)});
        auto orbit = finite_orbit_search(a, 12);
        ASSERT_TRUE(orbit.has_value());
        std::vector<Rational> widths(orbit->size(), q(1, 4 * static_cast<long>(orbit->size())));
        BlowUpResult b = blow_up(a, *orbit, widths);
        CollapseResult c = collapse(b.action, b.arcs);
        for (std::size_t g = 0; g < b.action.generators().size(); ++g) {
            PLLift lhs = compose(c.action.generators()[g].sigma(), c.phi);
            PLLift rhs = compose(c.phi, b.action.generators()[g].sigma());
            ASSERT_TRUE(equal_mod_translation(lhs, rhs));
        }
        TranslationNumberResult r = rotation_number(c.action);
        ASSERT_TRUE(r.exact);
        ASSERT_EQ(r.value, make_rational(p, qq));
    }
}
