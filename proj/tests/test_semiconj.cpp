#include <rotor/actions.hpp>
#include <rotor/cocycles.hpp>
#include <rotor/error.hpp>
#include <rotor/samples.hpp>
#include <rotor/semiconj.hpp>

#include <gtest/gtest.h>

using namespace rotor;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }
CirclePoint P(long a, long b = 1) { return CirclePoint(q(a, b)); }

PLLift floor_map() { return extract_good_lift({{P(0), P(0)}}); }

GroupAction conjugate_action(const GroupAction& a, const CircleHomeo& g) {
    std::vector<CircleHomeo> gens;
    for (const CircleHomeo& h : a.generators()) gens.push_back(samples::conjugate(h, g));
    return GroupAction(gens);
}

GroupAction rotation_action(long p, long qq) {
    return GroupAction::cyclic(PLLift::translation(make_rational(p, qq)));
}

}  // namespace

TEST(IntegerDifference, Steps) {
    auto d = integer_difference(PLLift::identity(), floor_map());
    EXPECT_FALSE(d.has_value());
    auto e = integer_difference(PLLift::translation(q(3)), PLLift::identity());
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(e->constant(), 3);
}

TEST(CheckLeftSemiconjugacy, Examples) {
    samples::Rng rng(61);
    CircleHomeo fixed = samples::homeo_with_fixed_point(rng);
    CirclePoint x0 = fixed_set(fixed).sample(1).front();
    GroupAction rho1({fixed});
    GroupAction rho2({samples::homeo(rng)});
    EXPECT_TRUE(check_left_semiconjugacy(rho1, rho2, extract_good_lift({{P(0), x0}})));

    GroupAction rho = samples::action(rng, 2, false, 3);
    CircleHomeo g = samples::homeo(rng);
    EXPECT_TRUE(check_left_semiconjugacy(conjugate_action(rho, g), rho, g.sigma()));

    EXPECT_FALSE(check_left_semiconjugacy(GroupAction({CircleHomeo::rotation(q(1, 3))}),
                                          GroupAction({CircleHomeo::rotation(q(1, 2))}), PLLift::identity()));
}

TEST(CheckLeftSemiconjugacy, ComposesTransitively) {
    samples::Rng rng(62);
    for (int i = 0; i < 30; ++i) {
        GroupAction rho3 = samples::action(rng, 2, false, 3);
        CircleHomeo k = samples::homeo(rng, 3);
        CircleHomeo g = samples::homeo(rng, 3);
        GroupAction rho2 = conjugate_action(rho3, k);
        GroupAction rho1 = conjugate_action(rho2, g);
        ASSERT_TRUE(check_left_semiconjugacy(rho1, rho2, g.sigma()));
        ASSERT_TRUE(check_left_semiconjugacy(rho2, rho3, k.sigma()));
        ASSERT_TRUE(check_left_semiconjugacy(rho1, rho3, compose(g.sigma(), k.sigma())));
    }
}

TEST(CheckLeftSemiconjugacy, ConstantMapToTrivialAction) {
    samples::Rng rng(63);
    for (int i = 0; i < 50; ++i) {
        GroupAction rho = samples::action(rng, static_cast<int>(samples::uniform(rng, 1, 2)), false, 3);
        GroupAction trivial(std::vector<CircleHomeo>(static_cast<std::size_t>(rho.rank()), CircleHomeo::identity()));
        PLLift constant = extract_good_lift({{P(0), samples::point(rng)}});
        ASSERT_TRUE(check_left_semiconjugacy(trivial, rho, constant));
    }
}

TEST(AnalyzeNGamma, StepExample) {
    GroupAction rho1 = GroupAction::cyclic(PLLift::identity());
    GroupAction rho2 = GroupAction::cyclic(PLLift::translation(q(1, 2)));
    SemiConjReport r = analyze_n_gamma(rho1, rho2, floor_map());
    EXPECT_TRUE(r.equivariant);
    ASSERT_EQ(r.n_gamma.size(), 1u);
    const StepTable& n = r.n_gamma[0];
    EXPECT_FALSE(n.constant().has_value());
    EXPECT_EQ(n.eval(q(0)), 0);
    EXPECT_EQ(n.eval(q(1, 4)), 0);
    EXPECT_EQ(n.eval(q(1, 2)), -1);
    EXPECT_EQ(n.eval(q(3, 4)), -1);
    EXPECT_EQ(n.eval(q(5, 4)), 0);
    EXPECT_EQ(n.eval(q(-1, 4)), -1);
    EXPECT_FALSE(r.normalized_lifts.has_value());
}

TEST(AnalyzeNGamma, ConjugacyGivesZero) {
    samples::Rng rng(64);
    for (int i = 0; i < 30; ++i) {
        GroupAction rho = samples::action(rng, 2, true, 3);
        CircleHomeo g = samples::homeo(rng, 3);
        std::vector<PLLift> lifts;
        for (const PLLift& l : rho.lifts()) lifts.push_back(compose(g.sigma(), compose(l, invert(g.sigma()))));
        GroupAction rho1 = conjugate_action(rho, g).with_lifts(lifts);
        SemiConjReport r = analyze_n_gamma(rho1, rho, g.sigma());
        ASSERT_TRUE(r.equivariant);
        for (const auto& c : r.constants) ASSERT_EQ(c, 0);
        ASSERT_TRUE(r.normalized_lifts.has_value());
        ASSERT_EQ(*r.normalized_lifts, lifts);
    }
}

TEST(InjectiveInvariantSets, Examples) {
    InvariantSets id = injective_invariant_sets(PLLift::identity());
    EXPECT_TRUE(id.k_minus.is_full());
    EXPECT_TRUE(id.k_plus.is_full());

    InvariantSets fl = injective_invariant_sets(floor_map());
    EXPECT_EQ(fl.k_minus, CircleSet::from_points({P(0)}));
    EXPECT_TRUE(fl.k_plus.empty());

    InvariantSets stair = injective_invariant_sets(devil_staircase({make_arc(q(1, 3), q(2, 3))}));
    EXPECT_TRUE(stair.k_minus.contains(P(1, 3)));
    EXPECT_FALSE(stair.k_minus.contains(P(1, 2)));
    EXPECT_FALSE(stair.k_minus.contains(P(2, 3)));
    EXPECT_TRUE(stair.k_minus.contains(P(5, 6)));
    EXPECT_TRUE(stair.k_plus.contains(P(2, 3)));
    EXPECT_FALSE(stair.k_plus.contains(P(1, 3)));
    EXPECT_TRUE(stair.k_plus.contains(P(0)));
}

TEST(InjectiveInvariantSets, TransportEulerValues) {
    samples::Rng rng(65);
    auto [rho1, rho2] = samples::example_pair();
    PLLift phi = construct_semiconjugacy_sup(rho1, rho2).phi;
    SemiConjReport r = analyze_n_gamma(rho1, rho2, phi);
    ASSERT_TRUE(r.normalized_lifts.has_value());
    InvariantSets k = injective_invariant_sets(phi);
    CircleSet kset = k.k_minus.empty() ? k.k_plus : k.k_minus;
    ASSERT_FALSE(kset.empty());
    CirclePoint x = kset.sample(1).front();
    auto f1 = pullback_cocycle(rho1, CirclePoint(phi.eval(x.rep())));
    auto f2 = pullback_cocycle(rho2, x);
    for (int i = 0; i < 200; ++i) {
        Word a = samples::word(rng, 1, 4), b = samples::word(rng, 1, 4), c = samples::word(rng, 1, 4);
        ASSERT_EQ(f1(a, b, c), f2(a, b, c));
    }
}

TEST(ConstructSup, EqualRotations) {
    SupConstruction s = construct_semiconjugacy_sup(rotation_action(1, 3), rotation_action(1, 3));
    EXPECT_EQ(s.status, SupConstruction::Status::Stabilized);
    EXPECT_TRUE(s.verified);
    EXPECT_TRUE(s.phi.same_graph(PLLift::identity()));
    EXPECT_LE(s.radius, 2);
}

TEST(ConstructSup, HalfTurnAgainstPeriodicMap) {
    samples::Rng rng(66);
    for (int i = 0; i < 10; ++i) {
        GroupAction rho2 = GroupAction::cyclic(recombine(samples::periodic(rng, 1, 2), 0));
        GroupAction rho1 = match_lifts(rho2, rotation_action(1, 2));
        SupConstruction s = construct_semiconjugacy_sup(rotation_action(1, 2), match_lifts(rotation_action(1, 2), rho2));
        EXPECT_EQ(s.status, SupConstruction::Status::Stabilized);
        EXPECT_TRUE(s.verified);
        SupConstruction back = construct_semiconjugacy_sup(rho2, rho1);
        EXPECT_EQ(back.status, SupConstruction::Status::Stabilized);
        EXPECT_TRUE(back.verified);
    }
}

TEST(ConstructSup, DifferentRotationsDiverge) {
    EXPECT_EQ(construct_semiconjugacy_sup(rotation_action(1, 3), rotation_action(1, 2)).status,
              SupConstruction::Status::Diverged);
}

TEST(ConstructSup, StabilizesIffRotationNumbersEqual) {
    samples::Rng rng(67);
    for (int i = 0; i < 40; ++i) {
        auto [p1, q1] = samples::fraction(rng, 4);
        auto [p2, q2] = i % 2 == 0 ? std::pair{p1, q1} : samples::fraction(rng, 4);
        GroupAction rot = rotation_action(p1, q1);
        GroupAction pl = GroupAction::cyclic(recombine(samples::periodic(rng, p2, q2), 0));
        bool equal = p1 * q2 == p2 * q1;
        SupOptions opt;
        opt.ball_radius = static_cast<int>(3 * std::max(q1, q2));
        if (equal) {
            GroupAction matched = match_lifts(rot, pl);
            SupConstruction a = construct_semiconjugacy_sup(rot, matched, opt);
            SupConstruction b = construct_semiconjugacy_sup(matched, rot, opt);
            ASSERT_EQ(a.status, SupConstruction::Status::Stabilized);
            ASSERT_EQ(b.status, SupConstruction::Status::Stabilized);
            ASSERT_TRUE(a.verified && b.verified);
        } else {
            ASSERT_THROW(match_lifts(rot, pl), Error);
            ASSERT_EQ(construct_semiconjugacy_sup(rot, pl, opt).status, SupConstruction::Status::Diverged);
        }
    }
}

TEST(MatchLifts, Examples) {
    GroupAction m = match_lifts(rotation_action(1, 3), rotation_action(4, 3));
    EXPECT_EQ(m.lifts()[0], PLLift::translation(q(1, 3)));
    GroupAction same = match_lifts(rotation_action(1, 3), rotation_action(1, 3));
    EXPECT_EQ(same, rotation_action(1, 3));
    try {
        match_lifts(rotation_action(1, 3), rotation_action(1, 2));
        FAIL() << "expected NotSemiconjugate";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSemiconjugate);
    }
}

TEST(Straighten, Examples) {
    Straightening s = straighten_to_rotation(rotation_action(2, 5));
    ASSERT_TRUE(s.conclusive);
    EXPECT_EQ(s.rotation->lifts()[0], PLLift::translation(q(2, 5)));

    samples::Rng rng(68);
    Straightening p = straighten_to_rotation(GroupAction::cyclic(recombine(samples::periodic(rng, 1, 2), 0)));
    ASSERT_TRUE(p.conclusive);
    EXPECT_EQ(p.rotation->generators()[0], CircleHomeo::rotation(q(1, 2)));
    EXPECT_TRUE(p.to_rotation.verified);
    EXPECT_TRUE(p.from_rotation.verified);

    for (int i = 0; i < 400; ++i) {
        std::vector<Rational> xs = samples::distinct_sorted(rng, 2, 40);
        std::vector<Rational> ys = samples::distinct_sorted(rng, 2, 40);
        PLLift f = PLLift::from_points(LiftKind::Strict, {{xs[0], ys[0]}, {xs[1], ys[1]}});
        if (translation_number(f).exact) continue;
        EXPECT_FALSE(straighten_to_rotation(GroupAction::cyclic(f)).conclusive);
        break;
    }
}

TEST(Glue, HalfTurns) {
    Gluing g = glue_finite_orbit_actions(rotation_action(1, 2), rotation_action(1, 2), {P(0), P(1, 2)}, {P(0), P(1, 2)});
    EXPECT_EQ(g.u_arcs.size(), 2u);
    EXPECT_EQ(g.v_arcs.size(), 2u);
    TranslationNumberResult r = rotation_number(g.action);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.value, q(1, 2));
    EXPECT_TRUE(check_left_semiconjugacy(rotation_action(1, 2), g.action, g.phi1));
    EXPECT_TRUE(check_left_semiconjugacy(rotation_action(1, 2), g.action, g.phi2));
}

TEST(Glue, ExamplePairAndJump) {
    auto [rho1, rho2] = samples::example_pair();
    Gluing g = glue_finite_orbit_actions(rho1, rho2, {P(0), P(1, 2)}, {P(0), P(1, 2)});
    EXPECT_TRUE(check_left_semiconjugacy(rho1, g.action, g.phi1));
    EXPECT_TRUE(check_left_semiconjugacy(rho2, g.action, g.phi2));
    SupConstruction s = construct_semiconjugacy_sup(rho1, rho2);
    ASSERT_EQ(s.status, SupConstruction::Status::Stabilized);
    EXPECT_TRUE(s.verified);
    EXPECT_FALSE(s.phi.continuous());
}

TEST(Glue, Errors) {
    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidInput;
    };
    EXPECT_EQ(code([] {
                  glue_finite_orbit_actions(rotation_action(1, 3), rotation_action(1, 2), {P(0), P(1, 3), P(2, 3)},
                                            {P(0), P(1, 2)});
              }),
              ErrorCode::Invalid);
    EXPECT_EQ(code([] {
                  glue_finite_orbit_actions(rotation_action(1, 3), rotation_action(2, 3), {P(0), P(1, 3), P(2, 3)},
                                            {P(0), P(1, 3), P(2, 3)});
              }),
              ErrorCode::CannotGlue);
    EXPECT_EQ(code([] {
                  glue_finite_orbit_actions(rotation_action(1, 2), rotation_action(1, 2), {P(0), P(1, 4)},
                                            {P(0), P(1, 2)});
              }),
              ErrorCode::InvalidOrbit);
}

TEST(NextFixedPointMap, Examples) {
    PLLift f = samples::example_u();
    PLLift u = next_fixed_point_map(f);
    EXPECT_EQ(u.eval(q(0)), 0);
    EXPECT_EQ(u.eval(q(1, 4)), q(1, 2));
    EXPECT_EQ(u.eval(q(1, 2)), q(1, 2));
    EXPECT_EQ(u.eval(q(3, 4)), 1);
    EXPECT_TRUE(next_fixed_point_map(PLLift::identity()).same_graph(PLLift::identity()));
    EXPECT_THROW(next_fixed_point_map(PLLift::translation(q(1, 2))), Error);
}
