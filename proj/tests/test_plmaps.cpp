#include <rotor/error.hpp>
#include <rotor/plmap.hpp>
#include <rotor/samples.hpp>

#include <gtest/gtest.h>

using namespace rotor;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }
CirclePoint P(long a, long b = 1) { return CirclePoint(q(a, b)); }

PointTable two_valued_table() {
    return {{P(0), P(0)}, {P(1, 4), P(1, 2)}, {P(1, 2), P(0)}, {P(3, 4), P(1, 2)}};
}

}  // namespace

TEST(Eval, Examples) {
    EXPECT_EQ(PLLift::identity().eval(q(5, 7)), q(5, 7));
    EXPECT_EQ(PLLift::translation(q(1, 3)).eval(q(9, 10)), q(37, 30));
    PLLift two = PLLift::from_points(LiftKind::Strict, {{q(0), q(1, 4)}, {q(1, 2), q(7, 8)}});
    EXPECT_EQ(two.eval(q(1, 4)), q(9, 16));
    EXPECT_EQ(two.eval(q(3, 2)), q(15, 8));
    EXPECT_EQ(two.eval(q(-1, 2)), q(-1, 8));
}

TEST(Compose, TranslationCubed) {
    PLLift t = PLLift::translation(q(1, 3));
    EXPECT_EQ(compose(t, compose(t, t)), PLLift::translation(q(1)));
}

TEST(Compose, MatchesPointwiseOracle) {
    samples::Rng rng(21);
    for (int i = 0; i < 50; ++i) {
        PLLift f = samples::lift(rng, 4);
        PLLift g = samples::lift(rng, 4);
        PLLift fg = compose(f, g);
        for (int k = 0; k < 100; ++k) {
            Rational x = samples::unit_rational(rng, 60) + samples::uniform(rng, -3, 3);
            ASSERT_EQ(fg.eval(x), f.eval(g.eval(x)));
        }
    }
}

TEST(Invert, Examples) {
    EXPECT_EQ(invert(PLLift::identity()), PLLift::identity());
    EXPECT_EQ(invert(PLLift::translation(q(2, 5))), PLLift::translation(q(-2, 5)));
}

TEST(Invert, RoundTrips) {
    samples::Rng rng(22);
    for (int i = 0; i < 200; ++i) {
        PLLift f = samples::lift(rng);
        PLLift fi = invert(f);
        ASSERT_EQ(compose(f, fi), PLLift::identity());
        for (int k = 0; k < 20; ++k) {
            Rational x = samples::unit_rational(rng, 60);
            ASSERT_EQ(f.eval(fi.eval(x)), x);
        }
    }
}

TEST(Decompose, Examples) {
    auto [h, n] = decompose(PLLift::translation(q(7, 3)));
    EXPECT_EQ(h, CircleHomeo::rotation(q(1, 3)));
    EXPECT_EQ(n, 2);
    auto [e, m] = decompose(PLLift::identity());
    EXPECT_EQ(e, CircleHomeo::identity());
    EXPECT_EQ(m, 0);
}

TEST(Decompose, RecombineIsIdentity) {
    samples::Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        PLLift f = samples::lift(rng);
        auto [h, n] = decompose(f);
        ASSERT_EQ(recombine(h, n), f);
        ASSERT_GE(h.sigma().eval(q(0)), 0);
        ASSERT_LT(h.sigma().eval(q(0)), 1);
    }
}

TEST(ValidateGoodLift, Examples) {
    PLLift step = PLLift::raw(LiftKind::Monotone, {{q(5, 7), q(0), q(1), q(1)}}, 1);
    EXPECT_TRUE(validate_good_lift(step));
    EXPECT_EQ(step.eval(q(0)), 0);
    EXPECT_EQ(step.eval(q(5, 7)), 1);
    PLLift doubling = PLLift::raw(LiftKind::Monotone, {{q(0), q(0), q(0), q(0)}}, 2);
    EXPECT_FALSE(validate_good_lift(doubling));
    PLLift reflection = PLLift::raw(LiftKind::Monotone, {{q(0), q(0), q(0), q(0)}}, -1);
    EXPECT_FALSE(validate_good_lift(reflection));
    EXPECT_THROW(PLLift::from_nodes(LiftKind::Monotone, {{q(1, 2), q(1), q(0), q(1)}}), Error);
}

TEST(TupleTest, TwoValuedMap) {
    EXPECT_TRUE(tuple_test(two_valued_table(), 3).passed);
    TupleTestResult r = quadruple_test(two_valued_table());
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.witness.size(), 4u);
    EXPECT_THROW(extract_good_lift(two_valued_table()), Error);
}

TEST(TupleTest, IdentityTable) {
    PointTable id;
    for (long k = 0; k < 7; ++k) id[P(k, 7)] = P(k, 7);
    EXPECT_TRUE(quadruple_test(id).passed);
}

TEST(ExtractGoodLift, Examples) {
    PLLift constant = extract_good_lift({{P(0), P(0)}, {P(1, 2), P(0)}});
    EXPECT_TRUE(validate_good_lift(constant));
    for (long k = 0; k < 10; ++k) EXPECT_EQ(constant.eval(q(k, 10)), 0);
    EXPECT_EQ(constant.eval(q(-1, 10)), -1);

    PointTable id{{P(0), P(0)}, {P(1, 3), P(1, 3)}, {P(2, 3), P(2, 3)}};
    PLLift f = extract_good_lift(id);
    EXPECT_TRUE(validate_good_lift(f));
    for (const auto& [x, y] : id) EXPECT_EQ(CirclePoint(f.eval(x.rep())), y);
}

TEST(ExtractGoodLift, RandomTables) {
    samples::Rng rng(24);
    for (int i = 0; i < 200; ++i) {
        PointTable table = samples::monotone_table(rng, 8);
        PLLift f = extract_good_lift(table);
        ASSERT_TRUE(validate_good_lift(f));
        for (const auto& [x, y] : table) ASSERT_EQ(CirclePoint(f.eval(x.rep())), y);
    }
}

TEST(GoodLifts, ClosedUnderComposition) {
    samples::Rng rng(25);
    for (int i = 0; i < 200; ++i) {
        PLLift f = extract_good_lift(samples::monotone_table(rng, 5));
        PLLift g = i % 2 == 0 ? extract_good_lift(samples::monotone_table(rng, 5)) : samples::lift(rng);
        ASSERT_TRUE(validate_good_lift(compose(f, g)));
    }
}

TEST(GoodLifts, PreserveWeakOrientation) {
    samples::Rng rng(26);
    for (int i = 0; i < 200; ++i) {
        PLLift f = extract_good_lift(samples::monotone_table(rng, 6));
        std::vector<CirclePoint> t = samples::weakly_oriented_tuple(rng, 5);
        ASSERT_TRUE(oriented(t, false));
        std::vector<CirclePoint> image;
        for (const CirclePoint& x : t) image.emplace_back(f.eval(x.rep()));
        ASSERT_TRUE(oriented(image, false));
    }
}

TEST(UpperSemicontinuize, StepAndContinuous) {
    PLLift step = extract_good_lift({{P(0), P(0)}, {P(1, 2), P(1, 2)}});
    EXPECT_EQ(step.eval(q(1, 2)), q(1, 2));
    PLLift usc = upper_semicontinuize(step);
    EXPECT_EQ(usc.eval(q(1, 2)), 0);
    EXPECT_EQ(usc.eval_right(q(1, 2)), q(1, 2));
    EXPECT_EQ(usc.eval(q(1, 4)), 0);

    PLLift stair = devil_staircase({make_arc(q(1, 4), q(1, 2))});
    EXPECT_TRUE(upper_semicontinuize(stair).same_graph(stair));
    PLLift constant = extract_good_lift({{P(0), P(1, 3)}});
    PLLift uc = upper_semicontinuize(constant);
    EXPECT_EQ(CirclePoint(uc.eval(q(1, 5))), P(1, 3));
}

TEST(DevilStaircase, SingleArc) {
    PLLift f = devil_staircase({make_arc(q(1, 4), q(1, 2))});
    EXPECT_TRUE(f.continuous());
    EXPECT_TRUE(validate_good_lift(f));
    EXPECT_EQ(f.eval(q(1, 4)), f.eval(q(1, 2)));
    EXPECT_EQ(f.eval(q(3, 8)), f.eval(q(1, 4)));
    EXPECT_EQ(f.slope_right(q(0)), q(4, 3));
    EXPECT_EQ(f.slope_right(q(1, 2)), q(4, 3));
    EXPECT_EQ(f.slope_right(q(1, 4)), 0);
}

TEST(DevilStaircase, EmptySystem) { EXPECT_TRUE(devil_staircase({}).same_graph(PLLift::identity())); }

TEST(DevilStaircase, FourArcs) {
    std::vector<Arc> arcs{make_arc(q(1, 27), q(2, 27)), make_arc(q(1, 9), q(2, 9)), make_arc(q(1, 3), q(2, 3)),
                          make_arc(q(7, 9), q(8, 9))};
    PLLift f = devil_staircase(arcs);
    ASSERT_TRUE(validate_good_lift(f));
    for (const Arc& a : arcs) {
        EXPECT_EQ(f.eval(a.start), f.eval(a.end));
        EXPECT_EQ(f.eval((a.start + a.end) / 2), f.eval(a.start));
    }
    std::vector<Rational> gaps{q(1, 54), q(5, 54), q(5, 18), q(13, 18), q(17, 18)};
    for (const Rational& x : gaps) EXPECT_GT(f.slope_right(x), 0);
    for (std::size_t i = 1; i < gaps.size(); ++i) EXPECT_LT(f.eval(gaps[i - 1]), f.eval(gaps[i]));
}

TEST(ArcSystem, Rejections) {
    EXPECT_THROW(check_arc_system({make_arc(q(0), q(1, 2)), make_arc(q(1, 4), q(3, 4))}), Error);
    EXPECT_THROW(check_arc_system({make_arc(q(0), q(1, 2)), make_arc(q(1, 2), q(3, 4))}), Error);
    EXPECT_NO_THROW(check_arc_system({make_arc(q(7, 8), q(9, 8)), make_arc(q(1, 4), q(1, 2))}));
}

TEST(SolveShiftedFixed, Translation) {
    EXPECT_TRUE(solve_shifted_fixed(PLLift::translation(q(1, 3)), q(1, 3)).is_full());
    EXPECT_TRUE(solve_shifted_fixed(PLLift::translation(q(1, 3)), q(0)).empty());
}
