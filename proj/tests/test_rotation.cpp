#include <rotor/actions.hpp>
#include <rotor/rotation.hpp>
#include <rotor/samples.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace rotor;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// Floating-point evaluation of a lift straight from its nodes.
double eval_double(const PLLift& f, double x) {
    const auto& nodes = f.nodes();
    const double k = std::floor(x);
    const double t = x - k;
    const auto n = nodes.size();
    auto node = [&](long i, int which) {
        long period = static_cast<long>(std::floor(static_cast<double>(i) / static_cast<double>(n)));
        const Node& nd = nodes[static_cast<std::size_t>(i - period * static_cast<long>(n))];
        const Rational& v = which == 0 ? nd.x : which == 1 ? nd.left : which == 2 ? nd.point : nd.right;
        double shift = which == 0 ? static_cast<double>(period) : static_cast<double>(period * f.rise());
        return v.get_d() + shift;
    };
    long i = -1;
    while (i + 1 <= static_cast<long>(n) && node(i + 1, 0) <= t) ++i;
    double base = k * static_cast<double>(f.rise());
    if (node(i, 0) == t) return base + node(i, 2);
    double x0 = node(i, 0), x1 = node(i + 1, 0);
    double y0 = node(i, 3), y1 = node(i + 1, 1);
    return base + y0 + (y1 - y0) * (t - x0) / (x1 - x0);
}

double long_run_average(const PLLift& f, long steps) {
    double x = 0;
    for (long i = 0; i < steps; ++i) x = eval_double(f, x);
    return x / static_cast<double>(steps);
}

}  // namespace

TEST(TFloor, Examples) {
    EXPECT_EQ(t_floor(PLLift::translation(q(5, 2))), 2);
    EXPECT_EQ(t_floor(PLLift::translation(q(-1, 3))), -1);
    EXPECT_EQ(t_floor(PLLift::identity()), 0);
}

TEST(TranslationNumber, Examples) {
    TranslationNumberResult t = translation_number(PLLift::translation(q(2, 3)));
    ASSERT_TRUE(t.exact);
    EXPECT_EQ(t.value, q(2, 3));
    EXPECT_EQ(t.period, 3);
}

TEST(TranslationNumber, ConjugatedHalfTurn) {
    samples::Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        PLLift g = samples::lift(rng);
        PLLift h = compose(g, compose(PLLift::translation(q(1, 2)), invert(g)));
        TranslationNumberResult t = translation_number(h);
        ASSERT_TRUE(t.exact);
        ASSERT_EQ(t.value, q(1, 2));
        ASSERT_EQ(power(h, t.period).eval(t.witness), t.witness + t.value * t.period);
    }
}

TEST(TranslationNumber, IntervalContainsLongRunAverage) {
    samples::Rng rng(32);
    TranslationCaps caps;
    int found = 0;
    for (int i = 0; i < 400 && found < 3; ++i) {
        std::vector<Rational> xs = samples::distinct_sorted(rng, 2, 40);
        std::vector<Rational> ys = samples::distinct_sorted(rng, 2, 40);
        PLLift f = PLLift::from_points(LiftKind::Strict, {{xs[0], ys[0]}, {xs[1], ys[1]}});
        TranslationNumberResult t = translation_number(f, caps);
        if (t.exact) continue;
        ++found;
        EXPECT_LE(t.hi - t.lo, q(2, caps.max_iters));
        double avg = long_run_average(f, 100000);
        EXPECT_GT(avg, t.lo.get_d() - 1e-4);
        EXPECT_LT(avg, t.hi.get_d() + 1e-4);
        TranslationNumberResult longer = translation_number(f, {40, 1 << 14});
        if (longer.exact) {
            EXPECT_TRUE(t.contains(longer.value));
        } else {
            EXPECT_LE(t.lo, longer.lo);
            EXPECT_LE(longer.hi, t.hi);
        }
    }
    EXPECT_GT(found, 0);
}

TEST(TranslationNumber, Homogeneity) {
    samples::Rng rng(33);
    for (int i = 0; i < 40; ++i) {
        auto [p, qq] = samples::fraction(rng, 4);
        PLLift h = recombine(samples::periodic(rng, p, qq), samples::uniform(rng, -1, 1));
        TranslationNumberResult t = translation_number(h);
        ASSERT_TRUE(t.exact);
        for (long n : {2L, 3L, 5L}) {
            TranslationNumberResult tn = translation_number(power(h, n));
            if (tn.exact) {
                ASSERT_EQ(tn.value, t.value * n);
            }
        }
    }
}

TEST(TranslationNumber, IntegerShiftEquivariance) {
    samples::Rng rng(34);
    for (int i = 0; i < 60; ++i) {
        PLLift h = samples::lift(rng, 4);
        long m = samples::uniform(rng, -3, 3);
        TranslationNumberResult a = translation_number(h);
        TranslationNumberResult b = translation_number(shift(h, q(m)));
        ASSERT_EQ(a.exact, b.exact);
        if (a.exact) {
            ASSERT_EQ(b.value, a.value + m);
        } else {
            ASSERT_EQ(b.lo, a.lo + m);
            ASSERT_EQ(b.hi, a.hi + m);
        }
    }
}

TEST(RotationNumber, Examples) {
    TranslationNumberResult r = rotation_number(GroupAction::cyclic(PLLift::translation(q(3, 7))));
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.value, q(3, 7));
    r = rotation_number(GroupAction::cyclic(PLLift::translation(q(10, 7))));
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.value, q(3, 7));
    r = rotation_number(GroupAction({CircleHomeo::identity()}));
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.value, 0);
    samples::Rng rng(35);
    r = rotation_number(GroupAction({samples::homeo_with_fixed_point(rng)}));
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.value, 0);
}

TEST(RotationNumber, ReduceModOne) {
    TranslationNumberResult t = TranslationNumberResult::make_interval(q(-7, 5), q(-6, 5), 10);
    TranslationNumberResult r = reduce_mod_one(t);
    EXPECT_EQ(r.lo, q(3, 5));
    EXPECT_EQ(r.hi, q(4, 5));
}
