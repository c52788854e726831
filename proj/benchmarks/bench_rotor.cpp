#include <rotor/actions.hpp>
#include <rotor/samples.hpp>
#include <rotor/semiconj.hpp>
#include <rotor/sullivan.hpp>

#include <benchmark/benchmark.h>

using namespace rotor;

static void BM_Compose(benchmark::State& state) {
    samples::Rng rng(1);
    const int breaks = static_cast<int>(state.range(0));
    PLLift f = samples::lift(rng, breaks);
    PLLift g = samples::lift(rng, breaks);
    for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_Compose)->Arg(4)->Arg(16)->Arg(64);

static void BM_Power(benchmark::State& state) {
    samples::Rng rng(2);
    PLLift f = recombine(samples::periodic(rng, 2, 5), 0);
    for (auto _ : state) benchmark::DoNotOptimize(power(f, state.range(0)));
}
BENCHMARK(BM_Power)->Arg(5)->Arg(20)->Arg(80);

static void BM_TranslationNumberExact(benchmark::State& state) {
    samples::Rng rng(3);
    PLLift f = recombine(samples::periodic(rng, 3, 7), 0);
    for (auto _ : state) benchmark::DoNotOptimize(translation_number(f));
}
BENCHMARK(BM_TranslationNumberExact);

static void BM_TranslationNumberInterval(benchmark::State& state) {
    PLLift f = PLLift::from_points(LiftKind::Strict,
                                   {{make_rational(0), make_rational(1, 5)}, {make_rational(1, 3), make_rational(3, 4)}});
    TranslationCaps caps{12, state.range(0)};
    for (auto _ : state) benchmark::DoNotOptimize(translation_number(f, caps));
}
BENCHMARK(BM_TranslationNumberInterval)->Arg(1024)->Arg(4096);

static void BM_BallImages(benchmark::State& state) {
    samples::Rng rng(4);
    GroupAction a = samples::action(rng, 2, false, 3);
    for (auto _ : state) benchmark::DoNotOptimize(ball_images(a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BallImages)->Arg(2)->Arg(3)->Arg(4);

static void BM_SupConstructionExamplePair(benchmark::State& state) {
    auto [rho1, rho2] = samples::example_pair();
    for (auto _ : state) benchmark::DoNotOptimize(construct_semiconjugacy_sup(rho1, rho2));
}
BENCHMARK(BM_SupConstructionExamplePair);

static void BM_SullivanCube(benchmark::State& state) {
    samples::Rng rng(5);
    std::vector<CirclePoint> xs;
    for (long i = 0; i < state.range(0); ++i) xs.push_back(samples::point(rng, 1000));
    for (auto _ : state) benchmark::DoNotOptimize(sullivan_vanishes_on_cube(xs));
}
BENCHMARK(BM_SullivanCube)->Arg(6)->Arg(12);

static void BM_SullivanZeroTest(benchmark::State& state) {
    GroupAction a({DoubleCoverHomeo::rotation(make_rational(1, 7)).homeo()});
    for (auto _ : state) benchmark::DoNotOptimize(sullivan_zero_test(a, CirclePoint(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SullivanZeroTest)->Arg(3)->Arg(7);

BENCHMARK_MAIN();
