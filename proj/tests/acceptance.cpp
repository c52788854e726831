// Runs every acceptance criterion and prints one line per criterion.
// Exit status is 0 iff the set of failing criteria equals the --known-failure set.

#include <rotor/suites.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <set>

using namespace rotor;

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    suites::Config config;
    std::vector<int> known;
    bool verbose = false;
    app.add_option("--seed", config.seed, "master seed");
    app.add_option("--scale", config.scale_percent, "sample count scale in percent")->check(CLI::PositiveNumber);
    app.add_option("--known-failure", known, "criterion expected to fail (repeatable)")
        ->check(CLI::Range(1, suites::kCriteria));
    app.add_flag("-v,--verbose", verbose, "print every check");
    CLI11_PARSE(app, argc, argv);

    std::set<int> failing;
    for (int id = 1; id <= suites::kCriteria; ++id) {
        suites::Report r = suites::run_criterion(id, config);
        std::printf("criterion %2d: %s  %s\n", id, r.passed() ? "PASS" : "FAIL", r.title.c_str());
        if (const suites::Check* c = r.failure()) {
            failing.insert(id);
            std::printf("    failed check: %s\n", c->name.c_str());
            if (!c->witness.is_null()) std::printf("    witness: %s\n", c->witness.dump().c_str());
        }
        if (verbose) {
            for (const suites::Check& c : r.checks) {
                std::printf("    [%s] %s (%ld samples)\n", c.passed ? "ok" : "FAIL", c.name.c_str(), c.samples);
            }
        }
        std::fflush(stdout);
    }

    std::set<int> expected(known.begin(), known.end());
    std::printf("%zu of %d criteria pass\n", static_cast<std::size_t>(suites::kCriteria) - failing.size(),
                suites::kCriteria);
    if (failing != expected) {
        for (int id : failing) {
            if (!expected.count(id)) std::printf("unexpected failure: criterion %d\n", id);
        }
        for (int id : expected) {
            if (!failing.count(id)) std::printf("criterion %d was expected to fail but passed\n", id);
        }
        return 1;
    }
    for (int id : expected) std::printf("criterion %d fails as recorded in the README\n", id);
    return 0;
}
