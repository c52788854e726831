#pragma once

#include <rotor/io.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rotor::suites {

// Cocycle tables the suites evaluate; replaced by mutated copies in mutation runs.
struct Tables {
    HomCochain2 euler = euler_table();
    NondegCochain2 sullivan = sullivan_table();
};

struct Config {
    std::uint64_t seed = 20240601;
    int scale_percent = 100;  // multiplies every sample count
    Tables tables;
};

struct Check {
    Check() = default;
    explicit Check(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    long samples = 0;
    io::json witness;  // null when passed
};

struct Report {
    Report() = default;
    Report(int i, std::string t) : id(i), title(std::move(t)) {}

    int id = 0;
    std::string title;
    std::vector<Check> checks;

    bool passed() const;
    // First failing check, or null.
    const Check* failure() const;
};

constexpr int kCriteria = 11;

Report run_criterion(int id, const Config& config);
std::vector<Report> run_all(const Config& config);

// Table values after flipping one entry: Euler v -> 1 - v, Sullivan v -> 1 if v = 0 else -v.
Tables flip_euler(const Tables& t, OrbitClass3 c);
Tables flip_sullivan(const Tables& t, NondegClass c);

io::json to_json(const Check& c);
io::json to_json(const Report& r);

}  // namespace rotor::suites
