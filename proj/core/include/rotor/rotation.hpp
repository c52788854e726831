#pragma once

#include <rotor/plmap.hpp>

#include <optional>

namespace rotor {

// Either an exact rational value certified by a periodic point, or an open
// interval known to contain the value.
struct TranslationNumberResult {
    bool exact = false;
    Rational value;    // exact value
    Rational witness;  // x with h^q(x) = x + p
    long period = 0;   // q
    Rational lo;       // interval bounds
    Rational hi;
    long iterations = 0;

    static TranslationNumberResult make_exact(const Rational& value, const Rational& witness, long period);
    static TranslationNumberResult make_interval(const Rational& lo, const Rational& hi, long iterations);

    // For exact results, equality; for intervals, lo < t < hi.
    bool contains(const Rational& t) const;
};

struct TranslationCaps {
    long max_period = 12;
    long max_iters = 4096;
};

// floor(h(0)); at distance < 1 from the translation number.
long t_floor(const PLLift& h);

TranslationNumberResult translation_number(const PLLift& h, const TranslationCaps& caps = {});

// Result taken mod 1: exact values land in [0, 1); intervals are shifted so lo is in [0, 1).
TranslationNumberResult reduce_mod_one(const TranslationNumberResult& t);

}  // namespace rotor
