#include <rotor/error.hpp>
#include <rotor/rotation.hpp>

namespace rotor {

TranslationNumberResult TranslationNumberResult::make_exact(const Rational& value, const Rational& witness,
                                                            long period) {
    TranslationNumberResult r;
    r.exact = true;
    r.value = value;
    r.witness = witness;
    r.period = period;
    return r;
}

TranslationNumberResult TranslationNumberResult::make_interval(const Rational& lo, const Rational& hi,
                                                               long iterations) {
    TranslationNumberResult r;
    r.lo = lo;
    r.hi = hi;
    r.iterations = iterations;
    return r;
}

bool TranslationNumberResult::contains(const Rational& t) const {
    return exact ? t == value : (lo < t && t < hi);
}

long t_floor(const PLLift& h) { return to_long(floor_of(h.eval(Rational(0)))); }

TranslationNumberResult translation_number(const PLLift& h, const TranslationCaps& caps) {
    if (caps.max_period < 1 || caps.max_iters < 1) throw Error(ErrorCode::InvalidInput, "caps must be positive");
    if (h.kind() != LiftKind::Strict) throw Error(ErrorCode::InvalidInput, "translation number needs a strict lift");
    PLLift hq = h;
    for (long q = 1; q <= caps.max_period; ++q) {
        if (q > 1) hq = compose(h, hq);
        Rational v = hq.eval(Rational(0));
        Integer lo = floor_of(v);
        Integer hi = ceil_of(v);
        for (Integer p = lo; p <= hi; ++p) {
            CircleSet solutions = solve_shifted_fixed(hq, Rational(p));
            if (!solutions.empty()) {
                Rational value = Rational(p) / q;
                value.canonicalize();
                return TranslationNumberResult::make_exact(value, solutions.first_point(), q);
            }
        }
    }
    // |h^n(0) - nT| < 1 once no periodic point exists.
    Rational x(0);
    for (long i = 0; i < caps.max_iters; ++i) x = h.eval(x);
    Rational n(caps.max_iters);
    Rational lo = (x - 1) / n;
    Rational hi = (x + 1) / n;
    return TranslationNumberResult::make_interval(lo, hi, caps.max_iters);
}

TranslationNumberResult reduce_mod_one(const TranslationNumberResult& t) {
    TranslationNumberResult r = t;
    if (t.exact) {
        r.value = frac(t.value);
    } else {
        Rational k = Rational(floor_of(t.lo));
        r.lo -= k;
        r.hi -= k;
    }
    return r;
}

}  // namespace rotor
