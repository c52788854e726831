#include <rotor/error.hpp>
#include <rotor/rational.hpp>

#include <regex>

namespace rotor {

const char* code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::NotADegreeOneMap: return "not-a-degree-one-map";
    case ErrorCode::InvalidArcSystem: return "invalid-arc-system";
    case ErrorCode::InvalidWord: return "invalid-word";
    case ErrorCode::InvalidWidths: return "invalid-widths";
    case ErrorCode::InvalidOrbit: return "invalid-orbit";
    case ErrorCode::NotAPrimitive: return "not-a-primitive";
    case ErrorCode::NotSemiconjugate: return "not-semiconjugate";
    case ErrorCode::Inconclusive: return "inconclusive";
    case ErrorCode::CannotGlue: return "cannot-glue";
    case ErrorCode::Invalid: return "invalid";
    case ErrorCode::TooLarge: return "too-large";
    case ErrorCode::InvalidAction: return "invalid-action";
    case ErrorCode::ValidationError: return "validation-error";
    }
    return "unknown";
}

Rational make_rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    static const std::regex pattern(R"(\s*(-?[0-9]+)(/([0-9]+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) {
        throw Error(ErrorCode::InvalidInput, "not a rational: \"" + text + "\"");
    }
    Integer num(m[1].str());
    Integer den(1);
    if (m[3].matched) den = Integer(m[3].str());
    if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator: \"" + text + "\"");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil_of(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rational frac(const Rational& r) {
    Rational f = r - Rational(floor_of(r));
    return f;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "integer out of range: " + z.get_str());
    return z.get_si();
}

}  // namespace rotor
