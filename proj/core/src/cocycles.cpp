#include <rotor/cocycles.hpp>
#include <rotor/error.hpp>

namespace rotor {

const char* class_name(OrbitClass3 c) {
    switch (c) {
    case OrbitClass3::O0: return "O0";
    case OrbitClass3::O1: return "O1";
    case OrbitClass3::O2: return "O2";
    case OrbitClass3::O3: return "O3";
    case OrbitClass3::Oplus: return "O+";
    case OrbitClass3::Ominus: return "O-";
    }
    return "?";
}

OrbitClass3 classify_triple(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) {
    if (x == y && y == z) return OrbitClass3::O0;
    if (y == z) return OrbitClass3::O1;
    if (x == z) return OrbitClass3::O2;
    if (x == y) return OrbitClass3::O3;
    return orientation(x, y, z) == Orientation::Positive ? OrbitClass3::Oplus : OrbitClass3::Ominus;
}

std::array<CirclePoint, 3> representative(OrbitClass3 c) {
    const CirclePoint a(Rational(0));
    const CirclePoint b(Rational(1, 3));
    const CirclePoint d(Rational(2, 3));
    switch (c) {
    case OrbitClass3::O0: return {a, a, a};
    case OrbitClass3::O1: return {b, a, a};
    case OrbitClass3::O2: return {a, b, a};
    case OrbitClass3::O3: return {a, a, b};
    case OrbitClass3::Oplus: return {a, b, d};
    case OrbitClass3::Ominus: return {b, a, d};
    }
    return {a, a, a};
}

long HomCochain2::at(OrbitClass3 c) const {
    return const_cast<HomCochain2*>(this)->at(c);
}

long& HomCochain2::at(OrbitClass3 c) {
    switch (c) {
    case OrbitClass3::O0: return f0;
    case OrbitClass3::O1: return f1;
    case OrbitClass3::O2: return f2;
    case OrbitClass3::O3: return f3;
    case OrbitClass3::Oplus: return fplus;
    case OrbitClass3::Ominus: return fminus;
    }
    return f0;
}

HomCochain2 operator+(const HomCochain2& a, const HomCochain2& b) {
    return {a.f0 + b.f0, a.f1 + b.f1, a.f2 + b.f2, a.f3 + b.f3, a.fplus + b.fplus, a.fminus + b.fminus};
}

HomCochain2 operator-(const HomCochain2& a, const HomCochain2& b) { return a + (-1) * b; }

HomCochain2 operator*(long k, const HomCochain2& a) {
    return {k * a.f0, k * a.f1, k * a.f2, k * a.f3, k * a.fplus, k * a.fminus};
}

HomCochain2 euler_table() { return {0, 0, 1, 0, 0, 1}; }
HomCochain2 orientation_table() { return {0, 0, 0, 0, 1, -1}; }

long euler_cocycle(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) {
    return euler_table()(x, y, z);
}

long orientation_cocycle(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) {
    return sign_of(orientation(x, y, z));
}

long obstruction_cocycle(const CircleHomeo& h1, const CircleHomeo& h2) {
    Rational v = h1.sigma().eval(h2.sigma().eval(Rational(0)));
    return v >= 1 ? 1 : 0;
}

long obstruction_cocycle_cases(const CircleHomeo& h1, const CircleHomeo& h2) {
    Rational a = h1.sigma().eval(Rational(0));
    Rational v = h1.sigma().eval(h2.sigma().eval(Rational(0)));
    Rational u = h1.sigma().eval(Rational(1));
    if (1 <= v && v < u && u < 2) return 1;
    if (0 <= a && a <= v && v < 1) return 0;
    throw Error(ErrorCode::Invalid, "composite value outside [0, 2)");
}

CocycleAnalysis analyze_cochain2(const HomCochain2& f) {
    CocycleAnalysis r;
    r.is_cocycle = f.f0 == f.f1 && f.f1 == f.f3 && f.fplus + f.fminus == f.f2 + f.f3;
    if (r.is_cocycle) r.class_index = f.fplus - f.fminus;
    return r;
}

HomCochain2 coboundary_from_b(long alpha, long beta) { return {alpha, alpha, 2 * beta - alpha, alpha, beta, beta}; }

long b_cochain(long alpha, long beta, const CirclePoint& x, const CirclePoint& y) { return x == y ? alpha : beta; }

GroupOps<CircleHomeo> homeo_ops() {
    return {[](const CircleHomeo& a, const CircleHomeo& b) { return compose(a, b); },
            [](const CircleHomeo& a) { return invert(a); }, CircleHomeo::identity()};
}

GroupOps<PLLift> lift_ops() {
    return {[](const PLLift& a, const PLLift& b) { return compose(a, b); },
            [](const PLLift& a) { return invert(a); }, PLLift::identity()};
}

WordTripleFunction pullback_cocycle(const GroupAction& action, const CirclePoint& x, const HomCochain2& table) {
    return [action, x, table](const Word& w0, const Word& w1, const Word& w2) {
        return table(evaluate_word(action, w0)(x), evaluate_word(action, w1)(x), evaluate_word(action, w2)(x));
    };
}

}  // namespace rotor
