#pragma once

#include <rotor/group_action.hpp>

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace rotor {

// Orbits of Homeo+(S^1) on triples of points.
enum class OrbitClass3 { O0, O1, O2, O3, Oplus, Ominus };

constexpr std::array<OrbitClass3, 6> all_orbit_classes = {OrbitClass3::O0, OrbitClass3::O1,    OrbitClass3::O2,
                                                          OrbitClass3::O3, OrbitClass3::Oplus, OrbitClass3::Ominus};

const char* class_name(OrbitClass3 c);
OrbitClass3 classify_triple(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z);
// A triple in the given class, built from [0], [1/3], [2/3].
std::array<CirclePoint, 3> representative(OrbitClass3 c);

// Invariant homogeneous 2-cochain on S^1, stored by its value on each orbit class.
struct HomCochain2 {
    long f0 = 0;
    long f1 = 0;
    long f2 = 0;
    long f3 = 0;
    long fplus = 0;
    long fminus = 0;

    long at(OrbitClass3 c) const;
    long& at(OrbitClass3 c);
    long operator()(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) const {
        return at(classify_triple(x, y, z));
    }

    friend bool operator==(const HomCochain2&, const HomCochain2&) = default;
    friend HomCochain2 operator+(const HomCochain2& a, const HomCochain2& b);
    friend HomCochain2 operator-(const HomCochain2& a, const HomCochain2& b);
    friend HomCochain2 operator*(long k, const HomCochain2& a);
};

HomCochain2 euler_table();
HomCochain2 orientation_table();

long euler_cocycle(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z);
long orientation_cocycle(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z);

// 1 iff sigma(h1) sigma(h2)(0) lies in [1, 2).
long obstruction_cocycle(const CircleHomeo& h1, const CircleHomeo& h2);
// The same value through the two-sided case description.
long obstruction_cocycle_cases(const CircleHomeo& h1, const CircleHomeo& h2);

struct CocycleAnalysis {
    bool is_cocycle = false;
    std::optional<long> class_index;
};

CocycleAnalysis analyze_cochain2(const HomCochain2& f);
// delta b for the invariant 1-cochain b equal to alpha on the diagonal and beta off it.
HomCochain2 coboundary_from_b(long alpha, long beta);
// The 1-cochain itself, as a function on pairs.
long b_cochain(long alpha, long beta, const CirclePoint& x, const CirclePoint& y);

// Generic cochains: functions of (n+1)-tuples (homogeneous) or n-tuples (inhomogeneous).
template <class T>
using Cochain = std::function<long(const std::vector<T>&)>;

template <class T>
struct GroupOps {
    std::function<T(const T&, const T&)> mul;
    std::function<T(const T&)> inv;
    T identity;
};

// delta f(x_0..x_n) = sum (-1)^i f(x_0..^x_i..x_n).
template <class T>
Cochain<T> delta_hom(Cochain<T> f) {
    return [f](const std::vector<T>& xs) {
        long total = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            std::vector<T> face;
            face.reserve(xs.size() - 1);
            for (std::size_t j = 0; j < xs.size(); ++j) {
                if (j != i) face.push_back(xs[j]);
            }
            long v = f(face);
            total += i % 2 == 0 ? v : -v;
        }
        return total;
    };
}

// iota(f)(h_0..h_n) = f(h_0^-1 h_1, ..., h_{n-1}^-1 h_n).
template <class T>
Cochain<T> iota(Cochain<T> f, GroupOps<T> ops) {
    return [f, ops](const std::vector<T>& hs) {
        std::vector<T> args;
        for (std::size_t i = 0; i + 1 < hs.size(); ++i) args.push_back(ops.mul(ops.inv(hs[i]), hs[i + 1]));
        return f(args);
    };
}

// iota^-1(g)(h_1..h_n) = g(e, h_1, h_1 h_2, ..., h_1 ... h_n).
template <class T>
Cochain<T> iota_inv(Cochain<T> g, GroupOps<T> ops) {
    return [g, ops](const std::vector<T>& hs) {
        std::vector<T> args{ops.identity};
        for (const T& h : hs) args.push_back(ops.mul(args.back(), h));
        return g(args);
    };
}

// df(h_1..h_{n+1}) = f(h_2..) + sum_{i=1}^n (-1)^i f(.., h_i h_{i+1}, ..) + (-1)^{n+1} f(h_1..h_n).
template <class T>
Cochain<T> d_inhom(Cochain<T> f, GroupOps<T> ops) {
    return [f, ops](const std::vector<T>& hs) {
        const std::size_t m = hs.size();
        long total = f(std::vector<T>(hs.begin() + 1, hs.end()));
        for (std::size_t i = 0; i + 1 < m; ++i) {
            std::vector<T> args;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i) {
                    args.push_back(ops.mul(hs[i], hs[i + 1]));
                    ++j;
                } else {
                    args.push_back(hs[j]);
                }
            }
            long v = f(args);
            total += (i + 1) % 2 == 0 ? v : -v;
        }
        long last = f(std::vector<T>(hs.begin(), hs.end() - 1));
        total += m % 2 == 0 ? last : -last;
        return total;
    };
}

GroupOps<CircleHomeo> homeo_ops();
GroupOps<PLLift> lift_ops();

// (w0, w1, w2) -> f(rho(w0)x, rho(w1)x, rho(w2)x).
using WordTripleFunction = std::function<long(const Word&, const Word&, const Word&)>;
WordTripleFunction pullback_cocycle(const GroupAction& action, const CirclePoint& x,
                                    const HomCochain2& table = euler_table());

}  // namespace rotor
