#include <rotor/samples.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace rotor::samples {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational unit_rational(Rng& rng, long max_den) {
    long den = uniform(rng, 1, max_den);
    return make_rational(uniform(rng, 0, den - 1), den);
}

CirclePoint point(Rng& rng, long max_den) { return CirclePoint(unit_rational(rng, max_den)); }

CirclePoint mixed_point(Rng& rng) {
    if (uniform(rng, 0, 2) == 0) return CirclePoint(make_rational(uniform(rng, 0, 3), 4));
    return point(rng);
}

std::vector<CirclePoint> mixed_points(Rng& rng, std::size_t n) {
    std::vector<CirclePoint> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(mixed_point(rng));
    return out;
}

std::vector<Rational> distinct_sorted(Rng& rng, std::size_t n, long max_den) {
    std::set<Rational> values;
    while (values.size() < n) values.insert(unit_rational(rng, max_den));
    return {values.begin(), values.end()};
}

CircleHomeo homeo(Rng& rng, int max_breaks) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, max_breaks));
    std::vector<Rational> xs = distinct_sorted(rng, n);
    std::vector<Rational> ys = distinct_sorted(rng, n);
    long rot = uniform(rng, 0, static_cast<long>(n) - 1);
    std::vector<std::pair<Rational, Rational>> pts;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = (i + static_cast<std::size_t>(rot)) % n;
        Rational y = ys[k] + (i + static_cast<std::size_t>(rot) >= n ? 1 : 0);
        pts.emplace_back(xs[i], y);
    }
    return CircleHomeo(PLLift::from_points(LiftKind::Strict, pts));
}

PLLift lift(Rng& rng, int max_breaks) { return recombine(homeo(rng, max_breaks), uniform(rng, -2, 2)); }

CircleHomeo homeo_with_fixed_point(Rng& rng, int max_breaks) {
    Rational c = unit_rational(rng);
    std::size_t n = static_cast<std::size_t>(uniform(rng, 0, max_breaks - 1));
    std::vector<Rational> xs = distinct_sorted(rng, n + 1);
    std::vector<Rational> ys = distinct_sorted(rng, n + 1);
    xs.erase(xs.begin());
    ys.erase(ys.begin());
    // Offsets in (0, 1) from c for the extra nodes.
    std::vector<std::pair<Rational, Rational>> pts{{c, c}};
    for (std::size_t i = 0; i < n; ++i) {
        Rational x = c + xs[i];
        Rational y = c + ys[i];
        Rational k = Rational(floor_of(x));
        pts.emplace_back(x - k, y - k);
    }
    return CircleHomeo(PLLift::from_points(LiftKind::Strict, pts));
}

CircleHomeo orbit_fixing(Rng& rng, long q, int breaks_per_gap) {
    std::vector<std::pair<Rational, Rational>> pts;
    Rational width = make_rational(1, q);
    for (long j = 0; j < q; ++j) {
        Rational base = make_rational(j, q);
        pts.emplace_back(base, base);
        std::size_t n = static_cast<std::size_t>(uniform(rng, 0, breaks_per_gap));
        std::vector<Rational> xs = distinct_sorted(rng, n + 1, 12);
        std::vector<Rational> ys = distinct_sorted(rng, n + 1, 12);
        for (std::size_t i = 1; i <= n; ++i) pts.emplace_back(base + width * xs[i], base + width * ys[i]);
    }
    return CircleHomeo(PLLift::from_points(LiftKind::Strict, pts));
}

CircleHomeo conjugate(const CircleHomeo& h, const CircleHomeo& g) { return compose(g, compose(h, invert(g))); }

CircleHomeo periodic(Rng& rng, long p, long q) {
    CircleHomeo core = compose(orbit_fixing(rng, q), CircleHomeo::rotation(make_rational(p, q)));
    return conjugate(core, homeo(rng, 3));
}

std::pair<long, long> fraction(Rng& rng, long max_q) {
    long q = uniform(rng, 1, max_q);
    long p = uniform(rng, 0, q - 1);
    long g = std::gcd(p, q);
    if (g == 0) g = 1;
    return {p / g, q / g};
}

PointTable monotone_table(Rng& rng, std::size_t size) {
    std::vector<Rational> xs = distinct_sorted(rng, size);
    Rational base = unit_rational(rng);
    std::vector<Rational> offsets;
    for (std::size_t i = 0; i < size; ++i) {
        offsets.push_back(uniform(rng, 0, 3) == 0 && !offsets.empty() ? offsets.back() : unit_rational(rng, 8));
    }
    std::sort(offsets.begin(), offsets.end());
    PointTable table;
    for (std::size_t i = 0; i < size; ++i) table[CirclePoint(xs[i])] = CirclePoint(base + offsets[i]);
    return table;
}

std::vector<CirclePoint> weakly_oriented_tuple(Rng& rng, std::size_t n) {
    Rational base = unit_rational(rng);
    std::vector<Rational> offsets;
    for (std::size_t i = 0; i < n; ++i) {
        offsets.push_back(uniform(rng, 0, 3) == 0 && !offsets.empty() ? offsets.back() : unit_rational(rng, 12));
    }
    std::sort(offsets.begin(), offsets.end());
    std::vector<CirclePoint> out;
    for (const Rational& o : offsets) out.emplace_back(base + o);
    std::rotate(out.begin(), out.begin() + uniform(rng, 0, static_cast<long>(n) - 1), out.end());
    return out;
}

Word word(Rng& rng, int rank, int max_length) {
    Word w;
    long len = uniform(rng, 0, max_length);
    for (long i = 0; i < len; ++i) {
        int letter = static_cast<int>(uniform(rng, 1, rank));
        w.push_back(uniform(rng, 0, 1) == 0 ? letter : -letter);
    }
    return w;
}

GroupAction action(Rng& rng, int rank, bool with_lifts, int max_breaks) {
    std::vector<CircleHomeo> gens;
    std::vector<PLLift> lifts;
    for (int i = 0; i < rank; ++i) {
        PLLift l = lift(rng, max_breaks);
        gens.emplace_back(l);
        lifts.push_back(l);
    }
    std::optional<std::vector<PLLift>> maybe;
    if (with_lifts) maybe = lifts;
    return GroupAction(gens, maybe, {});
}

DoubleCoverHomeo double_cover_homeo(Rng& rng, int max_breaks) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, max_breaks));
    const Rational half(1, 2);
    std::vector<Rational> xs = distinct_sorted(rng, n);
    std::vector<Rational> ys = distinct_sorted(rng, n);
    Rational offset = unit_rational(rng);
    std::vector<std::pair<Rational, Rational>> pts;
    for (std::size_t i = 0; i < n; ++i) pts.emplace_back(xs[i] * half, offset + ys[i] * half);
    return DoubleCoverHomeo::from_half_points(pts);
}

GroupAction double_cover_action(Rng& rng) {
    int rank = static_cast<int>(uniform(rng, 1, 2));
    bool fixed = uniform(rng, 0, 1) == 0;
    std::vector<CircleHomeo> gens;
    for (int i = 0; i < rank; ++i) {
        if (fixed) {
            // Conjugate of a map fixing 0 (and so 1/2) by a common double cover map.
            std::size_t n = static_cast<std::size_t>(uniform(rng, 0, 3));
            std::vector<Rational> xs = distinct_sorted(rng, n + 1);
            std::vector<Rational> ys = distinct_sorted(rng, n + 1);
            std::vector<std::pair<Rational, Rational>> pts{{Rational(0), Rational(0)}};
            const Rational half(1, 2);
            for (std::size_t k = 1; k <= n; ++k) pts.emplace_back(xs[k] * half, ys[k] * half);
            gens.push_back(DoubleCoverHomeo::from_half_points(pts).homeo());
        } else {
            gens.push_back(double_cover_homeo(rng).homeo());
        }
    }
    if (fixed) {
        CircleHomeo g = double_cover_homeo(rng).homeo();
        for (CircleHomeo& h : gens) h = conjugate(h, g);
    }
    return GroupAction(gens);
}

PLLift example_u() {
    return PLLift::from_points(LiftKind::Strict, {{Rational(0), Rational(0)},
                                                  {Rational(1, 4), Rational(3, 8)},
                                                  {Rational(1, 2), Rational(1, 2)},
                                                  {Rational(3, 4), Rational(7, 8)}});
}

std::pair<GroupAction, GroupAction> example_pair() {
    const Rational half(1, 2);
    return {GroupAction::cyclic(PLLift::translation(half)), GroupAction::cyclic(shift(example_u(), half))};
}

}  // namespace rotor::samples
