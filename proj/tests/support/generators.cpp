#include "generators.hpp"

#include <set>

namespace gen {

using namespace sprime;

Point point(Rng& rng, std::size_t dim, Coord radius) {
    std::vector<Coord> c(dim, 0);
    Coord budget = rng.between(0, radius);
    for (std::size_t i = 0; i < dim; ++i) {
        Coord v = rng.between(0, budget);
        budget -= v;
        c[i] = rng.coin() ? v : -v;
    }
    return Point(c);
}

std::pair<Point, Point> distinct_points(Rng& rng, std::size_t dim, Coord radius) {
    Point a = point(rng, dim, radius);
    Point b = point(rng, dim, radius);
    while (b == a) b = point(rng, dim, radius);
    return {a, b};
}

GaussianRational scalar(Rng& rng, bool nonzero) {
    while (true) {
        Rational re(rng.between(-4, 4), rng.between(1, 3));
        Rational im = rng.between(0, 2) == 0 ? Rational(rng.between(-3, 3), rng.between(1, 2)) : Rational(0);
        re.canonicalize();
        im.canonicalize();
        GaussianRational z(re, im);
        if (!nonzero || !z.is_zero()) return z;
    }
}

Expr finite_support(Rng& rng, std::size_t dim, Coord radius, int max_entries, bool nonzero_values) {
    std::set<Point> used;
    std::vector<std::pair<Point, GaussianRational>> entries;
    const int count = static_cast<int>(rng.between(1, max_entries));
    for (int i = 0; i < count; ++i) {
        Point p = point(rng, dim, radius);
        if (!used.insert(p).second) continue;
        entries.emplace_back(p, scalar(rng, nonzero_values));
    }
    return sprime::finite_support(dim, std::move(entries));
}

namespace {

Expr polynomial(Rng& rng, std::size_t dim) {
    std::vector<Term> terms;
    const int count = static_cast<int>(rng.between(1, 3));
    for (int i = 0; i < count; ++i) {
        Term t;
        t.exponents.assign(dim, 0);
        t.exponents[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(dim) - 1))] =
            static_cast<unsigned>(rng.between(0, 2));
        t.coeff = scalar(rng, true);
        terms.push_back(std::move(t));
    }
    return coord_poly(dim, std::move(terms));
}

Expr leaf(Rng& rng, std::size_t dim) {
    switch (rng.between(0, 7)) {
        case 0:
            return constant(dim, scalar(rng));
        case 1:
            return polynomial(rng, dim);
        case 2:
            return dirac(point(rng, dim, 4));
        case 3:
            return dirac_complement(point(rng, dim, 4));
        case 4:
            return finite_support(rng, dim, 4, 3);
        case 5:
            return pattern_mask(dim, static_cast<unsigned>(rng.between(1, 3)));
        case 6:
            return inv_norm_power(dim, static_cast<unsigned>(rng.between(0, 2)));
        default:
            return constant(dim, scalar(rng, true));
    }
}

}  // namespace

Expr pool(Rng& rng, std::size_t dim, int depth) {
    if (depth <= 0 || rng.between(0, 2) == 0) return leaf(rng, dim);
    switch (rng.between(0, 5)) {
        case 0:
            return sum(pool(rng, dim, depth - 1), pool(rng, dim, depth - 1));
        case 1:
            return product(pool(rng, dim, depth - 1), pool(rng, dim, depth - 1));
        case 2:
            return conj(pool(rng, dim, depth - 1));
        case 3:
            return scalar_mul(scalar(rng, true), pool(rng, dim, depth - 1));
        case 4:
            return shift(point(rng, dim, 3), pool(rng, dim, depth - 1));
        default:
            return magnitude_max_sq({pool(rng, dim, depth - 1), pool(rng, dim, depth - 1)});
    }
}

Expr with_exact_zero(Rng& rng, std::size_t dim, Coord radius) {
    switch (rng.between(0, 4)) {
        case 0:
            return dirac_complement(point(rng, dim, radius));
        case 1:
            return product(dirac_complement(point(rng, dim, radius)), dirac_complement(point(rng, dim, radius)));
        case 2:
            return finite_support(rng, dim, radius, 4);
        case 3:
            return scalar_mul(scalar(rng, true), dirac(point(rng, dim, radius)));
        default:
            return product(constant(dim, scalar(rng, true)), dirac_complement(point(rng, dim, radius)));
    }
}

}  // namespace gen
