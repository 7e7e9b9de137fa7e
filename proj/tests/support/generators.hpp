#pragma once

// Seeded random instances for property tests. Everything is drawn from one
// std::mt19937_64 so a failing case is reproducible from its seed.

#include "sprime/expr.hpp"

#include <random>

namespace gen {

using sprime::Coord;
using sprime::Expr;
using sprime::GaussianRational;
using sprime::Point;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
    }
    bool coin() { return between(0, 1) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(between(0, static_cast<std::int64_t>(v.size()) - 1))];
    }

private:
    std::mt19937_64 engine_;
};

Point point(Rng& rng, std::size_t dim, Coord radius);
/// Two points with distinct coordinates somewhere.
std::pair<Point, Point> distinct_points(Rng& rng, std::size_t dim, Coord radius);

/// Small Gaussian rational p/q + (r/s)i; `nonzero` excludes 0.
GaussianRational scalar(Rng& rng, bool nonzero = false);

/// FiniteSupport with 1..max_entries points in the ball of `radius`.
Expr finite_support(Rng& rng, std::size_t dim, Coord radius, int max_entries, bool nonzero_values = true);

/// A pool element: constants, low-degree polynomials, Dirac-type functions, masks,
/// inverse norm powers and shallow sums/products/conjugates/scalings/shifts of these.
/// No quotients or half roots.
Expr pool(Rng& rng, std::size_t dim, int depth = 2);

/// A pool element with an exact zero set that is a nonempty finite set or a cofinite set.
Expr with_exact_zero(Rng& rng, std::size_t dim, Coord radius);

}  // namespace gen
