#pragma once

#include "sprime/expr.hpp"

#include <optional>
#include <vector>

namespace sprime {

/// What is structurally known about {n : f(n) = 0}.
struct ZeroSetInfo {
    enum class Kind { ExactFinite, ExactCofinite, Pattern, Unknown };

    Kind kind = Kind::Unknown;
    /// ExactFinite: the zeros. ExactCofinite: the points where f is nonzero.
    /// Canonical order, no duplicates.
    std::vector<Point> points;
    /// Pattern: membership is decided by an exact zero test of this expression.
    std::optional<Expr> decider;

    static ZeroSetInfo finite(std::vector<Point> zeros);
    static ZeroSetInfo cofinite(std::vector<Point> nonzeros);
    static ZeroSetInfo pattern(Expr decider);
    static ZeroSetInfo unknown();

    bool is_exact() const noexcept { return kind == Kind::ExactFinite || kind == Kind::ExactCofinite; }
    /// Membership is decidable without a window (everything except Unknown).
    bool is_decidable() const noexcept { return kind != Kind::Unknown; }
    /// Throws InvalidArgument for Unknown.
    bool contains(Coords n) const;
    /// Whole lattice (f identically zero).
    bool is_everything() const noexcept { return kind == Kind::ExactCofinite && points.empty(); }
    bool is_empty() const noexcept { return kind == Kind::ExactFinite && points.empty(); }

    std::string_view kind_name() const noexcept;
};

ZeroSetInfo zero_set(const Expr& f);

/// Structurally identically zero (Const 0, empty support, products with such, ...).
bool is_identically_zero(const Expr& f);

}  // namespace sprime

namespace sprime {

/// Up to `count` zeros of f in canonical order. Exact sets are searched on all of Z^d
/// (a cofinite set by walking shells outward); pattern and unknown sets only inside `w`.
std::vector<Point> find_zeros(const Expr& f, const ZeroSetInfo& zs, const Window& w, std::size_t count);

}  // namespace sprime
