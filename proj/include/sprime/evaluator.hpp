#pragma once

#include "sprime/bigfloat.hpp"
#include "sprime/expr.hpp"

#include <memory>
#include <optional>

namespace sprime {

/// Pointwise evaluator compiled from an expression DAG. Each distinct node is evaluated once
/// per point into a reusable slot, so repeated evaluation over a window allocates nothing
/// after warm-up. Not thread-safe; copy one per thread (copies recompile).
class Evaluator {
public:
    explicit Evaluator(Expr root);
    Evaluator(const Evaluator& other);
    Evaluator& operator=(const Evaluator& other);
    Evaluator(Evaluator&&) noexcept;
    Evaluator& operator=(Evaluator&&) noexcept;
    ~Evaluator();

    const Expr& expr() const noexcept;

    /// Exact value at n. Throws HalfRootNotExact if the value depends on a half_root node,
    /// DimensionMismatch if n has the wrong length.
    const GaussianRational& eval(Coords n);

    /// Exact zero test. Zeros of half_root(e) are the zeros of e, so this succeeds for
    /// half_root nodes reached through products, conjugates, scalings, shifts, quotients
    /// and magnitude maxima; sums over inexact values throw HalfRootNotExact.
    bool is_zero(Coords n);

    /// Value of the sub-expression `sub` (pointer-identical node of the compiled tree)
    /// from the most recent eval/is_zero call. Returns nullptr if `sub` is not a node of
    /// this tree or its value at that point was not exact.
    const GaussianRational* last_value_of(const Expr& sub) const;

private:
    struct Program;
    std::unique_ptr<Program> program_;
};

GaussianRational eval(const Expr& f, Coords n);
bool is_zero_at(const Expr& f, Coords n);

/// |f(n)|^power == value, exactly. power is 2 for half_root-free expressions; each
/// half_root on a multiplicative path doubles it.
struct AbsPower {
    Rational value;
    unsigned power = 2;
};

/// Exact magnitude power at n. Throws HalfRootNotExact when a half_root sits under a sum.
AbsPower abs_power(const Expr& f, Coords n);

/// Reusable probe for AbsPower over many points. Uses the compiled evaluator when the
/// expression is half_root-free below a (possibly empty) chain of top-level half_roots.
class MagnitudeProbe {
public:
    explicit MagnitudeProbe(Expr f);
    AbsPower at(Coords n);
    bool is_zero(Coords n);
    const Expr& expr() const noexcept { return expr_; }

private:
    Expr expr_;
    Evaluator evaluator_;
    std::optional<Evaluator> base_;  // exact body under the half_root chain
    unsigned base_power_ = 2;
};

/// Approximate value computed with MPFR at precision_bits + 64 working bits.
struct ApproxValue {
    BigComplex value;
    unsigned precision_bits;

    double re() const { return value.re.to_double(); }
    double im() const { return value.im.to_double(); }
};

/// Approximate evaluation; the only route for half_root nodes. HalfRoot(e) uses the
/// principal square root, i.e. argument theta/2 for theta in (-pi, pi].
ApproxValue eval_approx(const Expr& f, Coords n, unsigned precision_bits);

}  // namespace sprime
