#pragma once

#include "sprime/gaussian.hpp"
#include "sprime/lattice.hpp"

#include <memory>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sprime {

struct ExprNode;
struct Term;
namespace node {
struct Const;
struct CoordPoly;
struct Dirac;
struct DiracComplement;
struct FiniteSupport;
struct PatternMask;
struct InvNormPower;
struct Sum;
struct Product;
struct Conj;
struct ScalarMul;
struct Shift;
struct Quotient;
struct MagnitudeMaxSq;
struct HalfRoot;
}  // namespace node

using NodeBody = std::variant<node::Const, node::CoordPoly, node::Dirac, node::DiracComplement,
                              node::FiniteSupport, node::PatternMask, node::InvNormPower, node::Sum,
                              node::Product, node::Conj, node::ScalarMul, node::Shift, node::Quotient,
                              node::MagnitudeMaxSq, node::HalfRoot>;

/// Immutable handle to a symbolic element of S'(Z^d). Copies share the tree.
class Expr {
public:
    explicit Expr(std::shared_ptr<const ExprNode> node);

    std::size_t dim() const noexcept;
    const NodeBody& body() const noexcept;
    const ExprNode* get() const noexcept { return node_.get(); }
    const std::shared_ptr<const ExprNode>& ptr() const noexcept { return node_; }

    template <class T>
    const T* as() const noexcept;
    template <class T>
    bool is() const noexcept;

    /// Snake-case kind tag as used in JSON ("const", "scalar_mul", ...).
    std::string_view kind() const noexcept;

    /// Children in a fixed order (empty for leaves).
    std::vector<Expr> children() const;

private:
    std::shared_ptr<const ExprNode> node_;
};


/// One monomial c * n_1^e_1 ... n_d^e_d of a CoordPoly.
struct Term {
    std::vector<unsigned> exponents;
    GaussianRational coeff;

    unsigned degree() const;
};

namespace node {

struct Const {
    GaussianRational value;
};
/// Terms are sorted by exponent vector, merged, and never carry a zero coefficient.
struct CoordPoly {
    std::vector<Term> terms;
};
/// 1 at `at`, 0 elsewhere.
struct Dirac {
    Point at;
};
/// 0 at `at`, 1 elsewhere.
struct DiracComplement {
    Point at;
};
/// Entries sorted in canonical point order, points unique; 0 off the listed points.
struct FiniteSupport {
    std::vector<std::pair<Point, GaussianRational>> entries;
};
/// Zero exactly at 2^k e_1 + j e_i (k >= 0, 1 <= i <= d, 0 <= j <= k^(n+1)), one elsewhere.
struct PatternMask {
    unsigned n;
};
/// 1 / (1 + |n|_1)^m
struct InvNormPower {
    unsigned m;
};
struct Sum {
    Expr lhs, rhs;
};
struct Product {
    Expr lhs, rhs;
};
struct Conj {
    Expr arg;
};
struct ScalarMul {
    GaussianRational factor;
    Expr arg;
};
/// Translation: Shift(v, e)(n) = e(n - v).
struct Shift {
    Point by;
    Expr arg;
};
/// num(n) / den(n) where den(n) != 0, and 0 where den(n) = 0.
struct Quotient {
    Expr num, den;
};
/// max_k |e_k(n)|^2, a nonnegative rational.
struct MagnitudeMaxSq {
    std::vector<Expr> args;
};
/// Square root with magnitude sqrt|e(n)| and argument theta(n)/2, theta in (-pi, pi].
struct HalfRoot {
    Expr arg;
};

}  // namespace node

struct ExprNode {
    std::size_t dim;
    NodeBody body;
};

inline std::size_t Expr::dim() const noexcept { return node_->dim; }
inline const NodeBody& Expr::body() const noexcept { return node_->body; }
template <class T>
const T* Expr::as() const noexcept {
    return std::get_if<T>(&node_->body);
}
template <class T>
bool Expr::is() const noexcept {
    return std::holds_alternative<T>(node_->body);
}

// Construction. Each checks that dimensions agree and throws DimensionMismatch otherwise.
Expr constant(std::size_t dim, GaussianRational value);
Expr one(std::size_t dim);
Expr zero(std::size_t dim);
Expr coord_poly(std::size_t dim, std::vector<Term> terms);
/// The coordinate function n_axis (0-based axis).
Expr coordinate(std::size_t dim, std::size_t axis);
Expr dirac(Point at);
Expr dirac_complement(Point at);
Expr finite_support(std::size_t dim, std::vector<std::pair<Point, GaussianRational>> entries);
/// Throws InvalidArgument for n == 0.
Expr pattern_mask(std::size_t dim, unsigned n);
Expr inv_norm_power(std::size_t dim, unsigned m);
Expr sum(const Expr& lhs, const Expr& rhs);
Expr product(const Expr& lhs, const Expr& rhs);
Expr conj(const Expr& arg);
Expr scalar_mul(GaussianRational factor, const Expr& arg);
Expr shift(Point by, const Expr& arg);
Expr quotient(const Expr& num, const Expr& den);
/// Throws EmptyList for an empty argument list.
Expr magnitude_max_sq(const std::vector<Expr>& args);
Expr half_root(const Expr& arg);

/// Same tree shape with equal payloads (pointer-equal subtrees short-circuit).
bool structurally_equal(const Expr& a, const Expr& b);

bool contains_quotient(const Expr& e);
bool contains_half_root(const Expr& e);

/// Total number of nodes counted as a tree (shared subtrees counted per use).
std::size_t tree_size(const Expr& e);

}  // namespace sprime
