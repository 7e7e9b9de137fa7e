#include "sprime/expr.hpp"

#include "sprime/errors.hpp"

#include <algorithm>
#include <numeric>

namespace sprime {

unsigned Term::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

Expr::Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {
    if (!node_) throw InvalidArgument("null expression node");
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Expr make(std::size_t dim, NodeBody body) {
    if (dim == 0) throw InvalidArgument("dimension must be >= 1");
    return Expr(std::make_shared<const ExprNode>(ExprNode{dim, std::move(body)}));
}

void require_dim(std::size_t expected, std::size_t got) {
    if (expected != got) throw DimensionMismatch(expected, got);
}

}  // namespace

std::string_view Expr::kind() const noexcept {
    return std::visit(Overloaded{
                          [](const node::Const&) { return std::string_view("const"); },
                          [](const node::CoordPoly&) { return std::string_view("coord_poly"); },
                          [](const node::Dirac&) { return std::string_view("dirac"); },
                          [](const node::DiracComplement&) { return std::string_view("dirac_complement"); },
                          [](const node::FiniteSupport&) { return std::string_view("finite_support"); },
                          [](const node::PatternMask&) { return std::string_view("pattern_mask"); },
                          [](const node::InvNormPower&) { return std::string_view("inv_norm_power"); },
                          [](const node::Sum&) { return std::string_view("sum"); },
                          [](const node::Product&) { return std::string_view("product"); },
                          [](const node::Conj&) { return std::string_view("conj"); },
                          [](const node::ScalarMul&) { return std::string_view("scalar_mul"); },
                          [](const node::Shift&) { return std::string_view("shift"); },
                          [](const node::Quotient&) { return std::string_view("quotient"); },
                          [](const node::MagnitudeMaxSq&) { return std::string_view("magnitude_max_sq"); },
                          [](const node::HalfRoot&) { return std::string_view("half_root"); },
                      },
                      body());
}

std::vector<Expr> Expr::children() const {
    return std::visit(Overloaded{
                          [](const node::Sum& n) { return std::vector<Expr>{n.lhs, n.rhs}; },
                          [](const node::Product& n) { return std::vector<Expr>{n.lhs, n.rhs}; },
                          [](const node::Conj& n) { return std::vector<Expr>{n.arg}; },
                          [](const node::ScalarMul& n) { return std::vector<Expr>{n.arg}; },
                          [](const node::Shift& n) { return std::vector<Expr>{n.arg}; },
                          [](const node::Quotient& n) { return std::vector<Expr>{n.num, n.den}; },
                          [](const node::MagnitudeMaxSq& n) { return n.args; },
                          [](const node::HalfRoot& n) { return std::vector<Expr>{n.arg}; },
                          [](const auto&) { return std::vector<Expr>{}; },
                      },
                      body());
}

Expr constant(std::size_t dim, GaussianRational value) { return make(dim, node::Const{std::move(value)}); }
Expr one(std::size_t dim) { return constant(dim, GaussianRational(1)); }
Expr zero(std::size_t dim) { return constant(dim, GaussianRational(0)); }

Expr coord_poly(std::size_t dim, std::vector<Term> terms) {
    for (const auto& t : terms) require_dim(dim, t.exponents.size());
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
    std::vector<Term> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().exponents == t.exponents) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    return make(dim, node::CoordPoly{std::move(merged)});
}

Expr coordinate(std::size_t dim, std::size_t axis) {
    if (axis >= dim) throw InvalidArgument("coordinate axis out of range");
    std::vector<unsigned> e(dim, 0);
    e[axis] = 1;
    return coord_poly(dim, {Term{std::move(e), GaussianRational(1)}});
}

Expr dirac(Point at) {
    const auto d = at.dim();
    return make(d, node::Dirac{std::move(at)});
}

Expr dirac_complement(Point at) {
    const auto d = at.dim();
    return make(d, node::DiracComplement{std::move(at)});
}

Expr finite_support(std::size_t dim, std::vector<std::pair<Point, GaussianRational>> entries) {
    for (const auto& [p, v] : entries) require_dim(dim, p.dim());
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].first == entries[i - 1].first) {
            throw InvalidArgument("finite_support lists point " + entries[i].first.to_string() + " twice");
        }
    }
    return make(dim, node::FiniteSupport{std::move(entries)});
}

Expr pattern_mask(std::size_t dim, unsigned n) {
    if (n == 0) throw InvalidArgument("pattern_mask order must be >= 1");
    return make(dim, node::PatternMask{n});
}

Expr inv_norm_power(std::size_t dim, unsigned m) { return make(dim, node::InvNormPower{m}); }

Expr sum(const Expr& lhs, const Expr& rhs) {
    require_dim(lhs.dim(), rhs.dim());
    return make(lhs.dim(), node::Sum{lhs, rhs});
}

Expr product(const Expr& lhs, const Expr& rhs) {
    require_dim(lhs.dim(), rhs.dim());
    return make(lhs.dim(), node::Product{lhs, rhs});
}

Expr conj(const Expr& arg) { return make(arg.dim(), node::Conj{arg}); }

Expr scalar_mul(GaussianRational factor, const Expr& arg) {
    return make(arg.dim(), node::ScalarMul{std::move(factor), arg});
}

Expr shift(Point by, const Expr& arg) {
    require_dim(arg.dim(), by.dim());
    return make(arg.dim(), node::Shift{std::move(by), arg});
}

Expr quotient(const Expr& num, const Expr& den) {
    require_dim(num.dim(), den.dim());
    return make(num.dim(), node::Quotient{num, den});
}

Expr magnitude_max_sq(const std::vector<Expr>& args) {
    if (args.empty()) throw EmptyList("magnitude_max_sq");
    for (const auto& a : args) require_dim(args.front().dim(), a.dim());
    return make(args.front().dim(), node::MagnitudeMaxSq{args});
}

Expr half_root(const Expr& arg) { return make(arg.dim(), node::HalfRoot{arg}); }

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.get() == b.get()) return true;
    if (a.dim() != b.dim() || a.body().index() != b.body().index()) return false;
    const bool payload_equal = std::visit(
        Overloaded{
            [&](const node::Const& x) { return x.value == b.as<node::Const>()->value; },
            [&](const node::CoordPoly& x) {
                const auto& y = b.as<node::CoordPoly>()->terms;
                return std::equal(x.terms.begin(), x.terms.end(), y.begin(), y.end(),
                                  [](const Term& s, const Term& t) {
                                      return s.exponents == t.exponents && s.coeff == t.coeff;
                                  });
            },
            [&](const node::Dirac& x) { return x.at == b.as<node::Dirac>()->at; },
            [&](const node::DiracComplement& x) { return x.at == b.as<node::DiracComplement>()->at; },
            [&](const node::FiniteSupport& x) { return x.entries == b.as<node::FiniteSupport>()->entries; },
            [&](const node::PatternMask& x) { return x.n == b.as<node::PatternMask>()->n; },
            [&](const node::InvNormPower& x) { return x.m == b.as<node::InvNormPower>()->m; },
            [&](const node::ScalarMul& x) { return x.factor == b.as<node::ScalarMul>()->factor; },
            [&](const node::Shift& x) { return x.by == b.as<node::Shift>()->by; },
            [&](const node::MagnitudeMaxSq& x) {
                return x.args.size() == b.as<node::MagnitudeMaxSq>()->args.size();
            },
            [](const auto&) { return true; },
        },
        a.body());
    if (!payload_equal) return false;
    const auto ca = a.children();
    const auto cb = b.children();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (!structurally_equal(ca[i], cb[i])) return false;
    }
    return true;
}

bool contains_quotient(const Expr& e) {
    if (e.is<node::Quotient>()) return true;
    for (const auto& c : e.children()) {
        if (contains_quotient(c)) return true;
    }
    return false;
}

bool contains_half_root(const Expr& e) {
    if (e.is<node::HalfRoot>()) return true;
    for (const auto& c : e.children()) {
        if (contains_half_root(c)) return true;
    }
    return false;
}

std::size_t tree_size(const Expr& e) {
    std::size_t n = 1;
    for (const auto& c : e.children()) n += tree_size(c);
    return n;
}

}  // namespace sprime
