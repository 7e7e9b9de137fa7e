#include "sprime/zero_set.hpp"

#include "sprime/errors.hpp"
#include "sprime/evaluator.hpp"
#include "sprime/growth.hpp"

#include <algorithm>

namespace sprime {

namespace {

using Kind = ZeroSetInfo::Kind;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void canonicalize(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return canonical_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

std::vector<Point> merged(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::vector<Point> out = a;
    out.insert(out.end(), b.begin(), b.end());
    canonicalize(out);
    return out;
}

// Candidates are known to contain every zero of f; keep the actual zeros.
ZeroSetInfo finite_from(const Expr& f, std::vector<Point> candidates) {
    canonicalize(candidates);
    Evaluator ev(f);
    std::erase_if(candidates, [&](const Point& p) { return !ev.is_zero(p); });
    return ZeroSetInfo::finite(std::move(candidates));
}

// Candidates are known to contain every nonzero point of f; keep the actual nonzeros.
ZeroSetInfo cofinite_from(const Expr& f, std::vector<Point> candidates) {
    canonicalize(candidates);
    Evaluator ev(f);
    std::erase_if(candidates, [&](const Point& p) { return ev.is_zero(p); });
    return ZeroSetInfo::cofinite(std::move(candidates));
}

/// Zeros of f are zeros(a) ∪ zeros(b).
ZeroSetInfo union_of(const Expr& f, const ZeroSetInfo& a, const ZeroSetInfo& b) {
    if (a.is_everything() || b.is_everything()) return ZeroSetInfo::cofinite({});
    if (a.kind == Kind::ExactFinite && b.kind == Kind::ExactFinite) return ZeroSetInfo::finite(merged(a.points, b.points));
    // Any cofinite side bounds the nonzero set of f.
    if (a.kind == Kind::ExactCofinite && b.kind == Kind::ExactCofinite) {
        return cofinite_from(f, a.points.size() <= b.points.size() ? a.points : b.points);
    }
    if (a.kind == Kind::ExactCofinite) return cofinite_from(f, a.points);
    if (b.kind == Kind::ExactCofinite) return cofinite_from(f, b.points);
    if (a.kind == Kind::Unknown || b.kind == Kind::Unknown) return ZeroSetInfo::unknown();
    return ZeroSetInfo::pattern(f);
}

/// Zeros of f are zeros(a) ∩ zeros(b).
ZeroSetInfo intersection_of(const Expr& f, const ZeroSetInfo& a, const ZeroSetInfo& b) {
    if (a.kind == Kind::ExactFinite) return finite_from(f, a.points);
    if (b.kind == Kind::ExactFinite) return finite_from(f, b.points);
    if (a.kind == Kind::ExactCofinite && b.kind == Kind::ExactCofinite) return cofinite_from(f, merged(a.points, b.points));
    if (a.kind == Kind::Unknown || b.kind == Kind::Unknown) return ZeroSetInfo::unknown();
    return ZeroSetInfo::pattern(f);
}

ZeroSetInfo translated(const Expr& f, const ZeroSetInfo& z, const Point& by) {
    auto move = [&](std::vector<Point> pts) {
        for (auto& p : pts) {
            for (std::size_t a = 0; a < p.dim(); ++a) p[a] += by[a];
        }
        canonicalize(pts);
        return pts;
    };
    switch (z.kind) {
        case Kind::ExactFinite:
            return ZeroSetInfo::finite(move(z.points));
        case Kind::ExactCofinite:
            return ZeroSetInfo::cofinite(move(z.points));
        case Kind::Pattern:
            return ZeroSetInfo::pattern(f);
        case Kind::Unknown:
            break;
    }
    return ZeroSetInfo::unknown();
}

}  // namespace

ZeroSetInfo ZeroSetInfo::finite(std::vector<Point> zeros) {
    canonicalize(zeros);
    return {Kind::ExactFinite, std::move(zeros), std::nullopt};
}
ZeroSetInfo ZeroSetInfo::cofinite(std::vector<Point> nonzeros) {
    canonicalize(nonzeros);
    return {Kind::ExactCofinite, std::move(nonzeros), std::nullopt};
}
ZeroSetInfo ZeroSetInfo::pattern(Expr decider) { return {Kind::Pattern, {}, std::move(decider)}; }
ZeroSetInfo ZeroSetInfo::unknown() { return {}; }

bool ZeroSetInfo::contains(Coords n) const {
    auto listed = [&] {
        return std::binary_search(points.begin(), points.end(), Point(n),
                                  [](const Point& a, const Point& b) { return canonical_less(a, b); });
    };
    switch (kind) {
        case Kind::ExactFinite:
            return listed();
        case Kind::ExactCofinite:
            return !listed();
        case Kind::Pattern:
            return is_zero_at(*decider, n);
        case Kind::Unknown:
            break;
    }
    throw InvalidArgument("zero set membership is not decidable structurally");
}

std::string_view ZeroSetInfo::kind_name() const noexcept {
    switch (kind) {
        case Kind::ExactFinite:
            return "exact_finite";
        case Kind::ExactCofinite:
            return "exact_cofinite";
        case Kind::Pattern:
            return "pattern";
        case Kind::Unknown:
            break;
    }
    return "unknown";
}

ZeroSetInfo zero_set(const Expr& f) {
    return std::visit(
        Overloaded{
            [&](const node::Const& x) {
                return x.value.is_zero() ? ZeroSetInfo::cofinite({}) : ZeroSetInfo::finite({});
            },
            [&](const node::CoordPoly& x) {
                if (x.terms.empty()) return ZeroSetInfo::cofinite({});
                // A nonzero constant term plus even powers with same-sign real coefficients.
                if (nonzero_lower_bound(f)) return ZeroSetInfo::finite({});
                return ZeroSetInfo::unknown();
            },
            [&](const node::Dirac& x) { return ZeroSetInfo::cofinite({x.at}); },
            [&](const node::DiracComplement& x) { return ZeroSetInfo::finite({x.at}); },
            [&](const node::FiniteSupport& x) {
                std::vector<Point> support;
                for (const auto& [p, v] : x.entries) {
                    if (!v.is_zero()) support.push_back(p);
                }
                return ZeroSetInfo::cofinite(std::move(support));
            },
            [&](const node::PatternMask&) { return ZeroSetInfo::pattern(f); },
            [&](const node::InvNormPower&) { return ZeroSetInfo::finite({}); },
            [&](const node::Sum& x) {
                const ZeroSetInfo a = zero_set(x.lhs);
                const ZeroSetInfo b = zero_set(x.rhs);
                if (a.is_everything()) return b;
                if (b.is_everything()) return a;
                // Both finitely supported: so is the sum.
                if (a.kind == Kind::ExactCofinite && b.kind == Kind::ExactCofinite) {
                    return cofinite_from(f, merged(a.points, b.points));
                }
                // One side vanishes only on A, the other only off B: zeros lie in A ∪ B.
                if (a.kind == Kind::ExactFinite && b.kind == Kind::ExactCofinite) {
                    return finite_from(f, merged(a.points, b.points));
                }
                if (a.kind == Kind::ExactCofinite && b.kind == Kind::ExactFinite) {
                    return finite_from(f, merged(a.points, b.points));
                }
                return ZeroSetInfo::unknown();
            },
            [&](const node::Product& x) { return union_of(f, zero_set(x.lhs), zero_set(x.rhs)); },
            [&](const node::Quotient& x) { return union_of(f, zero_set(x.num), zero_set(x.den)); },
            [&](const node::Conj& x) { return zero_set(x.arg); },
            [&](const node::HalfRoot& x) { return zero_set(x.arg); },
            [&](const node::ScalarMul& x) {
                if (x.factor.is_zero()) return ZeroSetInfo::cofinite({});
                return zero_set(x.arg);
            },
            [&](const node::Shift& x) { return translated(f, zero_set(x.arg), x.by); },
            [&](const node::MagnitudeMaxSq& x) {
                ZeroSetInfo acc = zero_set(x.args.front());
                for (std::size_t i = 1; i < x.args.size(); ++i) acc = intersection_of(f, acc, zero_set(x.args[i]));
                if (acc.kind == Kind::Pattern) acc.decider = f;
                return acc;
            },
        },
        f.body());
}

bool is_identically_zero(const Expr& f) { return zero_set(f).is_everything(); }

}  // namespace sprime

#include "sprime/scan.hpp"

namespace sprime {

std::vector<Point> find_zeros(const Expr& f, const ZeroSetInfo& zs, const Window& w, std::size_t count) {
    std::vector<Point> out;
    if (count == 0) return out;
    switch (zs.kind) {
        case ZeroSetInfo::Kind::ExactFinite:
            out.assign(zs.points.begin(), zs.points.begin() + static_cast<std::ptrdiff_t>(std::min(count, zs.points.size())));
            return out;
        case ZeroSetInfo::Kind::ExactCofinite:
            // At most |points| shell points are nonzero, so this stops quickly.
            for (Coord r = 0; out.size() < count; ++r) {
                const PointBlock shell = enumerate_shell(f.dim(), r);
                for (std::size_t i = 0; i < shell.size() && out.size() < count; ++i) {
                    if (zs.contains(shell[i])) out.push_back(shell.point(i));
                }
            }
            return out;
        case ZeroSetInfo::Kind::Pattern:
        case ZeroSetInfo::Kind::Unknown:
            break;
    }
    const auto pts = window_points(w);
    if (count == 1) {
        auto hit = find_first(*pts, [&] { return Evaluator(f); }, [](Evaluator& ev, Coords n) { return ev.is_zero(n); });
        if (hit) out.push_back(pts->point(*hit));
        return out;
    }
    Evaluator ev(f);
    for (std::size_t i = 0; i < pts->size() && out.size() < count; ++i) {
        if (ev.is_zero((*pts)[i])) out.push_back(pts->point(i));
    }
    return out;
}

}  // namespace sprime
