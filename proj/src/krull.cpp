#include "sprime/krull.hpp"

#include "sprime/errors.hpp"
#include "sprime/evaluator.hpp"
#include "sprime/pattern_mask.hpp"
#include "sprime/zero_set.hpp"

#include <algorithm>

namespace sprime {

namespace {

using OKind = DyadicOrder::Kind;
using VKind = KrullVerdict::Kind;

// Sum over rows of cap * dim; about a few seconds of pointwise mask probes.
constexpr std::uint64_t kChainProbeBudget = std::uint64_t{1} << 26;
constexpr unsigned kMaxHorizon = 62;

std::uint64_t effective(const ZeroOrder& z) { return z.value; }

Point dyadic(std::size_t dim, unsigned k) { return Point::axis(dim, 0, Coord{1} << k); }

DyadicOrder joined(DyadicOrder a, DyadicOrder b) {  // zero sets united (products)
    if (a.kind == OKind::Infinite || b.kind == OKind::Infinite) return {OKind::Infinite, 0};
    if (a.kind == OKind::Unknown || b.kind == OKind::Unknown) return {};
    if (a.kind == OKind::Mask && b.kind == OKind::Mask) return {OKind::Mask, std::max(a.p, b.p)};
    if (a.kind == OKind::Mask) return a;
    if (b.kind == OKind::Mask) return b;
    return {OKind::Nonvanishing, 0};
}

DyadicOrder met(DyadicOrder a, DyadicOrder b) {  // zero sets intersected (magnitude max)
    if (a.kind == OKind::Infinite) return b;
    if (b.kind == OKind::Infinite) return a;
    if (a.kind == OKind::Nonvanishing || b.kind == OKind::Nonvanishing) return {OKind::Nonvanishing, 0};
    if (a.kind == OKind::Unknown || b.kind == OKind::Unknown) return {};
    return {OKind::Mask, std::min(a.p, b.p)};
}

bool depends_on_first_axis_only(const node::CoordPoly& p) {
    for (const auto& t : p.terms) {
        for (std::size_t a = 1; a < t.exponents.size(); ++a) {
            if (t.exponents[a] != 0) return false;
        }
    }
    return true;
}

std::vector<OrderSample> dyadic_samples(const Expr& f, unsigned n, unsigned horizon, bool ratio_by_order) {
    std::vector<OrderSample> out;
    const std::uint64_t cap = std::uint64_t{1} << std::min(horizon, kMaxHorizon);
    for (unsigned k = 1; k <= horizon; ++k) {
        const ZeroOrder z = zero_order(f, dyadic(f.dim(), k), cap);
        Rational ratio = ratio_by_order ? Rational(Integer(static_cast<unsigned long>(z.value)),
                                                   pow(Integer(k), n))
                                        : Rational(z.value > 0 ? 1 : 0);
        ratio.canonicalize();
        out.push_back({k, z, ratio});
    }
    return out;
}

std::size_t tail_start(std::size_t count) { return count / 2; }

KrullVerdict certified(KrullSet set, unsigned n, bool in, std::string reason) {
    return {set, n, in ? VKind::CertifiedIn : VKind::CertifiedOut, std::move(reason), {}};
}

void require_horizon(unsigned horizon) {
    if (horizon == 0) throw InvalidArgument("probe horizon K must be at least 1");
    if (horizon > kMaxHorizon) throw BudgetExceeded("probe horizon K exceeds 62");
}

}  // namespace

ZeroOrder zero_order(const Expr& f, const Point& n, std::uint64_t cap) {
    if (cap == 0) throw InvalidArgument("zero-order cap must be positive");
    if (n.dim() != f.dim()) throw DimensionMismatch(f.dim(), n.dim());
    Evaluator ev(f);
    if (!ev.is_zero(n)) return ZeroOrder::finite(0);
    std::vector<Coord> probe(n.coords().begin(), n.coords().end());
    std::uint64_t best = cap;
    for (std::size_t axis = 0; axis < n.dim(); ++axis) {
        std::uint64_t run = 1;
        // No run can matter once it reaches the shortest run so far.
        for (; run < best; ++run) {
            if (__builtin_add_overflow(n[axis], static_cast<Coord>(run), &probe[axis])) {
                throw InvalidArgument("zero-order probe leaves the coordinate range");
            }
            if (!ev.is_zero(probe)) break;
        }
        probe[axis] = n[axis];
        best = std::min(best, run);
    }
    return best >= cap ? ZeroOrder::capped(cap) : ZeroOrder::finite(best);
}

bool check_P1(const Expr& f, const Expr& g, const Point& n, std::uint64_t cap) {
    const auto a = effective(zero_order(f, n, cap));
    const auto b = effective(zero_order(g, n, cap));
    return effective(zero_order(sum(f, g), n, cap)) >= std::min(a, b);
}

bool check_P2(const Expr& f, const Expr& g, const Point& n, std::uint64_t cap) {
    const auto a = effective(zero_order(f, n, cap));
    const auto b = effective(zero_order(g, n, cap));
    return effective(zero_order(product(f, g), n, cap)) >= std::max(a, b);
}

DyadicOrder dyadic_order(const Expr& f) {
    const ZeroSetInfo zs = zero_set(f);
    if (zs.kind == ZeroSetInfo::Kind::ExactCofinite) return {OKind::Infinite, 0};
    if (zs.kind == ZeroSetInfo::Kind::ExactFinite) return {OKind::Nonvanishing, 0};
    if (const auto* m = f.as<node::PatternMask>()) return {OKind::Mask, m->n};
    if (const auto* p = f.as<node::CoordPoly>()) {
        // A nonzero polynomial in n_1 alone has finitely many root hyperplanes n_1 = r.
        if (depends_on_first_axis_only(*p)) return {OKind::Nonvanishing, 0};
        return {};
    }
    if (const auto* p = f.as<node::Product>()) return joined(dyadic_order(p->lhs), dyadic_order(p->rhs));
    if (const auto* q = f.as<node::Quotient>()) return joined(dyadic_order(q->num), dyadic_order(q->den));
    if (const auto* c = f.as<node::Conj>()) return dyadic_order(c->arg);
    if (const auto* h = f.as<node::HalfRoot>()) return dyadic_order(h->arg);
    if (const auto* s = f.as<node::ScalarMul>()) return dyadic_order(s->arg);  // factor 0 is cofinite above
    if (const auto* mx = f.as<node::MagnitudeMaxSq>()) {
        DyadicOrder acc = dyadic_order(mx->args.front());
        for (std::size_t i = 1; i < mx->args.size(); ++i) acc = met(acc, dyadic_order(mx->args[i]));
        return acc;
    }
    if (const auto* s = f.as<node::Sum>()) {
        const DyadicOrder a = dyadic_order(s->lhs);
        const DyadicOrder b = dyadic_order(s->rhs);
        if (a.kind == OKind::Infinite) return b;
        if (b.kind == OKind::Infinite) return a;
    }
    return {};
}

std::string_view kind_name(KrullVerdict::Kind k) noexcept {
    switch (k) {
        case VKind::CertifiedIn:
            return "certified_in";
        case VKind::CertifiedOut:
            return "certified_out";
        case VKind::EmpiricalIn:
            return "empirical_in";
        case VKind::EmpiricalOut:
            break;
    }
    return "empirical_out";
}

std::string_view set_name(KrullSet s) noexcept {
    switch (s) {
        case KrullSet::IStar:
            return "i_star";
        case KrullSet::I:
            return "i_n";
        case KrullSet::M:
            break;
    }
    return "M_n";
}

KrullVerdict membership_i_star(const Expr& f, unsigned horizon) {
    require_horizon(horizon);
    const DyadicOrder cls = dyadic_order(f);
    switch (cls.kind) {
        case OKind::Infinite:
            return certified(KrullSet::IStar, 0, true, "f vanishes at 2^k e_1 for all large k");
        case OKind::Mask:
            return certified(KrullSet::IStar, 0, true, "2^k e_1 is a zero of the mask for every k");
        case OKind::Nonvanishing:
            return certified(KrullSet::IStar, 0, false, "f(2^k e_1) != 0 for all large k");
        case OKind::Unknown:
            break;
    }
    auto trend = dyadic_samples(f, 0, horizon, false);
    bool vanishes = true;
    for (std::size_t i = tail_start(trend.size()); i < trend.size(); ++i) vanishes = vanishes && trend[i].order.value > 0;
    return {KrullSet::IStar, 0, vanishes ? VKind::EmpiricalIn : VKind::EmpiricalOut,
            "f(2^k e_1) over the upper half of k <= K", std::move(trend)};
}

KrullVerdict membership_i_n(const Expr& f, unsigned n, unsigned horizon) {
    require_horizon(horizon);
    if (n == 0) throw InvalidArgument("n must be positive");
    const DyadicOrder cls = dyadic_order(f);
    switch (cls.kind) {
        case OKind::Infinite:
            return certified(KrullSet::I, n, true, "zero-order at 2^k e_1 is infinite for large k");
        case OKind::Mask:
            return certified(KrullSet::I, n, cls.p >= n,
                             cls.p >= n ? "zero-order k^(p+1)+1 with p >= n: ratio to k^n diverges"
                                        : "zero-order k^(p+1)+1 with p+1 <= n: ratio to k^n stays bounded");
        case OKind::Nonvanishing:
            return certified(KrullSet::I, n, false, "zero-order 0 at 2^k e_1 for large k");
        case OKind::Unknown:
            break;
    }
    auto trend = dyadic_samples(f, n, horizon, true);
    const std::size_t from = tail_start(trend.size());
    bool all_capped = true;
    bool vanishing = true;
    bool increasing = true;
    for (std::size_t i = from; i < trend.size(); ++i) {
        all_capped = all_capped && trend[i].order.at_least;
        vanishing = vanishing && trend[i].order.value > 0;
        if (i > from && !(trend[i].ratio > trend[i - 1].ratio)) increasing = false;
    }
    const bool in = vanishing && (all_capped || increasing);
    return {KrullSet::I, n, in ? VKind::EmpiricalIn : VKind::EmpiricalOut,
            "m(f, 2^k e_1) / k^n over the upper half of k <= K", std::move(trend)};
}

KrullVerdict membership_M_n(const Expr& f, unsigned n, unsigned horizon) {
    require_horizon(horizon);
    if (n == 0) throw InvalidArgument("n must be positive");
    const DyadicOrder cls = dyadic_order(f);
    switch (cls.kind) {
        case OKind::Infinite:
            return certified(KrullSet::M, n, false, "zero-order at 2^k e_1 is infinite for large k");
        case OKind::Mask:
            return certified(KrullSet::M, n, cls.p + 1 <= n,
                             cls.p + 1 <= n ? "zero-order k^(p+1)+1 with p+1 <= n: ratio to k^n bounded"
                                            : "zero-order k^(p+1)+1 with p >= n: ratio to k^n unbounded");
        case OKind::Nonvanishing:
            return certified(KrullSet::M, n, true, "zero-order 0 at 2^k e_1 for large k");
        case OKind::Unknown:
            break;
    }
    auto trend = dyadic_samples(f, n, horizon, true);
    const std::size_t from = tail_start(trend.size());
    bool capped = false;
    bool non_increasing = true;
    for (std::size_t i = from; i < trend.size(); ++i) {
        capped = capped || trend[i].order.at_least;
        if (i > from && trend[i].ratio > trend[i - 1].ratio) non_increasing = false;
    }
    const bool in = !capped && non_increasing;
    return {KrullSet::M, n, in ? VKind::EmpiricalIn : VKind::EmpiricalOut,
            "m(f, 2^k e_1) / k^n over the upper half of k <= K", std::move(trend)};
}

std::vector<PoolMember> default_pool(std::size_t dim, unsigned N) {
    auto n1_plus = [&](long c) {
        std::vector<unsigned> lin(dim, 0);
        lin[0] = 1;
        return coord_poly(dim, {Term{lin, GaussianRational(1)}, Term{std::vector<unsigned>(dim, 0), GaussianRational(c)}});
    };
    std::vector<unsigned> sq(dim, 0);
    sq[0] = 2;

    std::vector<PoolMember> pool{
        {"const(0)", zero(dim)},
        {"const(1)", one(dim)},
        {"const(2+i)", constant(dim, GaussianRational(2, 1))},
        {"dirac(e1)", dirac(Point::axis(dim, 0, 1))},
        {"dirac(8e1)", dirac(Point::axis(dim, 0, 8))},
        {"finite_support{e1,4e1,16e1}",
         finite_support(dim, {{Point::axis(dim, 0, 1), GaussianRational(1)},
                              {Point::axis(dim, 0, 4), GaussianRational(-2)},
                              {Point::axis(dim, 0, 16), GaussianRational(Rational(1, 3))}})},
        {"dirac_complement(0)", dirac_complement(Point::origin(dim))},
        {"inv_norm_power(2)", inv_norm_power(dim, 2)},
        {"n1^2+1", coord_poly(dim, {Term{sq, GaussianRational(1)}, Term{std::vector<unsigned>(dim, 0), GaussianRational(1)}})},
    };
    for (unsigned p = 1; p <= N + 1; ++p) {
        const std::string tag = "pattern_mask(" + std::to_string(p) + ")";
        pool.push_back({tag, pattern_mask(dim, p)});
        pool.push_back({tag + "*(n1+" + std::to_string(p) + ")", product(pattern_mask(dim, p), n1_plus(p))});
    }
    pool.push_back({"pattern_mask(1)*pattern_mask(" + std::to_string(N + 1) + ")",
                    product(pattern_mask(dim, 1), pattern_mask(dim, N + 1))});
    pool.push_back({"magnitude_max_sq(pattern_mask(1),pattern_mask(2))",
                    magnitude_max_sq({pattern_mask(dim, 1), pattern_mask(dim, 2)})});
    pool.push_back({"pattern_mask(1)*dirac_complement(0)", product(pattern_mask(dim, 1), dirac_complement(Point::origin(dim)))});
    return pool;
}

ChainReport chain_report(unsigned N, unsigned K, std::size_t dim, std::uint64_t cap) {
    if (N == 0) throw InvalidArgument("N must be at least 1");
    if (K < 8) throw InvalidArgument("K must be at least 8");
    if (dim == 0) throw InvalidArgument("dimension must be positive");
    require_horizon(K);

    // Budget: every row probes up to its cap along each axis.
    std::uint64_t probes = 0;
    for (unsigned n = 1; n <= N + 1; ++n) {
        for (unsigned k = 1; k <= K; ++k) {
            const std::uint64_t stated = saturating_pow(k, n + 1);
            if (stated > (std::uint64_t{1} << 40)) throw BudgetExceeded("k^(n+1) exceeds 2^40 for the requested N, K");
            probes += std::max(cap, stated + 2) * dim;
            if (probes > kChainProbeBudget) {
                throw BudgetExceeded("chain report would need more than 2^26 axis probes; lower N, K or cap");
            }
        }
    }

    ChainReport report{N, K, dim, cap, {}, {}};
    for (unsigned n = 1; n <= N + 1; ++n) {
        const Expr f = pattern_mask(dim, n);
        ChainLevel level{n,
                         membership_i_n(f, n, K),
                         membership_i_n(f, n + 1, K),
                         membership_M_n(f, n + 1, K),
                         membership_M_n(f, n, K),
                         false,
                         false,
                         {}};
        level.i_strict = level.in_i_n.kind == VKind::CertifiedIn && level.in_i_next.kind == VKind::CertifiedOut;
        level.M_strict = level.in_M_next.kind == VKind::CertifiedIn && level.in_M_n.kind == VKind::CertifiedOut;
        for (unsigned k = 1; k <= K; ++k) {
            const std::uint64_t stated = saturating_pow(k, n + 1);
            const std::uint64_t row_cap = std::max(cap, stated + 2);
            const ZeroOrder z = zero_order(f, dyadic(dim, k), row_cap);
            const Integer m(static_cast<unsigned long>(z.value));
            Rational a(m, pow(Integer(k), n));
            Rational b(m, pow(Integer(k), n + 1));
            a.canonicalize();
            b.canonicalize();
            const bool gap = k < 63 && (std::uint64_t{1} << k) > stated + 1;
            const bool inside = !z.at_least && (z.value == stated || z.value == stated + 1);
            level.rows.push_back({k, row_cap, z, a, b, stated, gap, inside});
        }
        report.levels.push_back(std::move(level));
    }

    const auto pool = default_pool(dim, N);
    for (unsigned n = 1; n <= N + 1; ++n) {
        DisjointnessCheck check{n, pool.size(), 0, 0, {}, {}};
        for (const auto& member : pool) {
            const KrullVerdict vi = membership_i_n(member.f, n, K);
            const KrullVerdict vm = membership_M_n(member.f, n, K);
            const bool in_i = vi.kind == VKind::CertifiedIn;
            const bool in_m = vm.kind == VKind::CertifiedIn;
            check.certified_in_i += in_i;
            check.certified_in_M += in_m;
            if (in_i && in_m) check.violations.push_back(member.label);
            const bool in_i_next = membership_i_n(member.f, n + 1, K).kind == VKind::CertifiedIn;
            const bool in_m_next = membership_M_n(member.f, n + 1, K).kind == VKind::CertifiedIn;
            if ((in_i_next && !in_i) || (in_m && !in_m_next)) check.nesting_violations.push_back(member.label);
        }
        report.disjointness.push_back(std::move(check));
    }
    return report;
}

}  // namespace sprime
