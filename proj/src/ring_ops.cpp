#include "sprime/ring_ops.hpp"

#include "sprime/errors.hpp"
#include "sprime/scan.hpp"

#include <algorithm>

namespace sprime {

namespace {

Rational positive_or_one(Rational q) { return sgn(q) > 0 ? q : Rational(1); }

void require_same_dim(const Expr& a, const Expr& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

Coord max_norm(const std::vector<Point>& pts) {
    Coord r = 0;
    for (const auto& p : pts) r = std::max(r, norm1(p));
    return r;
}

/// A point where zg says "zero" and f is nonzero, found without a window whenever the
/// zero sets make that decidable.
std::optional<Point> exact_refutation(const ZeroSetInfo& zg, const Expr& f) {
    using Kind = ZeroSetInfo::Kind;
    if (zg.kind == Kind::ExactFinite) {
        Evaluator ev(f);
        for (const auto& a : zg.points) {
            if (!ev.is_zero(a)) return a;
        }
        return std::nullopt;
    }
    if (zg.kind != Kind::ExactCofinite) return std::nullopt;
    const ZeroSetInfo zf = zero_set(f);
    if (zf.kind == Kind::ExactCofinite) {
        for (const auto& c : zf.points) {
            if (zg.contains(c)) return c;
        }
        return std::nullopt;
    }
    if (zf.kind != Kind::ExactFinite) return std::nullopt;
    // Both sets are finite-or-cofinite; the shell past every listed point settles it.
    const Coord limit = std::max(max_norm(zg.points), max_norm(zf.points)) + 1;
    for (Coord r = 0; r <= limit; ++r) {
        const PointBlock shell = enumerate_shell(f.dim(), r);
        for (std::size_t i = 0; i < shell.size(); ++i) {
            if (zg.contains(shell[i]) && !zf.contains(shell[i])) return shell.point(i);
        }
    }
    return std::nullopt;
}

/// First window point where `identity` is nonzero (exact); for half_root operands, first
/// point where `vanishing` is zero and `f` is not.
std::optional<Point> window_refutation(const Expr& identity, const Expr& vanishing, const Expr& f, const Window& w) {
    const auto pts = window_points(w);
    std::optional<std::size_t> hit;
    if (!contains_half_root(identity)) {
        hit = find_first(*pts, [&] { return Evaluator(identity); },
                         [](Evaluator& ev, Coords n) { return !ev.is_zero(n); });
    } else {
        struct Pair {
            Evaluator g, f;
        };
        hit = find_first(*pts, [&] { return Pair{Evaluator(vanishing), Evaluator(f)}; },
                         [](Pair& s, Coords n) { return s.g.is_zero(n) && !s.f.is_zero(n); });
    }
    if (!hit) return std::nullopt;
    return pts->point(*hit);
}

// f = scalar * (product of factors)
struct Factored {
    GaussianRational scalar{1};
    std::vector<Expr> factors;
};

void flatten(const Expr& f, Factored& out) {
    if (const auto* p = f.as<node::Product>()) {
        flatten(p->lhs, out);
        flatten(p->rhs, out);
    } else if (const auto* s = f.as<node::ScalarMul>()) {
        out.scalar *= s->factor;
        flatten(s->arg, out);
    } else {
        out.factors.push_back(f);
    }
}

std::optional<GrowthCertificate> scaled(std::optional<GrowthCertificate> c, const GaussianRational& k) {
    if (c) c->M = positive_or_one(c->M * magnitude_upper(k));
    return c;
}

/// Global certificate for the cofactor f/g when structure guarantees both the zero
/// containment and the growth bound.
std::optional<GrowthCertificate> global_cofactor_cert(const Expr& g, const Expr& f, const ZeroSetInfo& zg) {
    Factored parts;
    flatten(f, parts);
    for (std::size_t i = 0; i < parts.factors.size(); ++i) {
        if (!structurally_equal(parts.factors[i], g)) continue;
        std::optional<Expr> rest;
        for (std::size_t j = 0; j < parts.factors.size(); ++j) {
            if (j == i) continue;
            rest = rest ? product(*rest, parts.factors[j]) : parts.factors[j];
        }
        auto cert = rest ? structural_certificate(*rest) : std::optional<GrowthCertificate>(GrowthCertificate{1, 0});
        if (cert) return scaled(cert, parts.scalar);
    }
    if (const auto* mx = g.as<node::MagnitudeMaxSq>()) {
        // |f| / max_k |e_k|^2 <= 1/|f| when f is one of the e_k.
        for (const auto& a : mx->args) {
            if (!structurally_equal(a, f)) continue;
            if (auto low = nonzero_lower_bound(f)) return GrowthCertificate{1 / low->delta, low->m};
        }
    }
    if (const auto* mx = f.as<node::MagnitudeMaxSq>(); mx && mx->args.size() == 1 && structurally_equal(mx->args[0], g)) {
        // |g|^2 / g = conj(g)
        if (auto c = structural_certificate(g)) return c;
    }
    if (zg.kind == ZeroSetInfo::Kind::ExactFinite) return structural_certificate(cofactor(f, g));
    return std::nullopt;
}

/// Global bound on |f| / sqrt(sum_k |f_k|^2) read off the shape of f.
std::optional<GrowthCertificate> member_cert(const Expr& f, const std::vector<Expr>& gens) {
    for (const auto& g : gens) {
        if (structurally_equal(f, g)) return GrowthCertificate{1, 0};
    }
    if (is_identically_zero(f)) return GrowthCertificate{1, 0};
    if (const auto* p = f.as<node::Product>()) {
        for (const auto& [in, out] : {std::pair{p->lhs, p->rhs}, std::pair{p->rhs, p->lhs}}) {
            auto a = member_cert(in, gens);
            auto b = a ? structural_certificate(out) : std::nullopt;
            if (a && b) return GrowthCertificate{a->M * b->M, a->m + b->m};
        }
        return std::nullopt;
    }
    if (const auto* s = f.as<node::Sum>()) {
        auto a = member_cert(s->lhs, gens);
        auto b = a ? member_cert(s->rhs, gens) : std::nullopt;
        if (a && b) return GrowthCertificate{a->M + b->M, std::max(a->m, b->m)};
        return std::nullopt;
    }
    if (const auto* s = f.as<node::ScalarMul>()) return scaled(member_cert(s->arg, gens), s->factor);
    if (const auto* c = f.as<node::Conj>()) return member_cert(c->arg, gens);
    if (const auto* mx = f.as<node::MagnitudeMaxSq>()) {
        // max_j |f_j|^2 <= Q, so |f| / sqrt(Q) <= sqrt(Q) <= sqrt(sum M_j^2) (1+|n|)^max m_j.
        Rational total = 0;
        unsigned m = 0;
        for (const auto& a : mx->args) {
            bool is_gen = std::any_of(gens.begin(), gens.end(), [&](const Expr& g) { return structurally_equal(a, g); });
            if (!is_gen) return std::nullopt;
            auto c = structural_certificate(a);
            if (!c) return std::nullopt;
            total += c->M * c->M;
            m = std::max(m, c->m);
        }
        return GrowthCertificate{positive_or_one(sqrt_upper(total)), m};
    }
    return std::nullopt;
}

std::vector<TrendSample> lower_trend(const ShellProfile& prof, unsigned m, std::size_t count = 4) {
    std::vector<TrendSample> out;
    const std::size_t shells = prof.min.size();
    for (std::size_t r = shells > count ? shells - count : 0; r < shells; ++r) {
        out.push_back({prof.argmin[r], prof.min[r] * pow(Rational(1 + static_cast<Coord>(r)), m * prof.power)});
    }
    return out;
}

}  // namespace

Expr cofactor(const Expr& f, const Expr& g) { return quotient(f, g); }

DivisibilityVerdict divides(const Expr& g, const Expr& f, const ScanConfig& cfg) {
    require_same_dim(g, f);
    const ZeroSetInfo zg = zero_set(g);
    if (auto p = exact_refutation(zg, f)) return RefutedAtZero{*p};

    const Expr cof = cofactor(f, g);
    const Expr identity = sum(product(cof, g), scalar_mul(GaussianRational(-1), f));
    if (auto p = window_refutation(identity, g, f, cfg.window)) return RefutedAtZero{*p};

    if (auto cert = global_cofactor_cert(g, f, zg)) return Divides{cof, *cert};

    const ShellProfile prof = shell_profile(cof, cfg.window);
    if (auto cert = fit_upper(prof, cfg.m_cap)) return Divides{cof, *cert};
    return RefutedEmpirically{cfg.m_cap, tail_trend(prof, cfg.m_cap)};
}

InvertibilityVerdict is_invertible(const Expr& f, const ScanConfig& cfg) {
    const ZeroSetInfo zs = zero_set(f);
    const auto zeros = find_zeros(f, zs, cfg.window, 1);
    if (!zeros.empty()) return NotInvertible{zeros.front()};

    const Expr inverse = quotient(one(f.dim()), f);
    if (zs.is_empty()) {
        if (auto low = nonzero_lower_bound(f)) return Invertible{*low, inverse};
    }
    const ShellProfile prof = shell_profile(f, cfg.window);
    if (auto low = fit_lower(prof, cfg.m_cap)) return Invertible{*low, inverse};
    return Inconclusive{"no zero found and no lower bound fits with m <= m_cap", lower_trend(prof, cfg.m_cap)};
}

Expr gcd(const std::vector<Expr>& fs) {
    if (fs.empty()) throw EmptyList("gcd");
    return magnitude_max_sq(fs);
}

Expr squared_norm_sum(const std::vector<Expr>& gens) {
    if (gens.empty()) throw EmptyList("generators");
    std::optional<Expr> q;
    for (const auto& g : gens) {
        Expr term = product(conj(g), g);
        q = q ? sum(*q, term) : term;
    }
    return *q;
}

MembershipVerdict ideal_member(const Expr& f, const std::vector<Expr>& gens, const ScanConfig& cfg) {
    if (gens.empty()) throw EmptyList("generators");
    for (const auto& g : gens) require_same_dim(g, f);

    const Expr common = gcd(gens);
    if (auto p = exact_refutation(zero_set(common), f)) return NotMember{*p};

    const Expr q = squared_norm_sum(gens);
    std::vector<Expr> cofactors;
    std::optional<Expr> combo;
    for (const auto& g : gens) {
        cofactors.push_back(quotient(product(conj(g), f), q));
        Expr term = product(g, cofactors.back());
        combo = combo ? sum(*combo, term) : term;
    }
    const Expr identity = sum(*combo, scalar_mul(GaussianRational(-1), f));
    if (auto p = window_refutation(identity, common, f, cfg.window)) return NotMember{*p};
    if (contains_half_root(identity)) {
        return Inconclusive{"half_root operands: the Bezout identity cannot be checked exactly", {}};
    }

    if (auto cert = member_cert(f, gens)) return Member{BezoutWitness{std::move(cofactors), *cert}};

    // |f| / sqrt(Q), as a half_root so the fit stays exact.
    const Expr ratio = half_root(quotient(product(conj(f), f), q));
    const ShellProfile prof = shell_profile(ratio, cfg.window);
    if (auto cert = fit_upper(prof, cfg.m_cap)) return Member{BezoutWitness{std::move(cofactors), *cert}};
    return Inconclusive{"Bezout identity holds on the window but |f|/sqrt(sum |f_k|^2) fits no m <= m_cap",
                        tail_trend(prof, cfg.m_cap)};
}

PrincipalReport principal_generator(const std::vector<Expr>& gens, const ScanConfig& cfg) {
    const Expr d = gcd(gens);
    std::vector<DivisibilityVerdict> forward;
    for (const auto& g : gens) forward.push_back(divides(d, g, cfg));
    return {d, std::move(forward), ideal_member(d, gens, cfg)};
}

}  // namespace sprime
