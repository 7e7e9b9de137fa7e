#include "sprime/growth.hpp"

#include "sprime/errors.hpp"
#include "sprime/scan.hpp"

#include <algorithm>

namespace sprime {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

using Upper = std::optional<GrowthCertificate>;
using Lower = std::optional<LowerCertificate>;

Rational at_least_one(Rational q) { return q < 1 ? Rational(1) : q; }

Rational positive_or_one(Rational q) { return sgn(q) > 0 ? q : Rational(1); }

Rational norm_factor(const Point& v, unsigned m) { return pow(Rational(1 + norm1(v)), m); }

Upper upper(const Expr& f, bool allow_quotient);

Lower lower(const Expr& f) {
    return std::visit(
        Overloaded{
            [](const node::Const& x) -> Lower {
                if (x.value.is_zero()) return LowerCertificate{1, 0};  // no nonzero points
                return LowerCertificate{magnitude_lower(x.value), 0};
            },
            [](const node::CoordPoly& x) -> Lower {
                if (x.terms.empty()) return LowerCertificate{1, 0};
                // Even powers with real coefficients of one sign: |f| >= |constant term|.
                int sign = 0;
                std::optional<Rational> constant_term;
                for (const auto& t : x.terms) {
                    if (sgn(t.coeff.im()) != 0 || sgn(t.coeff.re()) == 0) return std::nullopt;
                    if (sign == 0) sign = sgn(t.coeff.re());
                    if (sgn(t.coeff.re()) != sign) return std::nullopt;
                    for (unsigned e : t.exponents) {
                        if (e % 2 != 0) return std::nullopt;
                    }
                    if (t.degree() == 0) constant_term = abs(t.coeff.re());
                }
                if (!constant_term) return std::nullopt;
                return LowerCertificate{*constant_term, 0};
            },
            [](const node::Dirac&) -> Lower { return LowerCertificate{1, 0}; },
            [](const node::DiracComplement&) -> Lower { return LowerCertificate{1, 0}; },
            [](const node::PatternMask&) -> Lower { return LowerCertificate{1, 0}; },
            [](const node::InvNormPower& x) -> Lower { return LowerCertificate{1, x.m}; },
            [](const node::FiniteSupport& x) -> Lower {
                std::optional<Rational> least;
                for (const auto& [p, v] : x.entries) {
                    if (v.is_zero()) continue;
                    Rational b = magnitude_lower(v);
                    if (!least || b < *least) least = b;
                }
                return LowerCertificate{least.value_or(Rational(1)), 0};
            },
            [](const node::Sum&) -> Lower { return std::nullopt; },
            [](const node::Product& x) -> Lower {
                auto a = lower(x.lhs);
                auto b = lower(x.rhs);
                if (!a || !b) return std::nullopt;
                return LowerCertificate{a->delta * b->delta, a->m + b->m};
            },
            [](const node::Conj& x) -> Lower { return lower(x.arg); },
            [](const node::ScalarMul& x) -> Lower {
                if (x.factor.is_zero()) return LowerCertificate{1, 0};
                auto a = lower(x.arg);
                if (!a) return std::nullopt;
                return LowerCertificate{a->delta * magnitude_lower(x.factor), a->m};
            },
            [](const node::Shift& x) -> Lower {
                // 1 + |n - v| <= (1 + |n|)(1 + |v|)
                auto a = lower(x.arg);
                if (!a) return std::nullopt;
                return LowerCertificate{a->delta / norm_factor(x.by, a->m), a->m};
            },
            [](const node::Quotient& x) -> Lower {
                auto num = lower(x.num);
                auto den = upper(x.den, true);
                if (!num || !den) return std::nullopt;
                return LowerCertificate{num->delta / den->M, num->m + den->m};
            },
            [](const node::MagnitudeMaxSq& x) -> Lower {
                Rational delta;
                unsigned m = 0;
                bool first = true;
                for (const auto& a : x.args) {
                    auto b = lower(a);
                    if (!b) return std::nullopt;
                    Rational sq = b->delta * b->delta;
                    if (first || sq < delta) delta = sq;
                    m = std::max(m, 2 * b->m);
                    first = false;
                }
                return LowerCertificate{delta, m};
            },
            [](const node::HalfRoot& x) -> Lower {
                // sqrt(delta) >= min(delta, 1)
                auto a = lower(x.arg);
                if (!a) return std::nullopt;
                return LowerCertificate{std::min(a->delta, Rational(1)), (a->m + 1) / 2};
            },
        },
        f.body());
}

Upper upper(const Expr& f, bool allow_quotient) {
    auto rec = [&](const Expr& e) { return upper(e, allow_quotient); };
    return std::visit(
        Overloaded{
            [](const node::Const& x) -> Upper { return GrowthCertificate{at_least_one(magnitude_upper(x.value)), 0}; },
            [](const node::CoordPoly& x) -> Upper {
                // |n^e| <= (1+|n|)^deg(e)
                Rational total = 0;
                unsigned degree = 0;
                for (const auto& t : x.terms) {
                    total += magnitude_upper(t.coeff);
                    degree = std::max(degree, t.degree());
                }
                return GrowthCertificate{positive_or_one(total), degree};
            },
            [](const node::Dirac&) -> Upper { return GrowthCertificate{1, 0}; },
            [](const node::DiracComplement&) -> Upper { return GrowthCertificate{1, 0}; },
            [](const node::FiniteSupport& x) -> Upper {
                Rational best = 0;
                for (const auto& [p, v] : x.entries) best = std::max(best, magnitude_upper(v));
                return GrowthCertificate{positive_or_one(best), 0};
            },
            [](const node::PatternMask&) -> Upper { return GrowthCertificate{1, 0}; },
            [](const node::InvNormPower&) -> Upper { return GrowthCertificate{1, 0}; },
            [&](const node::Sum& x) -> Upper {
                auto a = rec(x.lhs);
                auto b = rec(x.rhs);
                if (!a || !b) return std::nullopt;
                return GrowthCertificate{a->M + b->M, std::max(a->m, b->m)};
            },
            [&](const node::Product& x) -> Upper {
                auto a = rec(x.lhs);
                auto b = rec(x.rhs);
                if (!a || !b) return std::nullopt;
                return GrowthCertificate{a->M * b->M, a->m + b->m};
            },
            [&](const node::Conj& x) -> Upper { return rec(x.arg); },
            [&](const node::ScalarMul& x) -> Upper {
                auto a = rec(x.arg);
                if (!a) return std::nullopt;
                return GrowthCertificate{positive_or_one(a->M * magnitude_upper(x.factor)), a->m};
            },
            [&](const node::Shift& x) -> Upper {
                auto a = rec(x.arg);
                if (!a) return std::nullopt;
                return GrowthCertificate{a->M * norm_factor(x.by, a->m), a->m};
            },
            [&](const node::Quotient& x) -> Upper {
                if (!allow_quotient) throw QuotientNotInferable();
                auto num = rec(x.num);
                auto den = lower(x.den);
                if (!num || !den) return std::nullopt;
                return GrowthCertificate{num->M / den->delta, num->m + den->m};
            },
            [&](const node::MagnitudeMaxSq& x) -> Upper {
                // The node holds |e_k|^2, so the bound squares.
                Rational M = 0;
                unsigned m = 0;
                for (const auto& a : x.args) {
                    auto b = rec(a);
                    if (!b) return std::nullopt;
                    M = std::max(M, Rational(b->M * b->M));
                    m = std::max(m, 2 * b->m);
                }
                return GrowthCertificate{M, m};
            },
            [&](const node::HalfRoot& x) -> Upper {
                auto a = rec(x.arg);
                if (!a) return std::nullopt;
                return GrowthCertificate{at_least_one(a->M), (a->m + 1) / 2};
            },
        },
        f.body());
}

/// The power p used by MagnitudeProbe for every point of f (2 for half_root-free trees).
unsigned structural_power(const Expr& f) {
    if (!contains_half_root(f)) return 2;
    return std::visit(
        Overloaded{
            [](const node::HalfRoot& x) { return 2 * structural_power(x.arg); },
            [](const node::Product& x) { return std::max(structural_power(x.lhs), structural_power(x.rhs)); },
            [](const node::Quotient& x) { return std::max(structural_power(x.num), structural_power(x.den)); },
            [](const node::Conj& x) { return structural_power(x.arg); },
            [](const node::Shift& x) { return structural_power(x.arg); },
            [](const node::ScalarMul& x) { return std::max(2u, structural_power(x.arg)); },
            [](const node::MagnitudeMaxSq& x) {
                unsigned p = 2;
                for (const auto& a : x.args) p = std::max(p, structural_power(a));
                return p / 2;
            },
            [](const auto&) -> unsigned { throw HalfRootNotExact(); },
        },
        f.body());
}

Rational normalized(const AbsPower& a, unsigned target) {
    if (sgn(a.value) == 0) return 0;
    if (a.power > target || target % a.power != 0) throw std::logic_error("inconsistent magnitude power");
    return pow(a.value, target / a.power);
}

Rational one_plus_pow(Coord r, unsigned e) { return pow(Rational(1 + r), e); }

template <class Bound, class Holds>
AuditReport run_audit(const Expr& f, const Window& w, Scope scope, Bound bound, Holds holds) {
    const unsigned p = structural_power(f);
    const auto pts = window_points(w);
    std::vector<Rational> rhs(static_cast<std::size_t>(w.radius) + 1);
    for (Coord r = 0; r <= w.radius; ++r) rhs[static_cast<std::size_t>(r)] = bound(r, p);

    auto first = find_first(
        *pts, [&] { return MagnitudeProbe(f); },
        [&](MagnitudeProbe& probe, Coords n) {
            return !holds(normalized(probe.at(n), p), rhs[static_cast<std::size_t>(norm1(n))]);
        });

    AuditReport report;
    report.window = w;
    report.power = p;
    report.scope = scope;
    if (!first) {
        report.samples = pts->size();
        return report;
    }
    const Point n = pts->point(*first);
    MagnitudeProbe probe(f);
    report.validated = false;
    report.point = n;
    report.lhs = normalized(probe.at(n), p);
    report.rhs = rhs[static_cast<std::size_t>(norm1(n))];
    report.samples = *first + 1;
    return report;
}

}  // namespace

std::string_view scope_name(Scope s) noexcept { return s == Scope::Global ? "global" : "window"; }

Rational magnitude_upper(const GaussianRational& c) { return sqrt_upper(c.squared_magnitude()); }
Rational magnitude_lower(const GaussianRational& c) { return sqrt_lower(c.squared_magnitude()); }

GrowthCertificate infer_certificate(const Expr& f) {
    if (contains_quotient(f)) throw QuotientNotInferable();
    return *upper(f, false);
}

std::optional<GrowthCertificate> structural_certificate(const Expr& f) { return upper(f, true); }

std::optional<LowerCertificate> nonzero_lower_bound(const Expr& f) { return lower(f); }

AuditReport audit_upper(const Expr& f, const GrowthCertificate& cert, const Window& w) {
    return run_audit(
        f, w, cert.scope,
        [&](Coord r, unsigned p) -> Rational { return pow(cert.M, p) * one_plus_pow(r, cert.m * p); },
        [](const Rational& lhs, const Rational& rhs) { return lhs <= rhs; });
}

AuditReport audit_lower(const Expr& f, const LowerCertificate& cert, const Window& w) {
    return run_audit(
        f, w, cert.scope,
        [&](Coord r, unsigned p) -> Rational { return pow(cert.delta, p) / one_plus_pow(r, cert.m * p); },
        [](const Rational& lhs, const Rational& rhs) { return lhs >= rhs; });
}

ShellProfile shell_profile(const Expr& f, const Window& w) {
    ShellProfile prof;
    prof.window = w;
    prof.power = structural_power(f);
    const auto shells = static_cast<std::size_t>(w.radius) + 1;
    prof.max.assign(shells, Rational(0));
    prof.min.assign(shells, Rational(0));
    prof.argmax.assign(shells, Point::origin(w.dim));
    prof.argmin.assign(shells, Point::origin(w.dim));
    std::vector<std::optional<std::size_t>> zero_at(shells);

    const auto pts = window_points(w);
    const auto offsets = shell_offsets(w);
    const unsigned p = prof.power;
    for_ranges(
        offsets, [&] { return MagnitudeProbe(f); },
        [&](MagnitudeProbe& probe, std::size_t r, std::size_t begin, std::size_t end) {
            Rational hi = -1;
            Rational lo = -1;
            std::size_t ihi = begin;
            std::size_t ilo = begin;
            for (std::size_t i = begin; i < end; ++i) {
                Rational v = normalized(probe.at((*pts)[i]), p);
                if (sgn(v) == 0 && !zero_at[r]) zero_at[r] = i;
                if (v > hi) {
                    hi = v;
                    ihi = i;
                }
                if (lo < 0 || v < lo) {
                    lo = v;
                    ilo = i;
                }
            }
            prof.max[r] = hi;
            prof.min[r] = lo;
            prof.argmax[r] = pts->point(ihi);
            prof.argmin[r] = pts->point(ilo);
        });
    for (const auto& z : zero_at) {
        if (z) {
            prof.first_zero = pts->point(*z);
            break;
        }
    }
    prof.samples = pts->size();
    return prof;
}

std::optional<GrowthCertificate> fit_upper(const ShellProfile& prof, unsigned m_cap) {
    const std::size_t shells = prof.max.size();
    const unsigned p = prof.power;
    const std::size_t half = (shells - 1) / 2;
    const Rational slack = pow(Rational(2), p);  // 2^(p/2) on |f|^p, compared squared
    for (unsigned m = 0; m <= m_cap; ++m) {
        std::vector<Rational> s(shells);
        for (std::size_t r = 0; r < shells; ++r) s[r] = prof.max[r] / one_plus_pow(static_cast<Coord>(r), m * p);
        const Rational top = *std::max_element(s.begin(), s.end());
        const Rational inner = *std::max_element(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(half) + 1);
        const Rational outer = shells > half + 1
                                   ? *std::max_element(s.begin() + static_cast<std::ptrdiff_t>(half) + 1, s.end())
                                   : Rational(0);
        // Accept once the outer half no longer outgrows the inner half. With nothing
        // nonzero in the inner half there is no trend to read; take the current m.
        if (sgn(inner) == 0 || outer * outer <= slack * inner * inner) {
            return GrowthCertificate{Rational(ceil_root(top, p)), m, Scope::Window};
        }
    }
    return std::nullopt;
}

std::optional<LowerCertificate> fit_lower(const ShellProfile& prof, unsigned m_cap) {
    if (prof.first_zero) return std::nullopt;
    const std::size_t shells = prof.min.size();
    const unsigned p = prof.power;
    const std::size_t half = (shells - 1) / 2;
    const Rational slack = pow(Rational(2), p);
    for (unsigned m = 0; m <= m_cap; ++m) {
        std::vector<Rational> t(shells);
        for (std::size_t r = 0; r < shells; ++r) t[r] = prof.min[r] * one_plus_pow(static_cast<Coord>(r), m * p);
        const Rational bottom = *std::min_element(t.begin(), t.end());
        const Rational inner = *std::min_element(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(half) + 1);
        const bool has_outer = shells > half + 1;
        const Rational outer =
            has_outer ? *std::min_element(t.begin() + static_cast<std::ptrdiff_t>(half) + 1, t.end()) : inner;
        if (slack * outer * outer >= inner * inner) {
            const Integer n = ceil_root(1 / bottom, p);
            return LowerCertificate{Rational(1) / Rational(n), m, Scope::Window};
        }
    }
    return std::nullopt;
}

std::optional<GrowthCertificate> fit_certificate(const Expr& f, const Window& w, unsigned m_cap) {
    return fit_upper(shell_profile(f, w), m_cap);
}

std::optional<LowerCertificate> fit_lower_certificate(const Expr& f, const Window& w, unsigned m_cap) {
    return fit_lower(shell_profile(f, w), m_cap);
}

std::vector<TrendSample> tail_trend(const ShellProfile& prof, unsigned m, std::size_t count) {
    std::vector<TrendSample> out;
    const std::size_t shells = prof.max.size();
    for (std::size_t r = shells > count ? shells - count : 0; r < shells; ++r) {
        out.push_back({prof.argmax[r], prof.max[r] / one_plus_pow(static_cast<Coord>(r), m * prof.power)});
    }
    return out;
}

}  // namespace sprime
