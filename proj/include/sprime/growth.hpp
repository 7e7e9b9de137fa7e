#pragma once

#include "sprime/evaluator.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace sprime {

/// Global: proved for every lattice point by structural rules. Window: observed on a
/// finite window only.
enum class Scope { Global, Window };
std::string_view scope_name(Scope s) noexcept;

/// |f(n)| <= M (1 + |n|_1)^m
struct GrowthCertificate {
    Rational M{1};
    unsigned m = 0;
    Scope scope = Scope::Global;
};

/// |f(n)| >= delta (1 + |n|_1)^(-m)
struct LowerCertificate {
    Rational delta{1};
    unsigned m = 0;
    Scope scope = Scope::Global;
};

/// Result of checking a certificate at every window point. Comparisons are exact on
/// p-th powers: lhs = |f(n)|^p, rhs = (M (1+|n|)^m)^p (or the lower analogue).
struct AuditReport {
    bool validated = true;
    std::optional<Point> point;  // first counterexample in window order
    Rational lhs;
    Rational rhs;
    unsigned power = 2;
    std::uint64_t samples = 0;
    Window window;
    Scope scope = Scope::Global;  // scope of the audited certificate
};

/// Upper bound on |c| from |c|^2 (exact for perfect squares).
Rational magnitude_upper(const GaussianRational& c);
Rational magnitude_lower(const GaussianRational& c);

/// Structural certificate valid on all of Z^d. Throws QuotientNotInferable if f has a
/// quotient node.
GrowthCertificate infer_certificate(const Expr& f);

/// Same rules, extended to quotients whose denominator has a structural lower bound
/// (|a/b| <= M_a (1+|n|)^m_a / (delta_b (1+|n|)^-m_b) wherever b != 0, and 0 elsewhere).
std::optional<GrowthCertificate> structural_certificate(const Expr& f);

/// Structural lower bound valid at every point where f is nonzero. Combined with an empty
/// zero set it is a global lower bound.
std::optional<LowerCertificate> nonzero_lower_bound(const Expr& f);

AuditReport audit_upper(const Expr& f, const GrowthCertificate& cert, const Window& w);
AuditReport audit_lower(const Expr& f, const LowerCertificate& cert, const Window& w);

/// Per-shell extremes of |f|^power over a window (shell r = points with |n|_1 = r).
struct ShellProfile {
    Window window;
    unsigned power = 2;
    std::vector<Rational> max;
    std::vector<Rational> min;
    std::vector<Point> argmax;  // first maximizer in window order
    std::vector<Point> argmin;
    std::optional<Point> first_zero;
    std::uint64_t samples = 0;
};

ShellProfile shell_profile(const Expr& f, const Window& w);

inline constexpr unsigned kDefaultMCap = 32;

/// Smallest m <= m_cap whose normalized shell maxima stop growing toward the window edge,
/// with M the least integer bounding them. Scope is always Window.
std::optional<GrowthCertificate> fit_certificate(const Expr& f, const Window& w, unsigned m_cap = kDefaultMCap);
std::optional<GrowthCertificate> fit_upper(const ShellProfile& profile, unsigned m_cap = kDefaultMCap);

/// Lower analogue; nullopt when f vanishes somewhere in the window or no m fits.
std::optional<LowerCertificate> fit_lower_certificate(const Expr& f, const Window& w, unsigned m_cap = kDefaultMCap);
std::optional<LowerCertificate> fit_lower(const ShellProfile& profile, unsigned m_cap = kDefaultMCap);

/// A shell maximum normalized by (1+r)^(m p): the evidence behind a failed fit.
struct TrendSample {
    Point point;
    Rational ratio;  // |f(point)|^p / (1+|point|)^(m p)
};

/// Normalized maxima of the last `count` shells at exponent m.
std::vector<TrendSample> tail_trend(const ShellProfile& profile, unsigned m, std::size_t count = 4);

}  // namespace sprime
