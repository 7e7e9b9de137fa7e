#include "sprime/ideals.hpp"

#include "sprime/errors.hpp"
#include "sprime/scan.hpp"

namespace sprime {

namespace {

const Rational kELower(2718281, 1000000);
const Rational kEUpper(2718282, 1000000);

// Certified-no search stops here; e^(2*4096) already has ~3.5k digits.
constexpr std::int64_t kMaxCertifyingTerm = 4096;

Point diagonal(std::size_t dim, std::int64_t k) { return Point(std::vector<Coord>(dim, k)); }

bool window_is_zero(const Expr& e, const Window& w) {
    const auto pts = window_points(w);
    return !find_first(*pts, [&] { return Evaluator(e); }, [](Evaluator& ev, Coords n) { return !ev.is_zero(n); });
}

NonfixedSample sample_at(MagnitudeProbe& probe, std::size_t dim, std::size_t j, std::int64_t k, unsigned p) {
    const Point at = diagonal(dim, k);
    AbsPower a = probe.at(at);
    Rational mag = sgn(a.value) == 0 ? Rational(0) : pow(a.value, p / a.power);
    const auto e = static_cast<unsigned>(k) * p;
    return {j, k, mag, pow(kELower, e) * mag, pow(kEUpper, e) * mag};
}

unsigned probe_power(MagnitudeProbe& probe, std::size_t dim) {
    // Every point reports the same power unless the value is zero; take the largest seen
    // at a few points and never less than 2.
    unsigned p = 2;
    for (std::int64_t k = 0; k < 3; ++k) p = std::max(p, probe.at(diagonal(dim, k)).power);
    return p;
}

}  // namespace

bool fixed_maximal_member(const Expr& f, const Point& k) { return is_zero_at(f, k); }

MaximalityWitness maximality_witness(const Point& k, const Expr& f, const Window& w) {
    if (k.dim() != f.dim()) throw DimensionMismatch(f.dim(), k.dim());
    const GaussianRational fk = eval(f, k);
    if (fk.is_zero()) throw VanishesAtK();
    const GaussianRational inv = GaussianRational(1) / fk;
    const std::size_t d = f.dim();
    Expr g = f.is<node::Const>() ? constant(d, GaussianRational(1) - f.as<node::Const>()->value * inv)
                                 : sum(one(d), scalar_mul(-inv, f));
    const Expr residual = sum(sum(g, scalar_mul(inv, f)), constant(d, GaussianRational(-1)));
    const bool ok = is_zero_at(g, k) && window_is_zero(residual, w);
    return {std::move(g), ok};
}

Subsequence Subsequence::linear(std::int64_t step, std::int64_t offset) {
    if (step < 1 || step + offset < 1) throw InvalidArgument("subsequence must be strictly increasing and positive");
    Subsequence s;
    s.step_ = step;
    s.offset_ = offset;
    return s;
}

Subsequence Subsequence::explicit_terms(std::vector<std::int64_t> terms) {
    if (terms.empty()) throw EmptyList("subsequence");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i] < 1 || (i > 0 && terms[i] <= terms[i - 1])) {
            throw InvalidArgument("subsequence must be strictly increasing and positive");
        }
    }
    Subsequence s;
    s.terms_ = std::move(terms);
    return s;
}

std::optional<std::int64_t> Subsequence::at(std::size_t j) const {
    if (j == 0) throw InvalidArgument("subsequence index is 1-based");
    if (!terms_.empty()) {
        if (j > terms_.size()) return std::nullopt;
        return terms_[j - 1];
    }
    return step_ * static_cast<std::int64_t>(j) + offset_;
}

std::optional<std::size_t> Subsequence::length() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.size();
}

std::string_view kind_name(NonfixedVerdict::Kind k) noexcept {
    switch (k) {
        case NonfixedVerdict::Kind::CertifiedYes:
            return "certified_yes";
        case NonfixedVerdict::Kind::CertifiedNo:
            return "certified_no";
        case NonfixedVerdict::Kind::EmpiricalYes:
            return "empirical_yes";
        case NonfixedVerdict::Kind::EmpiricalNo:
            break;
    }
    return "empirical_no";
}

NonfixedVerdict nonfixed_ideal_member(const Expr& f, const Subsequence& seq, std::size_t horizon) {
    if (horizon == 0) throw InvalidArgument("horizon J must be at least 1");
    using Kind = NonfixedVerdict::Kind;
    const std::size_t dim = f.dim();
    MagnitudeProbe probe(f);
    const unsigned p = probe_power(probe, dim);

    NonfixedVerdict out{Kind::EmpiricalNo, "", std::nullopt, p, {}};
    for (std::size_t j = 1; j <= horizon; ++j) {
        auto k = seq.at(j);
        if (!k) break;
        out.samples.push_back(sample_at(probe, dim, j, *k, p));
    }

    const ZeroSetInfo zs = zero_set(f);
    if (zs.kind == ZeroSetInfo::Kind::ExactCofinite) {
        out.kind = Kind::CertifiedYes;
        out.reason = "f vanishes off a finite set, hence at all but finitely many subsequence points";
        return out;
    }
    if (zs.kind == ZeroSetInfo::Kind::ExactFinite) {
        if (auto low = nonzero_lower_bound(f)) {
            // |f| >= delta (1+|n|)^-m at all but finitely many diagonal points, so
            // e^(k_j)|f(k_j)| grows without bound along any increasing subsequence.
            out.kind = Kind::CertifiedNo;
            out.reason = "f has finitely many zeros and a polynomial lower bound";
            for (std::size_t j = 1;; ++j) {
                auto k = seq.at(j);
                if (!k || *k > kMaxCertifyingTerm) break;
                const NonfixedSample s = sample_at(probe, dim, j, *k, p);
                if (s.lower > 1) {
                    out.j = j;
                    break;
                }
            }
            return out;
        }
    }

    // Trend over the last quarter of the horizon, on the upper bounds.
    out.reason = "no structural rule applies; trend of e^(p k_j)|f|^p over the horizon";
    const std::size_t total = out.samples.size();
    const std::size_t tail = std::max<std::size_t>(1, total / 4);
    bool shrinking = true;
    for (std::size_t i = total - tail; i < total; ++i) {
        if (i > 0 && out.samples[i].upper > out.samples[i - 1].upper) shrinking = false;
    }
    out.kind = shrinking && out.samples.back().upper < 1 ? Kind::EmpiricalYes : Kind::EmpiricalNo;
    return out;
}

PrimeClassification classify_principal_prime(const Expr& d, const ScanConfig& cfg) {
    const ZeroSetInfo zs = zero_set(d);
    if (zs.kind == ZeroSetInfo::Kind::Unknown) {
        return Inconclusive{"zero set of d is not structurally known; a window scan cannot count zeros", {}};
    }
    const auto zeros = find_zeros(d, zs, cfg.window, 2);

    if (zeros.size() >= 2) {
        const Point& m = zeros[0];
        const Point& n = zeros[1];
        Expr a = dirac_complement(n);
        Expr b = sum(d, finite_support(d.dim(), {{n, GaussianRational(1)}}));
        const Expr residual = sum(product(a, b), scalar_mul(GaussianRational(-1), d));
        bool checked;
        if (contains_half_root(residual)) {
            // b = d + 1_{n} only differs from d at n; the identity is exact by zero tests.
            checked = is_zero_at(d, m) && is_zero_at(d, n);
        } else {
            checked = window_is_zero(residual, cfg.window);
        }
        return NotPrime{std::move(a), std::move(b), m, n, checked};
    }

    if (zs.kind == ZeroSetInfo::Kind::Pattern) {
        return Inconclusive{"d has a patterned zero set with fewer than two zeros in the window", {}};
    }

    if (zeros.empty()) {
        auto inv = is_invertible(d, cfg);
        if (auto* w = std::get_if<Invertible>(&inv)) return NotProper{*w};
        if (auto* inc = std::get_if<Inconclusive>(&inv)) return *inc;
        return Inconclusive{"d has no zero but invertibility could not be established", {}};
    }

    // Exactly one zero, decided exactly (finite zero set).
    const Point& star = zeros[0];
    Expr inverse = quotient(one(d.dim()), d);
    if (auto cert = structural_certificate(inverse)) return FixedMaximal{star, inverse, *cert};
    const ShellProfile prof = shell_profile(inverse, cfg.window);
    if (auto cert = fit_upper(prof, cfg.m_cap)) return FixedMaximal{star, inverse, *cert};
    return Inconclusive{"d has exactly one zero but 1/|d| fits no certificate with m <= m_cap",
                        tail_trend(prof, cfg.m_cap)};
}

Expr separator(const Point& n1, const Point& n2) {
    if (n1.dim() != n2.dim()) throw DimensionMismatch(n1.dim(), n2.dim());
    if (n1 == n2) throw EqualPoints();
    return dirac(n2);
}

}  // namespace sprime
