#pragma once

#include "sprime/ring_ops.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace sprime {

/// f lies in the fixed maximal ideal m_k, i.e. f(k) = 0 (exact, half_root allowed).
bool fixed_maximal_member(const Expr& f, const Point& k);

struct MaximalityWitness {
    Expr g;           // 1 - f/f(k); vanishes at k
    bool unit_check;  // g + f/f(k) = 1 at every window point
};

/// Throws VanishesAtK when f(k) = 0, HalfRootNotExact when f(k) is not exact.
MaximalityWitness maximality_witness(const Point& k, const Expr& f, const Window& w);

/// Strictly increasing positive integers k_1 < k_2 < ...: either k_j = step*j + offset or
/// an explicit finite list.
class Subsequence {
public:
    static Subsequence linear(std::int64_t step, std::int64_t offset);
    static Subsequence explicit_terms(std::vector<std::int64_t> terms);

    /// 1-based; nullopt past the end of an explicit list.
    std::optional<std::int64_t> at(std::size_t j) const;
    /// Largest j available (unbounded for linear).
    std::optional<std::size_t> length() const;
    bool is_linear() const noexcept { return terms_.empty(); }
    std::int64_t step() const noexcept { return step_; }
    std::int64_t offset() const noexcept { return offset_; }
    const std::vector<std::int64_t>& terms() const noexcept { return terms_; }

private:
    std::int64_t step_ = 1;
    std::int64_t offset_ = 0;
    std::vector<std::int64_t> terms_;
};

/// One term of e^(p k_j) |f(k_j,...,k_j)|^p with exact rational bounds from 2.718281 < e < 2.718282.
struct NonfixedSample {
    std::size_t j;
    std::int64_t k;
    Rational magnitude;  // |f|^p
    Rational lower;
    Rational upper;
};

struct NonfixedVerdict {
    enum class Kind { CertifiedYes, CertifiedNo, EmpiricalYes, EmpiricalNo };
    Kind kind;
    std::string reason;
    std::optional<std::size_t> j;  // CertifiedNo: an index with e^(k_j)|f| > 1
    unsigned power = 2;
    std::vector<NonfixedSample> samples;
};
std::string_view kind_name(NonfixedVerdict::Kind k) noexcept;

/// Membership in {f : e^(k_j) f(k_j,...,k_j) -> 0}.
NonfixedVerdict nonfixed_ideal_member(const Expr& f, const Subsequence& seq, std::size_t horizon);

struct FixedMaximal {
    Point point;
    Expr inverse;                 // 1/d with zero fill at point
    GrowthCertificate inverse_cert;  // |1/d(n)| <= M (1+|n|)^m off point
};
/// a * b = d with a, b outside <d>: a(m) = 1 while d(m) = 0, and b(n) = 1 while d(n) = 0.
struct NotPrime {
    Expr a;
    Expr b;
    Point m;
    Point n;
    bool identity_checked;  // a*b = d at every window point
};
struct NotProper {
    Invertible witness;
};
using PrimeClassification = std::variant<FixedMaximal, NotPrime, NotProper, Inconclusive>;

/// Whether <d> is a proper prime ideal, following the zero count of d.
PrimeClassification classify_principal_prime(const Expr& d, const ScanConfig& cfg = {});

/// Dirac(n2): zero at n1, one at n2. Throws EqualPoints.
Expr separator(const Point& n1, const Point& n2);

}  // namespace sprime
