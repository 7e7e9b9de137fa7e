#pragma once

#include "sprime/growth.hpp"
#include "sprime/zero_set.hpp"

#include <string>
#include <variant>
#include <vector>

namespace sprime {

/// Budget shared by the window-backed decision procedures.
struct ScanConfig {
    Window window{1, 100};
    unsigned m_cap = kDefaultMCap;
};

/// No decision: what was tried and the normalized tail maxima that stopped it.
struct Inconclusive {
    std::string reason;
    std::vector<TrendSample> trend;
};

struct Divides {
    Expr cofactor;
    GrowthCertificate cert;  // for the cofactor; cert.scope says how far it holds
};
/// g(point) = 0 while f(point) != 0.
struct RefutedAtZero {
    Point point;
};
/// No certificate with m <= m_cap fits the cofactor on the window.
struct RefutedEmpirically {
    unsigned m_cap;
    std::vector<TrendSample> trend;
};
using DivisibilityVerdict = std::variant<Divides, RefutedAtZero, RefutedEmpirically>;

struct Invertible {
    LowerCertificate cert;
    Expr inverse;
};
struct NotInvertible {
    Point point;
};
using InvertibilityVerdict = std::variant<Invertible, NotInvertible, Inconclusive>;

/// Cofactors with sum_k f_k g_k = f. The certificate bounds |f| / sqrt(sum_k |f_k|^2),
/// which bounds every |g_k| and implies |f| <= M (1+|n|)^m sum_k |f_k|.
struct BezoutWitness {
    std::vector<Expr> cofactors;
    GrowthCertificate cert;
};
struct Member {
    BezoutWitness witness;
};
/// Every generator vanishes at point, f does not.
struct NotMember {
    Point point;
};
using MembershipVerdict = std::variant<Member, NotMember, Inconclusive>;

struct PrincipalReport {
    Expr generator;
    std::vector<DivisibilityVerdict> forward;  // generator divides gens[k]
    MembershipVerdict reverse;                 // generator lies in <gens>
};

/// f / g with zero fill where g vanishes.
Expr cofactor(const Expr& f, const Expr& g);

/// Does g divide f?
DivisibilityVerdict divides(const Expr& g, const Expr& f, const ScanConfig& cfg = {});

InvertibilityVerdict is_invertible(const Expr& f, const ScanConfig& cfg = {});

/// magnitude_max_sq(fs). Throws EmptyList.
Expr gcd(const std::vector<Expr>& fs);

/// sum_j conj(f_j) f_j
Expr squared_norm_sum(const std::vector<Expr>& gens);

MembershipVerdict ideal_member(const Expr& f, const std::vector<Expr>& gens, const ScanConfig& cfg = {});

PrincipalReport principal_generator(const std::vector<Expr>& gens, const ScanConfig& cfg = {});

}  // namespace sprime
