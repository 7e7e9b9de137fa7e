#pragma once

#include "sprime/expr.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sprime {

/// m(f, n): Finite(value), or AtLeast(cap) when every coordinate run reached the cap.
struct ZeroOrder {
    std::uint64_t value = 0;
    bool at_least = false;

    static ZeroOrder finite(std::uint64_t v) { return {v, false}; }
    static ZeroOrder capped(std::uint64_t cap) { return {cap, true}; }
    friend bool operator==(const ZeroOrder&, const ZeroOrder&) = default;
};

inline constexpr std::uint64_t kDefaultZeroOrderCap = 4096;
inline constexpr unsigned kDefaultHorizon = 12;

/// Min over coordinates k of the number of consecutive zeros of f at n, n+e_k, n+2e_k, ...
ZeroOrder zero_order(const Expr& f, const Point& n, std::uint64_t cap = kDefaultZeroOrderCap);

/// m(f+g, n) >= min(m(f, n), m(g, n)), with AtLeast(c) read as c.
bool check_P1(const Expr& f, const Expr& g, const Point& n, std::uint64_t cap = kDefaultZeroOrderCap);
/// m(fg, n) >= max(m(f, n), m(g, n)).
bool check_P2(const Expr& f, const Expr& g, const Point& n, std::uint64_t cap = kDefaultZeroOrderCap);

/// Eventual zero-order behavior of f at the dyadic points 2^k e_1, read from structure.
struct DyadicOrder {
    enum class Kind {
        Infinite,      // f vanishes on every line 2^k e_1 + j e_i, j >= 0, for large k
        Mask,          // zeros there are exactly those of pattern_mask(p)
        Nonvanishing,  // no zeros there for large k
        Unknown
    };
    Kind kind = Kind::Unknown;
    unsigned p = 0;  // Mask only
};

DyadicOrder dyadic_order(const Expr& f);

enum class KrullSet { IStar, I, M };

struct OrderSample {
    unsigned k;
    ZeroOrder order;
    Rational ratio;  // order / k^n (IStar: 0 or 1 for "f(2^k e_1) = 0")
};

struct KrullVerdict {
    enum class Kind { CertifiedIn, CertifiedOut, EmpiricalIn, EmpiricalOut };
    KrullSet set;
    unsigned n = 0;  // unused for IStar
    Kind kind;
    std::string reason;
    std::vector<OrderSample> trend;  // empirical verdicts only

    bool certified() const noexcept { return kind == Kind::CertifiedIn || kind == Kind::CertifiedOut; }
    bool in() const noexcept { return kind == Kind::CertifiedIn || kind == Kind::EmpiricalIn; }
};

std::string_view kind_name(KrullVerdict::Kind k) noexcept;
std::string_view set_name(KrullSet s) noexcept;

KrullVerdict membership_i_star(const Expr& f, unsigned horizon = kDefaultHorizon);
KrullVerdict membership_i_n(const Expr& f, unsigned n, unsigned horizon = kDefaultHorizon);
KrullVerdict membership_M_n(const Expr& f, unsigned n, unsigned horizon = kDefaultHorizon);

/// One row of the m(f_n, 2^k e_1) table.
struct RatioRow {
    unsigned k;
    std::uint64_t cap;
    ZeroOrder order;
    Rational over_k_n;    // m / k^n
    Rational over_k_n1;   // m / k^(n+1)
    std::uint64_t stated;  // k^(n+1), the value asserted for large k
    bool gap;              // 2^k > k^(n+1) + 1
    bool in_interval;      // order in {k^(n+1), k^(n+1) + 1}
};

struct ChainLevel {
    unsigned n;
    KrullVerdict in_i_n, in_i_next, in_M_next, in_M_n;
    bool i_strict;  // f_n in i_n \ i_(n+1)
    bool M_strict;  // f_n in M_(n+1) \ M_n
    std::vector<RatioRow> rows;
};

struct PoolMember {
    std::string label;
    Expr f;
};

struct DisjointnessCheck {
    unsigned n;
    std::size_t pool_size;
    std::size_t certified_in_i;
    std::size_t certified_in_M;
    std::vector<std::string> violations;  // labels certified in both i_n and M_n
    std::vector<std::string> nesting_violations;  // in i_(n+1) but not i_n, or in M_n but not M_(n+1)
};

struct ChainReport {
    unsigned N;
    unsigned K;
    std::size_t dim;
    std::uint64_t cap;
    std::vector<ChainLevel> levels;  // n = 1..N+1
    std::vector<DisjointnessCheck> disjointness;
};

/// Default pool: constants, point masses, finite supports, masks 1..N+1 and mask products.
std::vector<PoolMember> default_pool(std::size_t dim, unsigned N);

/// Throws BudgetExceeded when the axis probes would exceed the built-in limit.
ChainReport chain_report(unsigned N, unsigned K, std::size_t dim = 1, std::uint64_t cap = kDefaultZeroOrderCap);

}  // namespace sprime
