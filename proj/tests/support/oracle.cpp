#include "oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>

namespace oracle {

using namespace sprime;

namespace {

Coord l1(const Point& n) {
    Coord s = 0;
    for (std::size_t i = 0; i < n.dim(); ++i) s += std::llabs(n[i]);
    return s;
}

}  // namespace

std::optional<GaussianRational> eval(const Expr& f, const Point& n) {
    if (const auto* x = f.as<node::Const>()) return x->value;
    if (const auto* x = f.as<node::CoordPoly>()) {
        GaussianRational acc(0);
        for (const auto& t : x->terms) {
            GaussianRational m = t.coeff;
            for (std::size_t i = 0; i < t.exponents.size(); ++i) {
                for (unsigned e = 0; e < t.exponents[i]; ++e) m = m * GaussianRational(Rational(n[i]));
            }
            acc = acc + m;
        }
        return acc;
    }
    if (const auto* x = f.as<node::Dirac>()) return GaussianRational(x->at == n ? 1 : 0);
    if (const auto* x = f.as<node::DiracComplement>()) return GaussianRational(x->at == n ? 0 : 1);
    if (const auto* x = f.as<node::FiniteSupport>()) {
        for (const auto& [p, v] : x->entries) {
            if (p == n) return v;
        }
        return GaussianRational(0);
    }
    if (const auto* x = f.as<node::PatternMask>()) return GaussianRational(mask_vanishes(x->n, n) ? 0 : 1);
    if (const auto* x = f.as<node::InvNormPower>()) {
        mpz_class d = 1 + l1(n);
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), d.get_mpz_t(), x->m);
        return GaussianRational(Rational(mpz_class(1), p));
    }
    if (const auto* x = f.as<node::Sum>()) {
        auto a = eval(x->lhs, n), b = eval(x->rhs, n);
        if (!a || !b) return std::nullopt;
        return *a + *b;
    }
    if (const auto* x = f.as<node::Product>()) {
        auto a = eval(x->lhs, n), b = eval(x->rhs, n);
        if (!a || !b) return std::nullopt;
        return *a * *b;
    }
    if (const auto* x = f.as<node::Conj>()) {
        auto a = eval(x->arg, n);
        if (!a) return std::nullopt;
        return a->conj();
    }
    if (const auto* x = f.as<node::ScalarMul>()) {
        auto a = eval(x->arg, n);
        if (!a) return std::nullopt;
        return x->factor * *a;
    }
    if (const auto* x = f.as<node::Shift>()) {
        std::vector<Coord> m(n.dim());
        for (std::size_t i = 0; i < n.dim(); ++i) m[i] = n[i] - x->by[i];
        return eval(x->arg, Point(m));
    }
    if (const auto* x = f.as<node::Quotient>()) {
        auto a = eval(x->num, n), b = eval(x->den, n);
        if (!b) return std::nullopt;
        if (b->is_zero()) return GaussianRational(0);
        if (!a) return std::nullopt;
        return *a / *b;
    }
    if (const auto* x = f.as<node::MagnitudeMaxSq>()) {
        Rational best = 0;
        for (const auto& e : x->args) {
            auto a = eval(e, n);
            if (!a) return std::nullopt;
            best = std::max(best, Rational(a->re() * a->re() + a->im() * a->im()));
        }
        return GaussianRational(best);
    }
    return std::nullopt;  // half_root
}

bool mask_vanishes(unsigned n, const Point& m) {
    if (m.dim() == 0) return false;
    for (unsigned k = 0; k < 63; ++k) {
        const mpz_class base = mpz_class(1) << k;
        if (base > mpz_class(std::to_string(m[0]))) break;
        mpz_class limit;
        mpz_ui_pow_ui(limit.get_mpz_t(), k, n + 1);
        for (std::size_t i = 0; i < m.dim(); ++i) {
            // m - 2^k e_1 must equal j e_i
            mpz_class j = 0;
            bool ok = true;
            for (std::size_t t = 0; t < m.dim(); ++t) {
                mpz_class c = mpz_class(std::to_string(m[t]));
                if (t == 0) c -= base;
                if (t == i) {
                    j = c;
                } else if (c != 0) {
                    ok = false;
                }
            }
            if (ok && j >= 0 && j <= limit) return true;
        }
    }
    return false;
}

std::vector<Point> ball(std::size_t dim, Coord radius) {
    std::vector<Point> out;
    std::vector<Coord> c(dim, -radius);
    while (true) {
        Coord s = 0;
        for (Coord v : c) s += std::llabs(v);
        if (s <= radius) out.emplace_back(c);
        std::size_t i = 0;
        while (i < dim && c[i] == radius) c[i++] = -radius;
        if (i == dim) break;
        ++c[i];
    }
    return out;
}

Order zero_order(const Expr& f, const Point& n, std::uint64_t cap) {
    std::uint64_t best = cap;
    for (std::size_t axis = 0; axis < n.dim(); ++axis) {
        std::uint64_t j = 0;
        for (; j < cap; ++j) {
            Point p = n;
            p[axis] += static_cast<Coord>(j);
            if (!eval(f, p)->is_zero()) break;
        }
        best = std::min(best, j);
    }
    return {best, best == cap};
}

}  // namespace oracle
