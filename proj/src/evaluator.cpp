#include "sprime/evaluator.hpp"

#include "sprime/errors.hpp"
#include "sprime/pattern_mask.hpp"

#include <algorithm>
#include <unordered_map>

namespace sprime {

namespace {

enum class State : unsigned char { Exact, InexactNonzero, Unknown };

struct Slot {
    GaussianRational value;
    State state = State::Exact;
};

void set_small(GaussianRational& out, long v) {
    // The Rational members are private; rebuild through the public constructor only when the
    // value actually changes, to keep limbs alive in the common case.
    if (out.is_real() && out.re() == v) return;
    out = GaussianRational(v);
}

void check_overflow_sub(Coord a, Coord b, Coord& out) {
    if (__builtin_sub_overflow(a, b, &out)) throw InvalidArgument("lattice coordinate overflow in shift");
}

}  // namespace

struct Evaluator::Program {
    struct Instr {
        const ExprNode* node;
        std::vector<std::uint32_t> args;
        std::unique_ptr<Program> sub;  // shift body, evaluated at a translated point
        unsigned max_degree = 0;       // coord_poly
    };

    Expr root;
    std::vector<Instr> code;
    std::vector<Slot> slots;
    std::unordered_map<const ExprNode*, std::uint32_t> index;
    Rational scratch;
    Rational tmp_q;
    Integer tmp_z;
    Integer mono;
    std::vector<Coord> shifted;
    std::vector<std::vector<Integer>> powers;  // powers[axis][e] = n_axis^e

    explicit Program(Expr r) : root(std::move(r)) {
        compile(root);
        slots.resize(code.size());
        // Constants never change; fill once.
        for (std::size_t i = 0; i < code.size(); ++i) {
            if (const auto* c = std::get_if<node::Const>(&code[i].node->body)) slots[i].value = c->value;
        }
    }

    std::uint32_t compile(const Expr& e) {
        if (auto it = index.find(e.get()); it != index.end()) return it->second;
        Instr ins{e.get(), {}, nullptr, 0};
        if (const auto* s = e.as<node::Shift>()) {
            ins.sub = std::make_unique<Program>(s->arg);
        } else {
            for (const auto& c : e.children()) ins.args.push_back(compile(c));
        }
        if (const auto* p = e.as<node::CoordPoly>()) {
            for (const auto& t : p->terms) {
                for (unsigned x : t.exponents) ins.max_degree = std::max(ins.max_degree, x);
            }
        }
        const auto id = static_cast<std::uint32_t>(code.size());
        code.push_back(std::move(ins));
        index.emplace(e.get(), id);
        return id;
    }

    const Slot& result() const { return slots.back(); }

    void run(Coords n) {
        if (n.size() != root.dim()) throw DimensionMismatch(root.dim(), n.size());
        for (std::size_t i = 0; i < code.size(); ++i) step(i, n);
    }

    void step(std::size_t i, Coords n) {
        Instr& ins = code[i];
        Slot& out = slots[i];
        std::visit([&](const auto& body) { exec(body, ins, out, n); }, ins.node->body);
    }

    void exec(const node::Const&, Instr&, Slot& out, Coords) { out.state = State::Exact; }

    void exec(const node::CoordPoly& p, Instr& ins, Slot& out, Coords n) {
        out.state = State::Exact;
        const std::size_t d = n.size();
        powers.resize(d);
        for (std::size_t a = 0; a < d; ++a) {
            auto& row = powers[a];
            row.resize(ins.max_degree + 1);
            row[0] = 1;
            for (unsigned e = 1; e <= ins.max_degree; ++e) {
                mpz_mul_si(row[e].get_mpz_t(), row[e - 1].get_mpz_t(), n[a]);
            }
        }
        Rational re = 0;
        Rational im = 0;
        for (const auto& t : p.terms) {
            mono = 1;
            for (std::size_t a = 0; a < d; ++a) {
                if (t.exponents[a]) mpz_mul(mono.get_mpz_t(), mono.get_mpz_t(), powers[a][t.exponents[a]].get_mpz_t());
            }
            mpq_set_z(tmp_q.get_mpq_t(), mono.get_mpz_t());
            if (sgn(t.coeff.re()) != 0) {
                mpq_mul(scratch.get_mpq_t(), tmp_q.get_mpq_t(), t.coeff.re().get_mpq_t());
                mpq_add(re.get_mpq_t(), re.get_mpq_t(), scratch.get_mpq_t());
            }
            if (sgn(t.coeff.im()) != 0) {
                mpq_mul(scratch.get_mpq_t(), tmp_q.get_mpq_t(), t.coeff.im().get_mpq_t());
                mpq_add(im.get_mpq_t(), im.get_mpq_t(), scratch.get_mpq_t());
            }
        }
        out.value = GaussianRational(std::move(re), std::move(im));
    }

    void exec(const node::Dirac& x, Instr&, Slot& out, Coords n) {
        out.state = State::Exact;
        set_small(out.value, std::equal(n.begin(), n.end(), x.at.coords().begin()) ? 1 : 0);
    }

    void exec(const node::DiracComplement& x, Instr&, Slot& out, Coords n) {
        out.state = State::Exact;
        set_small(out.value, std::equal(n.begin(), n.end(), x.at.coords().begin()) ? 0 : 1);
    }

    void exec(const node::FiniteSupport& x, Instr&, Slot& out, Coords n) {
        out.state = State::Exact;
        auto it = std::lower_bound(x.entries.begin(), x.entries.end(), n,
                                   [](const auto& e, Coords p) { return canonical_less(e.first.coords(), p); });
        if (it != x.entries.end() && std::equal(n.begin(), n.end(), it->first.coords().begin())) {
            out.value = it->second;
        } else {
            set_small(out.value, 0);
        }
    }

    void exec(const node::PatternMask& x, Instr&, Slot& out, Coords n) {
        out.state = State::Exact;
        set_small(out.value, pattern_mask_vanishes(x.n, n) ? 0 : 1);
    }

    void exec(const node::InvNormPower& x, Instr&, Slot& out, Coords n) {
        out.state = State::Exact;
        mpz_set_si(tmp_z.get_mpz_t(), norm1(n) + 1);
        mpz_pow_ui(tmp_z.get_mpz_t(), tmp_z.get_mpz_t(), x.m);
        mpq_set_z(tmp_q.get_mpq_t(), tmp_z.get_mpz_t());
        mpq_inv(tmp_q.get_mpq_t(), tmp_q.get_mpq_t());
        out.value = GaussianRational(tmp_q);
    }

    void exec(const node::Sum&, Instr& ins, Slot& out, Coords) {
        const Slot& a = slots[ins.args[0]];
        const Slot& b = slots[ins.args[1]];
        if (a.state == State::Exact && b.state == State::Exact) {
            out.state = State::Exact;
            GaussianRational::assign_add(out.value, a.value, b.value);
        } else {
            out.state = State::Unknown;
        }
    }

    void exec(const node::Product&, Instr& ins, Slot& out, Coords) {
        const Slot& a = slots[ins.args[0]];
        const Slot& b = slots[ins.args[1]];
        const bool a_zero = a.state == State::Exact && a.value.is_zero();
        const bool b_zero = b.state == State::Exact && b.value.is_zero();
        if (a_zero || b_zero) {
            out.state = State::Exact;
            set_small(out.value, 0);
        } else if (a.state == State::Exact && b.state == State::Exact) {
            out.state = State::Exact;
            GaussianRational::assign_mul(out.value, a.value, b.value, scratch);
        } else if (a.state == State::Unknown || b.state == State::Unknown) {
            out.state = State::Unknown;
        } else {
            out.state = State::InexactNonzero;
        }
    }

    void exec(const node::Conj&, Instr& ins, Slot& out, Coords) {
        const Slot& a = slots[ins.args[0]];
        out.state = a.state;
        if (a.state == State::Exact) out.value = a.value.conj();
    }

    void exec(const node::ScalarMul& x, Instr& ins, Slot& out, Coords) {
        const Slot& a = slots[ins.args[0]];
        if (x.factor.is_zero() || (a.state == State::Exact && a.value.is_zero())) {
            out.state = State::Exact;
            set_small(out.value, 0);
            return;
        }
        out.state = a.state;
        if (a.state == State::Exact) GaussianRational::assign_mul(out.value, x.factor, a.value, scratch);
    }

    void exec(const node::Shift& x, Instr& ins, Slot& out, Coords n) {
        shifted.resize(n.size());
        for (std::size_t a = 0; a < n.size(); ++a) check_overflow_sub(n[a], x.by[a], shifted[a]);
        ins.sub->run(shifted);
        const Slot& r = ins.sub->result();
        out.state = r.state;
        if (r.state == State::Exact) out.value = r.value;
    }

    void exec(const node::Quotient&, Instr& ins, Slot& out, Coords) {
        const Slot& num = slots[ins.args[0]];
        const Slot& den = slots[ins.args[1]];
        const bool num_zero = num.state == State::Exact && num.value.is_zero();
        const bool den_zero = den.state == State::Exact && den.value.is_zero();
        if (num_zero || den_zero) {
            out.state = State::Exact;
            set_small(out.value, 0);
        } else if (num.state == State::Exact && den.state == State::Exact) {
            out.state = State::Exact;
            GaussianRational::assign_div(out.value, num.value, den.value, scratch);
        } else if (num.state == State::Unknown || den.state == State::Unknown) {
            out.state = State::Unknown;
        } else {
            out.state = State::InexactNonzero;
        }
    }

    void exec(const node::MagnitudeMaxSq&, Instr& ins, Slot& out, Coords) {
        bool any_unknown = false;
        bool any_inexact = false;
        for (auto a : ins.args) {
            any_unknown |= slots[a].state == State::Unknown;
            any_inexact |= slots[a].state == State::InexactNonzero;
        }
        if (any_unknown) {
            out.state = State::Unknown;
            return;
        }
        if (any_inexact) {
            out.state = State::InexactNonzero;
            return;
        }
        out.state = State::Exact;
        Rational best = 0;
        for (auto a : ins.args) {
            const auto& v = slots[a].value;
            mpq_mul(tmp_q.get_mpq_t(), v.re().get_mpq_t(), v.re().get_mpq_t());
            if (!v.is_real()) {
                mpq_mul(scratch.get_mpq_t(), v.im().get_mpq_t(), v.im().get_mpq_t());
                mpq_add(tmp_q.get_mpq_t(), tmp_q.get_mpq_t(), scratch.get_mpq_t());
            }
            if (tmp_q > best) best = tmp_q;
        }
        out.value = GaussianRational(std::move(best));
    }

    void exec(const node::HalfRoot&, Instr& ins, Slot& out, Coords) {
        const Slot& a = slots[ins.args[0]];
        if (a.state == State::Exact && a.value.is_zero()) {
            out.state = State::Exact;
            set_small(out.value, 0);
        } else {
            out.state = a.state == State::Unknown ? State::Unknown : State::InexactNonzero;
        }
    }
};

Evaluator::Evaluator(Expr root) : program_(std::make_unique<Program>(std::move(root))) {}
Evaluator::Evaluator(const Evaluator& other) : program_(std::make_unique<Program>(other.program_->root)) {}
Evaluator& Evaluator::operator=(const Evaluator& other) {
    if (this != &other) program_ = std::make_unique<Program>(other.program_->root);
    return *this;
}
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;
Evaluator::~Evaluator() = default;

const Expr& Evaluator::expr() const noexcept { return program_->root; }

const GaussianRational& Evaluator::eval(Coords n) {
    program_->run(n);
    const Slot& r = program_->result();
    if (r.state != State::Exact) throw HalfRootNotExact();
    return r.value;
}

bool Evaluator::is_zero(Coords n) {
    program_->run(n);
    const Slot& r = program_->result();
    switch (r.state) {
        case State::Exact:
            return r.value.is_zero();
        case State::InexactNonzero:
            return false;
        case State::Unknown:
            break;
    }
    throw HalfRootNotExact();
}

const GaussianRational* Evaluator::last_value_of(const Expr& sub) const {
    auto it = program_->index.find(sub.get());
    if (it == program_->index.end()) return nullptr;
    const Slot& s = program_->slots[it->second];
    return s.state == State::Exact ? &s.value : nullptr;
}

GaussianRational eval(const Expr& f, Coords n) {
    Evaluator ev(f);
    return ev.eval(n);
}

bool is_zero_at(const Expr& f, Coords n) {
    Evaluator ev(f);
    return ev.is_zero(n);
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

/// Raise `a` so that its power becomes `target` (a power-of-two multiple).
Rational raise_to(const AbsPower& a, unsigned target) { return pow(a.value, target / a.power); }

AbsPower combine_product(const AbsPower& a, const AbsPower& b) {
    const unsigned p = std::max(a.power, b.power);
    return {raise_to(a, p) * raise_to(b, p), p};
}

std::vector<Coord> translate(Coords n, const Point& by) {
    std::vector<Coord> out(n.size());
    for (std::size_t a = 0; a < n.size(); ++a) check_overflow_sub(n[a], by[a], out[a]);
    return out;
}

}  // namespace

AbsPower abs_power(const Expr& f, Coords n) {
    if (!contains_half_root(f)) return {eval(f, n).squared_magnitude(), 2};
    return std::visit(
        Overloaded{
            [&](const node::HalfRoot& x) -> AbsPower {
                AbsPower a = abs_power(x.arg, n);
                return {a.value, a.power * 2};
            },
            [&](const node::Product& x) -> AbsPower {
                return combine_product(abs_power(x.lhs, n), abs_power(x.rhs, n));
            },
            [&](const node::Conj& x) -> AbsPower { return abs_power(x.arg, n); },
            [&](const node::Shift& x) -> AbsPower { return abs_power(x.arg, translate(n, x.by)); },
            [&](const node::ScalarMul& x) -> AbsPower {
                // |c|^p = (|c|^2)^(p/2); keep p even by squaring a power-1 operand first.
                AbsPower a = abs_power(x.arg, n);
                if (a.power == 1) a = {a.value * a.value, 2};
                return {a.value * pow(x.factor.squared_magnitude(), a.power / 2), a.power};
            },
            [&](const node::Quotient& x) -> AbsPower {
                if (is_zero_at(x.den, n)) return {Rational(0), 2};
                const AbsPower num = abs_power(x.num, n);
                const AbsPower den = abs_power(x.den, n);
                const unsigned p = std::max(num.power, den.power);
                return {raise_to(num, p) / raise_to(den, p), p};
            },
            [&](const node::MagnitudeMaxSq& x) -> AbsPower {
                // value = max_k |e_k|^2, so value^(P/2) = max_k |e_k|^P.
                std::vector<AbsPower> parts;
                unsigned p = 2;
                for (const auto& a : x.args) {
                    parts.push_back(abs_power(a, n));
                    p = std::max(p, parts.back().power);
                }
                Rational best = 0;
                for (const auto& part : parts) best = std::max(best, raise_to(part, p));
                return {best, p / 2};
            },
            [&](const auto&) -> AbsPower { throw HalfRootNotExact(); },
        },
        f.body());
}

MagnitudeProbe::MagnitudeProbe(Expr f) : expr_(f), evaluator_(f) {
    Expr body = f;
    while (const auto* h = body.as<node::HalfRoot>()) {
        body = h->arg;
        base_power_ *= 2;
    }
    if (!contains_half_root(body)) base_.emplace(body);
}

AbsPower MagnitudeProbe::at(Coords n) {
    if (base_) return {base_->eval(n).squared_magnitude(), base_power_};
    return abs_power(expr_, n);
}

bool MagnitudeProbe::is_zero(Coords n) { return evaluator_.is_zero(n); }

namespace {

class ApproxEval {
public:
    explicit ApproxEval(mpfr_prec_t bits) : bits_(bits) {}

    BigComplex exact(const GaussianRational& z) const { return {BigFloat(z.re(), bits_), BigFloat(z.im(), bits_)}; }

    BigComplex run(const Expr& f, Coords n) {
        if (!contains_half_root(f)) return exact(sprime::eval(f, n));
        return std::visit(
            Overloaded{
                [&](const node::HalfRoot& x) { return principal_sqrt(run(x.arg, n)); },
                [&](const node::Sum& x) { return add(run(x.lhs, n), run(x.rhs, n)); },
                [&](const node::Product& x) { return mul(run(x.lhs, n), run(x.rhs, n)); },
                [&](const node::Conj& x) {
                    BigComplex v = run(x.arg, n);
                    mpfr_neg(v.im.get(), v.im.get(), MPFR_RNDN);
                    return v;
                },
                [&](const node::ScalarMul& x) { return mul(exact(x.factor), run(x.arg, n)); },
                [&](const node::Shift& x) { return run(x.arg, translate(n, x.by)); },
                [&](const node::Quotient& x) {
                    if (is_zero_at(x.den, n)) return exact(GaussianRational(0));
                    return div(run(x.num, n), run(x.den, n));
                },
                [&](const node::MagnitudeMaxSq& x) {
                    BigFloat best(bits_);
                    BigFloat m(bits_);
                    for (const auto& a : x.args) {
                        BigComplex v = run(a, n);
                        abs_sq(m, v);
                        if (mpfr_cmp(m.get(), best.get()) > 0) mpfr_set(best.get(), m.get(), MPFR_RNDN);
                    }
                    return BigComplex{best, BigFloat(bits_)};
                },
                [&](const auto&) { return exact(sprime::eval(f, n)); },
            },
            f.body());
    }

private:
    mpfr_prec_t bits_;

    void abs_sq(BigFloat& out, const BigComplex& v) const {
        BigFloat t(bits_);
        mpfr_sqr(out.get(), v.re.get(), MPFR_RNDN);
        mpfr_sqr(t.get(), v.im.get(), MPFR_RNDN);
        mpfr_add(out.get(), out.get(), t.get(), MPFR_RNDN);
    }

    BigComplex add(const BigComplex& a, const BigComplex& b) const {
        BigComplex r{BigFloat(bits_), BigFloat(bits_)};
        mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
        return r;
    }

    BigComplex mul(const BigComplex& a, const BigComplex& b) const {
        BigComplex r{BigFloat(bits_), BigFloat(bits_)};
        BigFloat t(bits_);
        mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
        mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
        mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
        mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
        mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
        return r;
    }

    BigComplex div(const BigComplex& a, const BigComplex& b) const {
        BigFloat den(bits_);
        abs_sq(den, b);
        BigComplex bc{b.re, b.im};
        mpfr_neg(bc.im.get(), bc.im.get(), MPFR_RNDN);
        BigComplex r = mul(a, bc);
        mpfr_div(r.re.get(), r.re.get(), den.get(), MPFR_RNDN);
        mpfr_div(r.im.get(), r.im.get(), den.get(), MPFR_RNDN);
        return r;
    }

    // sqrt(z) with argument in (-pi/2, pi/2]: magnitude sqrt|z|, half of theta in (-pi, pi].
    BigComplex principal_sqrt(const BigComplex& z) const {
        BigComplex r{BigFloat(bits_), BigFloat(bits_)};
        if (mpfr_zero_p(z.re.get()) && mpfr_zero_p(z.im.get())) return r;
        BigFloat mag(bits_);
        BigFloat t(bits_);
        mpfr_hypot(mag.get(), z.re.get(), z.im.get(), MPFR_RNDN);
        mpfr_abs(t.get(), z.re.get(), MPFR_RNDN);
        mpfr_add(t.get(), t.get(), mag.get(), MPFR_RNDN);
        mpfr_div_ui(t.get(), t.get(), 2, MPFR_RNDN);
        mpfr_sqrt(t.get(), t.get(), MPFR_RNDN);  // t = sqrt((|z| + |re|) / 2) > 0
        BigFloat other(bits_);
        mpfr_abs(other.get(), z.im.get(), MPFR_RNDN);
        mpfr_div(other.get(), other.get(), t.get(), MPFR_RNDN);
        mpfr_div_ui(other.get(), other.get(), 2, MPFR_RNDN);  // |im| / (2t)
        if (mpfr_sgn(z.re.get()) >= 0) {
            mpfr_set(r.re.get(), t.get(), MPFR_RNDN);
            mpfr_set(r.im.get(), other.get(), MPFR_RNDN);
            if (mpfr_sgn(z.im.get()) < 0) mpfr_neg(r.im.get(), r.im.get(), MPFR_RNDN);
        } else {
            // Negative real axis (theta = pi) maps to +i; below it theta < 0.
            mpfr_set(r.re.get(), other.get(), MPFR_RNDN);
            mpfr_set(r.im.get(), t.get(), MPFR_RNDN);
            if (mpfr_sgn(z.im.get()) < 0) mpfr_neg(r.im.get(), r.im.get(), MPFR_RNDN);
        }
        return r;
    }
};

}  // namespace

ApproxValue eval_approx(const Expr& f, Coords n, unsigned precision_bits) {
    if (precision_bits == 0) throw InvalidArgument("precision_bits must be positive");
    if (n.size() != f.dim()) throw DimensionMismatch(f.dim(), n.size());
    ApproxEval ev(static_cast<mpfr_prec_t>(precision_bits) + 64);
    return {ev.run(f, n), precision_bits};
}

}  // namespace sprime
