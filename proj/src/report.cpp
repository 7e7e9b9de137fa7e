#include "sprime/report.hpp"

namespace sprime {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string str(const Rational& q) { return to_canonical_string(q); }

Json rational_pair(const Rational& q) { return {{"exact", str(q)}, {"decimal", to_scientific(q, 6)}}; }

Json inconclusive(const Inconclusive& v) {
    return {{"verdict", "inconclusive"}, {"reason", v.reason}, {"trend", to_json(v.trend)}, {"scope", "window"}};
}

}  // namespace

Json to_json(const Window& w) { return {{"dim", w.dim}, {"radius", w.radius}}; }

Json to_json(const GrowthCertificate& c) {
    return {{"M", str(c.M)}, {"m", c.m}, {"scope", scope_name(c.scope)}};
}

Json to_json(const LowerCertificate& c) {
    return {{"delta", str(c.delta)}, {"m", c.m}, {"scope", scope_name(c.scope)}};
}

Json to_json(const AuditReport& r) {
    Json j{{"verdict", r.validated ? "validated" : "falsified"},
           {"samples", r.samples},
           {"window", r.window.radius},
           {"scope", scope_name(r.scope)},
           {"power", r.power}};
    if (r.point) {
        j["point"] = to_json(*r.point);
        j["lhs"] = str(r.lhs);
        j["rhs"] = str(r.rhs);
    }
    return j;
}

Json to_json(const std::vector<TrendSample>& trend) {
    Json out = Json::array();
    for (const auto& s : trend) out.push_back({{"point", to_json(s.point)}, {"ratio", rational_pair(s.ratio)}});
    return out;
}

Json to_json(const ZeroSetInfo& z) {
    Json j{{"kind", z.kind_name()}};
    if (z.is_exact()) {
        Json pts = Json::array();
        for (const auto& p : z.points) pts.push_back(to_json(p));
        j[z.kind == ZeroSetInfo::Kind::ExactFinite ? "zeros" : "nonzeros"] = std::move(pts);
    }
    return j;
}

Json to_json(const DivisibilityVerdict& v) {
    return std::visit(
        Overloaded{
            [](const Divides& d) {
                return Json{{"verdict", "divides"},
                            {"cofactor", to_json(d.cofactor)},
                            {"certificate", to_json(d.cert)},
                            {"scope", scope_name(d.cert.scope)}};
            },
            [](const RefutedAtZero& r) {
                return Json{{"verdict", "refuted_at_zero"}, {"point", to_json(r.point)}, {"scope", "global"}};
            },
            [](const RefutedEmpirically& r) {
                return Json{{"verdict", "refuted_empirically"},
                            {"m_cap", r.m_cap},
                            {"trend", to_json(r.trend)},
                            {"scope", "window"}};
            },
        },
        v);
}

Json to_json(const InvertibilityVerdict& v) {
    return std::visit(
        Overloaded{
            [](const Invertible& i) {
                return Json{{"verdict", "invertible"},
                            {"lower_bound", to_json(i.cert)},
                            {"inverse", to_json(i.inverse)},
                            {"scope", scope_name(i.cert.scope)}};
            },
            [](const NotInvertible& n) {
                return Json{{"verdict", "not_invertible"}, {"point", to_json(n.point)}, {"scope", "global"}};
            },
            [](const Inconclusive& i) { return inconclusive(i); },
        },
        v);
}

Json to_json(const MembershipVerdict& v) {
    return std::visit(
        Overloaded{
            [](const Member& m) {
                Json cof = Json::array();
                for (const auto& g : m.witness.cofactors) cof.push_back(to_json(g));
                return Json{{"verdict", "member"},
                            {"cofactors", std::move(cof)},
                            {"certificate", to_json(m.witness.cert)},
                            {"scope", scope_name(m.witness.cert.scope)}};
            },
            [](const NotMember& n) {
                return Json{{"verdict", "not_member"}, {"point", to_json(n.point)}, {"scope", "global"}};
            },
            [](const Inconclusive& i) { return inconclusive(i); },
        },
        v);
}

Json to_json(const PrincipalReport& r) {
    Json fwd = Json::array();
    bool global = true;
    for (const auto& v : r.forward) {
        fwd.push_back(to_json(v));
        global = global && fwd.back()["scope"] == "global";
    }
    Json rev = to_json(r.reverse);
    global = global && rev["scope"] == "global";
    return {{"generator", to_json(r.generator)},
            {"forward", std::move(fwd)},
            {"reverse", std::move(rev)},
            {"scope", global ? "global" : "window"}};
}

Json to_json(const MaximalityWitness& w) {
    return {{"g", to_json(w.g)}, {"unit_check", w.unit_check}, {"scope", "window"}};
}

Json to_json(const NonfixedVerdict& v) {
    Json samples = Json::array();
    for (const auto& s : v.samples) {
        samples.push_back({{"j", s.j},
                           {"k", s.k},
                           {"magnitude_power", str(s.magnitude)},
                           {"lower", to_scientific(s.lower, 6)},
                           {"upper", to_scientific(s.upper, 6)}});
    }
    const bool certified =
        v.kind == NonfixedVerdict::Kind::CertifiedYes || v.kind == NonfixedVerdict::Kind::CertifiedNo;
    Json j{{"verdict", kind_name(v.kind)},
           {"reason", v.reason},
           {"power", v.power},
           {"samples", std::move(samples)},
           {"scope", certified ? "global" : "window"}};
    if (v.j) j["j"] = *v.j;
    return j;
}

Json to_json(const PrimeClassification& c) {
    return std::visit(
        Overloaded{
            [](const FixedMaximal& f) {
                return Json{{"verdict", "fixed_maximal"},
                            {"point", to_json(f.point)},
                            {"inverse", to_json(f.inverse)},
                            {"inverse_certificate", to_json(f.inverse_cert)},
                            {"scope", scope_name(f.inverse_cert.scope)}};
            },
            [](const NotPrime& n) {
                return Json{{"verdict", "not_prime"},
                            {"a", to_json(n.a)},
                            {"b", to_json(n.b)},
                            {"obstruction_a", to_json(n.m)},
                            {"obstruction_b", to_json(n.n)},
                            {"identity_checked", n.identity_checked},
                            {"scope", "global"}};
            },
            [](const NotProper& n) {
                return Json{{"verdict", "not_proper"},
                            {"lower_bound", to_json(n.witness.cert)},
                            {"inverse", to_json(n.witness.inverse)},
                            {"scope", scope_name(n.witness.cert.scope)}};
            },
            [](const Inconclusive& i) { return inconclusive(i); },
        },
        c);
}

Json to_json(const ZeroOrder& z) {
    return {{"value", z.value}, {"at_least", z.at_least}, {"scope", z.at_least ? "window" : "global"}};
}

Json to_json(const KrullVerdict& v) {
    Json trend = Json::array();
    for (const auto& s : v.trend) {
        trend.push_back({{"k", s.k}, {"order", to_json(s.order)}, {"ratio", rational_pair(s.ratio)}});
    }
    Json j{{"set", set_name(v.set)},
           {"verdict", kind_name(v.kind)},
           {"reason", v.reason},
           {"scope", v.certified() ? "global" : "window"}};
    if (v.set != KrullSet::IStar) j["n"] = v.n;
    if (!v.trend.empty()) j["trend"] = std::move(trend);
    return j;
}

Json to_json(const ChainReport& r) {
    Json levels = Json::array();
    for (const auto& l : r.levels) {
        Json rows = Json::array();
        for (const auto& row : l.rows) {
            rows.push_back({{"k", row.k},
                            {"cap", row.cap},
                            {"zero_order", row.order.value},
                            {"at_least", row.order.at_least},
                            {"over_k_n", rational_pair(row.over_k_n)},
                            {"over_k_n1", rational_pair(row.over_k_n1)},
                            {"stated_value", row.stated},
                            {"gap", row.gap},
                            {"in_interval", row.in_interval}});
        }
        levels.push_back({{"n", l.n},
                          {"mask", to_json(pattern_mask(r.dim, l.n))},
                          {"in_i_n", to_json(l.in_i_n)},
                          {"in_i_n_plus_1", to_json(l.in_i_next)},
                          {"in_M_n_plus_1", to_json(l.in_M_next)},
                          {"in_M_n", to_json(l.in_M_n)},
                          {"strict_i", l.i_strict},
                          {"strict_M", l.M_strict},
                          {"ratios", std::move(rows)}});
    }
    Json disj = Json::array();
    for (const auto& d : r.disjointness) {
        disj.push_back({{"n", d.n},
                        {"pool_size", d.pool_size},
                        {"certified_in_i_n", d.certified_in_i},
                        {"certified_in_M_n", d.certified_in_M},
                        {"violations", d.violations},
                        {"nesting_violations", d.nesting_violations}});
    }
    return {{"N", r.N},
            {"K", r.K},
            {"dim", r.dim},
            {"cap", r.cap},
            {"levels", std::move(levels)},
            {"disjointness", std::move(disj)},
            {"scope", is_decided(r) ? "global" : "window"}};
}

bool is_decided(const DivisibilityVerdict& v) {
    if (const auto* d = std::get_if<Divides>(&v)) return d->cert.scope == Scope::Global;
    return std::holds_alternative<RefutedAtZero>(v);
}

bool is_decided(const InvertibilityVerdict& v) {
    if (const auto* i = std::get_if<Invertible>(&v)) return i->cert.scope == Scope::Global;
    return std::holds_alternative<NotInvertible>(v);
}

bool is_decided(const MembershipVerdict& v) {
    if (const auto* m = std::get_if<Member>(&v)) return m->witness.cert.scope == Scope::Global;
    return std::holds_alternative<NotMember>(v);
}

bool is_decided(const PrimeClassification& c) {
    return std::visit(Overloaded{
                          [](const FixedMaximal& f) { return f.inverse_cert.scope == Scope::Global; },
                          [](const NotPrime& n) { return n.identity_checked; },
                          [](const NotProper& n) { return n.witness.cert.scope == Scope::Global; },
                          [](const Inconclusive&) { return false; },
                      },
                      c);
}

bool is_decided(const NonfixedVerdict& v) {
    return v.kind == NonfixedVerdict::Kind::CertifiedYes || v.kind == NonfixedVerdict::Kind::CertifiedNo;
}

bool is_decided(const ChainReport& r) {
    for (const auto& l : r.levels) {
        if (!l.in_i_n.certified() || !l.in_i_next.certified() || !l.in_M_next.certified() || !l.in_M_n.certified()) {
            return false;
        }
        if (!l.i_strict || !l.M_strict) return false;
    }
    for (const auto& d : r.disjointness) {
        if (!d.violations.empty() || !d.nesting_violations.empty()) return false;
    }
    return true;
}

}  // namespace sprime
