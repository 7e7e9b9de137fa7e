#include "sprime/serialize.hpp"

#include "sprime/errors.hpp"

namespace sprime {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json pair(const Expr& l, const Expr& r) { return {{"left", to_json(l)}, {"right", to_json(r)}}; }

Json tagged(std::string_view kind, Json body) {
    body["kind"] = kind;
    return body;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where, what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

Rational rational_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    const std::string at = where + "/" + key;
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) fail(at, "expected a rational string such as \"-3/4\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
        fail(at, e.what());
    }
}

unsigned unsigned_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1'000'000) {
        fail(where + "/" + key, "expected a nonnegative integer");
    }
    return v.get<unsigned>();
}

void check_known_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = it.key() == "kind";
        for (const char* k : keys) ok = ok || it.key() == k;
        if (!ok) fail(where, "unexpected key \"" + it.key() + "\"");
    }
}

void note_dim(std::optional<std::size_t>& dim, std::size_t d, const std::string& where) {
    if (d == 0) fail(where, "points need at least one coordinate");
    if (dim && *dim != d) {
        fail(where, "dimension " + std::to_string(d) + " conflicts with " + std::to_string(*dim));
    }
    dim = d;
}

void scan_dims(const Json& j, const std::string& where, std::optional<std::size_t>& dim) {
    if (!j.is_object()) fail(where, "expected an object");
    const Json& kind_j = field(j, "kind", where);
    if (!kind_j.is_string()) fail(where + "/kind", "expected a string");
    const std::string kind = kind_j.get<std::string>();
    auto array_len = [&](const Json& a, const std::string& at) {
        if (!a.is_array()) fail(at, "expected an array");
        note_dim(dim, a.size(), at);
    };
    if (kind == "dirac" || kind == "dirac_complement") {
        array_len(field(j, "point", where), where + "/point");
    } else if (kind == "shift") {
        array_len(field(j, "by", where), where + "/by");
        scan_dims(field(j, "arg", where), where + "/arg", dim);
    } else if (kind == "finite_support") {
        const Json& es = field(j, "entries", where);
        if (!es.is_array()) fail(where + "/entries", "expected an array");
        for (std::size_t i = 0; i < es.size(); ++i) {
            const std::string at = where + "/entries/" + std::to_string(i);
            array_len(field(es[i], "point", at), at + "/point");
        }
    } else if (kind == "coord_poly") {
        const Json& ts = field(j, "terms", where);
        if (!ts.is_array()) fail(where + "/terms", "expected an array");
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const std::string at = where + "/terms/" + std::to_string(i);
            array_len(field(ts[i], "exp", at), at + "/exp");
        }
    } else if (kind == "sum" || kind == "product") {
        scan_dims(field(j, "left", where), where + "/left", dim);
        scan_dims(field(j, "right", where), where + "/right", dim);
    } else if (kind == "conj" || kind == "half_root" || kind == "scalar_mul") {
        scan_dims(field(j, "arg", where), where + "/arg", dim);
    } else if (kind == "quotient") {
        scan_dims(field(j, "num", where), where + "/num", dim);
        scan_dims(field(j, "den", where), where + "/den", dim);
    } else if (kind == "magnitude_max_sq") {
        const Json& as = field(j, "args", where);
        if (!as.is_array()) fail(where + "/args", "expected an array");
        for (std::size_t i = 0; i < as.size(); ++i) scan_dims(as[i], where + "/args/" + std::to_string(i), dim);
    }
}

Expr build(const Json& j, std::size_t dim, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    const Json& kind_j = field(j, "kind", where);
    if (!kind_j.is_string()) fail(where + "/kind", "expected a string");
    const std::string kind = kind_j.get<std::string>();

    auto child = [&](const char* key) { return build(field(j, key, where), dim, where + "/" + key); };
    auto point = [&](const char* key) {
        Point p = point_from_json(field(j, key, where), where + "/" + key);
        if (p.dim() != dim) fail(where + "/" + key, "point has dimension " + std::to_string(p.dim()));
        return p;
    };

    try {
        if (kind == "const") {
            check_known_keys(j, {"re", "im"}, where);
            return constant(dim, gaussian_from_json(j, where));
        }
        if (kind == "coord_poly") {
            check_known_keys(j, {"terms"}, where);
            const Json& ts = field(j, "terms", where);
            if (!ts.is_array()) fail(where + "/terms", "expected an array");
            std::vector<Term> terms;
            for (std::size_t i = 0; i < ts.size(); ++i) {
                const std::string at = where + "/terms/" + std::to_string(i);
                const Json& e = field(ts[i], "exp", at);
                if (!e.is_array() || e.size() != dim) fail(at + "/exp", "expected " + std::to_string(dim) + " exponents");
                Term t;
                unsigned total = 0;
                for (std::size_t a = 0; a < dim; ++a) {
                    if (!e[a].is_number_integer() || e[a].get<long long>() < 0 ||
                        e[a].get<long long>() > kMaxSerializedDegree) {
                        fail(at + "/exp/" + std::to_string(a), "expected an exponent in [0, 64]");
                    }
                    t.exponents.push_back(e[a].get<unsigned>());
                    total += t.exponents.back();
                }
                if (total > kMaxSerializedDegree) fail(at + "/exp", "total degree exceeds 64");
                t.coeff = gaussian_from_json(ts[i], at);
                terms.push_back(std::move(t));
            }
            return coord_poly(dim, std::move(terms));
        }
        if (kind == "dirac") {
            check_known_keys(j, {"point"}, where);
            return dirac(point("point"));
        }
        if (kind == "dirac_complement") {
            check_known_keys(j, {"point"}, where);
            return dirac_complement(point("point"));
        }
        if (kind == "finite_support") {
            check_known_keys(j, {"entries"}, where);
            const Json& es = field(j, "entries", where);
            if (!es.is_array()) fail(where + "/entries", "expected an array");
            std::vector<std::pair<Point, GaussianRational>> entries;
            for (std::size_t i = 0; i < es.size(); ++i) {
                const std::string at = where + "/entries/" + std::to_string(i);
                Point p = point_from_json(field(es[i], "point", at), at + "/point");
                if (p.dim() != dim) fail(at + "/point", "point has dimension " + std::to_string(p.dim()));
                entries.emplace_back(std::move(p), gaussian_from_json(es[i], at));
            }
            return finite_support(dim, std::move(entries));
        }
        if (kind == "pattern_mask") {
            check_known_keys(j, {"n"}, where);
            const unsigned n = unsigned_field(j, "n", where);
            if (n == 0) fail(where + "/n", "pattern_mask order must be positive");
            return pattern_mask(dim, n);
        }
        if (kind == "inv_norm_power") {
            check_known_keys(j, {"m"}, where);
            return inv_norm_power(dim, unsigned_field(j, "m", where));
        }
        if (kind == "sum") {
            check_known_keys(j, {"left", "right"}, where);
            return sum(child("left"), child("right"));
        }
        if (kind == "product") {
            check_known_keys(j, {"left", "right"}, where);
            return product(child("left"), child("right"));
        }
        if (kind == "conj") {
            check_known_keys(j, {"arg"}, where);
            return conj(child("arg"));
        }
        if (kind == "half_root") {
            check_known_keys(j, {"arg"}, where);
            return half_root(child("arg"));
        }
        if (kind == "scalar_mul") {
            check_known_keys(j, {"re", "im", "arg"}, where);
            return scalar_mul(gaussian_from_json(j, where), child("arg"));
        }
        if (kind == "shift") {
            check_known_keys(j, {"by", "arg"}, where);
            return shift(point("by"), child("arg"));
        }
        if (kind == "quotient") {
            check_known_keys(j, {"num", "den"}, where);
            return quotient(child("num"), child("den"));
        }
        if (kind == "magnitude_max_sq") {
            check_known_keys(j, {"args"}, where);
            const Json& as = field(j, "args", where);
            if (!as.is_array() || as.empty()) fail(where + "/args", "expected a nonempty array");
            std::vector<Expr> args;
            for (std::size_t i = 0; i < as.size(); ++i) args.push_back(build(as[i], dim, where + "/args/" + std::to_string(i)));
            return magnitude_max_sq(args);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        fail(where, e.what());
    }
    fail(where + "/kind", "unknown node kind \"" + kind + "\"");
}

}  // namespace

Json to_json(const GaussianRational& z) {
    return {{"re", to_canonical_string(z.re())}, {"im", to_canonical_string(z.im())}};
}

Json to_json(const Point& p) {
    Json out = Json::array();
    for (std::size_t i = 0; i < p.dim(); ++i) out.push_back(p[i]);
    return out;
}

Json to_json(const Expr& e) {
    return std::visit(
        Overloaded{
            [&](const node::Const& x) { return tagged("const", to_json(x.value)); },
            [&](const node::CoordPoly& x) {
                Json terms = Json::array();
                for (const auto& t : x.terms) {
                    if (t.degree() > kMaxSerializedDegree) throw InvalidArgument("coord_poly degree exceeds 64");
                    Json term = to_json(t.coeff);
                    term["exp"] = t.exponents;
                    terms.push_back(std::move(term));
                }
                return tagged("coord_poly", {{"terms", std::move(terms)}});
            },
            [&](const node::Dirac& x) { return tagged("dirac", {{"point", to_json(x.at)}}); },
            [&](const node::DiracComplement& x) { return tagged("dirac_complement", {{"point", to_json(x.at)}}); },
            [&](const node::FiniteSupport& x) {
                Json entries = Json::array();
                for (const auto& [p, v] : x.entries) {
                    Json entry = to_json(v);
                    entry["point"] = to_json(p);
                    entries.push_back(std::move(entry));
                }
                return tagged("finite_support", {{"entries", std::move(entries)}});
            },
            [&](const node::PatternMask& x) { return tagged("pattern_mask", {{"n", x.n}}); },
            [&](const node::InvNormPower& x) { return tagged("inv_norm_power", {{"m", x.m}}); },
            [&](const node::Sum& x) { return tagged("sum", pair(x.lhs, x.rhs)); },
            [&](const node::Product& x) { return tagged("product", pair(x.lhs, x.rhs)); },
            [&](const node::Conj& x) { return tagged("conj", {{"arg", to_json(x.arg)}}); },
            [&](const node::HalfRoot& x) { return tagged("half_root", {{"arg", to_json(x.arg)}}); },
            [&](const node::ScalarMul& x) {
                Json body = to_json(x.factor);
                body["arg"] = to_json(x.arg);
                return tagged("scalar_mul", std::move(body));
            },
            [&](const node::Shift& x) { return tagged("shift", {{"by", to_json(x.by)}, {"arg", to_json(x.arg)}}); },
            [&](const node::Quotient& x) {
                return tagged("quotient", {{"num", to_json(x.num)}, {"den", to_json(x.den)}});
            },
            [&](const node::MagnitudeMaxSq& x) {
                Json args = Json::array();
                for (const auto& a : x.args) args.push_back(to_json(a));
                return tagged("magnitude_max_sq", {{"args", std::move(args)}});
            },
        },
        e.body());
}

std::string serialize(const Expr& e) { return to_json(e).dump(); }

GaussianRational gaussian_from_json(const Json& j, const std::string& where) {
    return GaussianRational(rational_field(j, "re", where), rational_field(j, "im", where));
}

Point point_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of integers");
    std::vector<Coord> coords;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) fail(where + "/" + std::to_string(i), "expected an integer");
        if (j[i].is_number_unsigned() && j[i].get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
            fail(where + "/" + std::to_string(i), "coordinate out of range");
        }
        coords.push_back(j[i].get<Coord>());
    }
    return Point(std::move(coords));
}

std::optional<std::size_t> infer_dimension(const Json& j) {
    std::optional<std::size_t> dim;
    scan_dims(j, "", dim);
    return dim;
}

Expr expr_from_json(const Json& j, std::optional<std::size_t> dim, std::size_t fallback_dim) {
    const auto inferred = infer_dimension(j);
    if (dim && inferred && *dim != *inferred) {
        throw ParseError("", "expression has dimension " + std::to_string(*inferred) + " but --dim is " +
                                 std::to_string(*dim));
    }
    const std::size_t d = dim ? *dim : inferred.value_or(fallback_dim);
    if (d == 0) throw ParseError("", "dimension must be positive");
    return build(j, d, "");
}

Expr parse_expr(std::string_view text, std::optional<std::size_t> dim, std::size_t fallback_dim) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON: ") + e.what());
    }
    return expr_from_json(j, dim, fallback_dim);
}

}  // namespace sprime
