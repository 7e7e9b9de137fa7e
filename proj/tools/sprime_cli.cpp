// sprime: command-line front end. Reads expression JSON from files (or "-" for stdin),
// prints one JSON report on stdout. Exit 0 decided, 1 usage/parse error, 2 inconclusive
// or window-only.

#include "sprime/errors.hpp"
#include "sprime/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace sprime;

namespace {

struct CliConfig {
    std::optional<std::size_t> dim;
    std::int64_t window = 100;
    unsigned K = kDefaultHorizon;
    std::uint64_t cap = kDefaultZeroOrderCap;
    unsigned m_cap = kDefaultMCap;
    unsigned precision = 128;
    std::string format = "json";
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Outcome {
    Json body;
    bool decided = true;
};

class Inputs {
public:
    explicit Inputs(const CliConfig& cfg) : cfg_(cfg) {}

    std::vector<Expr> load(const std::string& path) {
        const Json j = read_json(path);
        std::vector<Expr> out;
        if (j.is_array()) {
            for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_one(j[i]));
        } else {
            out.push_back(parse_one(j));
        }
        return out;
    }

    Expr load_one(const std::string& path) {
        auto v = load(path);
        if (v.size() != 1) throw UsageError(path + ": expected a single expression");
        return v.front();
    }

    std::size_t dim() const { return cfg_.dim.value_or(seen_dim_.value_or(1)); }

    Point point(const std::string& text) {
        Point p = point_from_json(Json::parse(text), "");
        note_dim(p.dim());
        return p;
    }

private:
    Json read_json(const std::string& path) {
        std::string text;
        if (path == "-") {
            if (stdin_used_) throw UsageError("stdin can be read only once");
            stdin_used_ = true;
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream in(path);
            if (!in) throw UsageError("cannot open " + path);
            text.assign(std::istreambuf_iterator<char>(in), {});
        }
        return Json::parse(text);
    }

    Expr parse_one(const Json& j) {
        auto want = cfg_.dim ? cfg_.dim : seen_dim_;
        Expr e = expr_from_json(j, want, 1);
        note_dim(e.dim());
        return e;
    }

    void note_dim(std::size_t d) {
        const auto want = cfg_.dim ? cfg_.dim : seen_dim_;
        if (want && *want != d) throw DimensionMismatch(*want, d);
        seen_dim_ = d;
    }

    const CliConfig& cfg_;
    std::optional<std::size_t> seen_dim_;
    bool stdin_used_ = false;
};

Json config_json(const CliConfig& cfg, std::size_t dim) {
    return {{"dim", dim},         {"window", cfg.window},       {"K", cfg.K},
            {"cap", cfg.cap},     {"m_cap", cfg.m_cap},         {"precision", cfg.precision},
            {"format", cfg.format}};
}

void render_text(const Json& j, const std::string& path, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, os);
    } else if (j.is_array()) {
        if (j.empty()) os << path << ": []\n";
        for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

std::string approx_string(const BigFloat& x, unsigned bits) {
    const auto digits = static_cast<std::size_t>(std::ceil(bits * std::log10(2.0)));
    return x.to_string(digits);
}

Json exprs_json(const std::vector<Expr>& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(to_json(e));
    return out;
}

}  // namespace

int run(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"Exact computations in the ring of polynomial-growth lattice functions"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--dim", cfg.dim, "ambient dimension (inferred from input, default 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--window", cfg.window, "audit window radius")->check(CLI::PositiveNumber);
    app.add_option("--K", cfg.K, "probe horizon")->check(CLI::PositiveNumber);
    app.add_option("--cap", cfg.cap, "zero-order cap")->check(CLI::PositiveNumber);
    app.add_option("--m-cap", cfg.m_cap, "largest fitted growth exponent")->check(CLI::PositiveNumber);
    app.add_option("--precision", cfg.precision, "bits for approximate evaluation")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));

    std::string expr_path, f_path, g_path, d_path, point_text, n1_text, n2_text, delta_text, M_text = "1";
    std::string set_text, terms_text;
    std::vector<std::string> gen_paths;
    unsigned m_exp = 0, level = 1, chain_N = 1;
    std::int64_t step = 1, offset = 0;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate at a point");
    eval_cmd->add_option("--expr", expr_path)->required();
    eval_cmd->add_option("--point", point_text)->required();

    auto* infer_cmd = app.add_subcommand("cert-infer", "growth certificate (structural, else fitted)");
    infer_cmd->add_option("--expr", expr_path)->required();

    auto* audit_cmd = app.add_subcommand("cert-audit", "audit a growth or lower-bound certificate");
    audit_cmd->add_option("--expr", expr_path)->required();
    audit_cmd->add_option("--M", M_text, "upper constant (rational)");
    audit_cmd->add_option("--m", m_exp, "exponent");
    audit_cmd->add_option("--delta", delta_text, "audit |f| >= delta (1+|n|)^-m instead");

    auto* div_cmd = app.add_subcommand("divides", "does g divide f");
    div_cmd->add_option("--g", g_path)->required();
    div_cmd->add_option("--f", f_path)->required();

    auto* inv_cmd = app.add_subcommand("invertible", "is f a unit");
    inv_cmd->add_option("--f", f_path)->required();

    auto* gcd_cmd = app.add_subcommand("gcd", "generator of the ideal of a finite list");
    gcd_cmd->add_option("--gens", gen_paths)->required();

    auto* mem_cmd = app.add_subcommand("member", "ideal membership with Bezout cofactors");
    mem_cmd->add_option("--f", f_path)->required();
    mem_cmd->add_option("--gens", gen_paths)->required();

    auto* pri_cmd = app.add_subcommand("principal", "principal generator with both inclusions checked");
    pri_cmd->add_option("--gens", gen_paths)->required();

    auto* max_cmd = app.add_subcommand("maximal-member", "membership in the fixed maximal ideal at a point");
    max_cmd->add_option("--f", f_path)->required();
    max_cmd->add_option("--point", point_text)->required();

    auto* nf_cmd = app.add_subcommand("nonfixed-member", "membership along a diagonal subsequence");
    nf_cmd->add_option("--f", f_path)->required();
    nf_cmd->add_option("--step", step, "k_j = step*j + offset")->check(CLI::PositiveNumber);
    nf_cmd->add_option("--offset", offset);
    nf_cmd->add_option("--terms", terms_text, "explicit k_j as a JSON array");

    auto* cls_cmd = app.add_subcommand("classify-prime", "is the principal ideal <d> prime");
    cls_cmd->add_option("--d", d_path)->required();

    auto* sep_cmd = app.add_subcommand("separator", "element of m_n1 outside m_n2");
    sep_cmd->add_option("--n1", n1_text)->required();
    sep_cmd->add_option("--n2", n2_text)->required();

    auto* zo_cmd = app.add_subcommand("zero-order", "zero order of f at a point");
    zo_cmd->add_option("--f", f_path)->required();
    zo_cmd->add_option("--point", point_text)->required();

    auto* mask_cmd = app.add_subcommand("mask", "pattern mask f_n, optionally evaluated");
    mask_cmd->add_option("--n", level)->check(CLI::PositiveNumber);
    mask_cmd->add_option("--point", point_text);

    auto* km_cmd = app.add_subcommand("krull-member", "membership in i*, i_n or M_n");
    km_cmd->add_option("--f", f_path)->required();
    km_cmd->add_option("--set", set_text)->required()->check(CLI::IsMember({"i_star", "i_n", "M_n"}));
    km_cmd->add_option("--n", level)->check(CLI::PositiveNumber);

    auto* chain_cmd = app.add_subcommand("chain-report", "ratio table and certified chain memberships");
    chain_cmd->add_option("--N", chain_N)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    const auto* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    Inputs in(cfg);

    try {
        auto window = [&] { return Window{in.dim(), cfg.window}; };
        auto scan_cfg = [&] { return ScanConfig{window(), cfg.m_cap}; };
        Outcome out;

        if (cmd == "eval") {
            Expr f = in.load_one(expr_path);
            Point n = in.point(point_text);
            try {
                out.body = {{"value", to_json(eval(f, n.coords()))}, {"exact", true}};
            } catch (const HalfRootNotExact&) {
                auto a = eval_approx(f, n.coords(), cfg.precision);
                out.body = {{"value",
                             {{"re", approx_string(a.value.re, cfg.precision)},
                              {"im", approx_string(a.value.im, cfg.precision)}}},
                            {"exact", false}};
            }
            out.body["point"] = to_json(n);
            out.body["scope"] = "global";
        } else if (cmd == "cert-infer") {
            Expr f = in.load_one(expr_path);
            if (auto c = structural_certificate(f)) {
                out.body = {{"verdict", "certificate"}, {"method", "structural"}, {"certificate", to_json(*c)},
                            {"scope", scope_name(c->scope)}};
            } else if (auto c = fit_certificate(f, window(), cfg.m_cap)) {
                out.body = {{"verdict", "certificate"}, {"method", "fit"}, {"certificate", to_json(*c)},
                            {"scope", scope_name(c->scope)}};
                out.decided = c->scope == Scope::Global;
            } else {
                out.body = {{"verdict", "no_fit"}, {"m_cap", cfg.m_cap}, {"scope", "window"}};
                out.decided = false;
            }
        } else if (cmd == "cert-audit") {
            Expr f = in.load_one(expr_path);
            if (!delta_text.empty()) {
                out.body = to_json(audit_lower(f, LowerCertificate{parse_rational(delta_text), m_exp, Scope::Window},
                                               window()));
            } else {
                out.body = to_json(
                    audit_upper(f, GrowthCertificate{parse_rational(M_text), m_exp, Scope::Window}, window()));
            }
        } else if (cmd == "divides") {
            Expr g = in.load_one(g_path);
            Expr f = in.load_one(f_path);
            auto v = divides(g, f, scan_cfg());
            out = {to_json(v), is_decided(v)};
        } else if (cmd == "invertible") {
            Expr f = in.load_one(f_path);
            auto v = is_invertible(f, scan_cfg());
            out = {to_json(v), is_decided(v)};
        } else if (cmd == "gcd") {
            std::vector<Expr> gens;
            for (const auto& p : gen_paths) {
                for (auto& e : in.load(p)) gens.push_back(std::move(e));
            }
            Expr d = gcd(gens);
            out.body = {{"gcd", to_json(d)}, {"zero_set", to_json(zero_set(d))}, {"scope", "global"}};
        } else if (cmd == "member") {
            Expr f = in.load_one(f_path);
            std::vector<Expr> gens;
            for (const auto& p : gen_paths) {
                for (auto& e : in.load(p)) gens.push_back(std::move(e));
            }
            auto v = ideal_member(f, gens, scan_cfg());
            out = {to_json(v), is_decided(v)};
        } else if (cmd == "principal") {
            std::vector<Expr> gens;
            for (const auto& p : gen_paths) {
                for (auto& e : in.load(p)) gens.push_back(std::move(e));
            }
            auto r = principal_generator(gens, scan_cfg());
            out.body = to_json(r);
            out.decided = out.body["scope"] == "global";
        } else if (cmd == "maximal-member") {
            Expr f = in.load_one(f_path);
            Point k = in.point(point_text);
            const bool member = fixed_maximal_member(f, k);
            out.body = {{"verdict", member ? "member" : "not_member"}, {"point", to_json(k)}, {"scope", "global"}};
            if (!member) out.body["witness"] = to_json(maximality_witness(k, f, window()));
        } else if (cmd == "nonfixed-member") {
            Expr f = in.load_one(f_path);
            Subsequence seq = Subsequence::linear(step, offset);
            if (!terms_text.empty()) seq = Subsequence::explicit_terms(Json::parse(terms_text).get<std::vector<std::int64_t>>());
            auto v = nonfixed_ideal_member(f, seq, cfg.K);
            out = {to_json(v), is_decided(v)};
        } else if (cmd == "classify-prime") {
            Expr d = in.load_one(d_path);
            auto c = classify_principal_prime(d, scan_cfg());
            out = {to_json(c), is_decided(c)};
        } else if (cmd == "separator") {
            Point a = in.point(n1_text);
            Point b = in.point(n2_text);
            Expr s = separator(a, b);
            out.body = {{"separator", to_json(s)},
                        {"at_n1", to_json(eval(s, a.coords()))},
                        {"at_n2", to_json(eval(s, b.coords()))},
                        {"scope", "global"}};
        } else if (cmd == "zero-order") {
            Expr f = in.load_one(f_path);
            Point n = in.point(point_text);
            out.body = to_json(zero_order(f, n, cfg.cap));
            out.body["point"] = to_json(n);
        } else if (cmd == "mask") {
            std::optional<Point> n;
            if (!point_text.empty()) n = in.point(point_text);
            Expr f = pattern_mask(in.dim(), level);
            out.body = {{"mask", to_json(f)}, {"n", level}, {"scope", "global"}};
            if (n) {
                out.body["point"] = to_json(*n);
                out.body["value"] = to_json(eval(f, n->coords()));
            }
        } else if (cmd == "krull-member") {
            Expr f = in.load_one(f_path);
            KrullVerdict v = set_text == "i_star" ? membership_i_star(f, cfg.K)
                             : set_text == "i_n"  ? membership_i_n(f, level, cfg.K)
                                                  : membership_M_n(f, level, cfg.K);
            out = {to_json(v), v.certified()};
        } else if (cmd == "chain-report") {
            auto r = chain_report(chain_N, cfg.K, in.dim(), cfg.cap);
            out = {to_json(r), is_decided(r)};
        }

        out.body["command"] = cmd;
        out.body["config"] = config_json(cfg, in.dim());
        if (cfg.format == "text") {
            render_text(out.body, "", std::cout);
        } else {
            std::cout << out.body.dump(2) << "\n";
        }
        return out.decided ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
    } catch (const Json::exception& e) {
        std::cerr << "invalid JSON: " << e.what() << "\n";
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
}

int main(int argc, char** argv) { return run(argc, argv); }
