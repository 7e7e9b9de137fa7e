#include "sprime/rational.hpp"

#include "sprime/errors.hpp"

#include <cctype>
#include <cstdio>

namespace sprime {

std::string to_canonical_string(const Rational& q) { return q.get_str(10); }

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
        throw ParseError("", "invalid rational literal '" + std::string(text) + "'");
    }
    const std::string num_s(num[0] == '+' ? num.substr(1) : num);
    Rational q;
    q.get_num() = Integer(num_s, 10);
    if (slash == std::string_view::npos) {
        q.get_den() = 1;
    } else {
        const std::string den_s(den[0] == '+' ? den.substr(1) : den);
        q.get_den() = Integer(den_s, 10);
        if (q.get_den() == 0) throw ParseError("", "zero denominator in '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

Integer pow(const Integer& base, unsigned exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    r.canonicalize();
    return r;
}

bool exact_sqrt(const Rational& q, Rational& root) {
    if (sgn(q) < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
        return false;
    }
    mpz_sqrt(root.get_num_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(root.get_den_mpz_t(), q.get_den_mpz_t());
    root.canonicalize();
    return true;
}

// sqrt(p/r) = sqrt(p*r)/r, so integer square roots of p*r give bounds within 1/r.
Rational sqrt_upper(const Rational& q) {
    Rational root;
    if (exact_sqrt(q, root)) return root;
    Integer pr = q.get_num() * q.get_den();
    Integer s;
    mpz_sqrt(s.get_mpz_t(), pr.get_mpz_t());
    Rational r(s + 1, q.get_den());
    r.canonicalize();
    return r;
}

Rational sqrt_lower(const Rational& q) {
    Rational root;
    if (exact_sqrt(q, root)) return root;
    Integer pr = q.get_num() * q.get_den();
    Integer s;
    mpz_sqrt(s.get_mpz_t(), pr.get_mpz_t());
    Rational r(s, q.get_den());
    r.canonicalize();
    return r;
}

Integer ceil_root(const Rational& q, unsigned p) {
    if (sgn(q) <= 0) return 1;
    // ceil(q) is an integer upper bound; take its p-th root then adjust.
    Integer c = q.get_num() / q.get_den();
    if (c * q.get_den() != q.get_num()) c += 1;
    Integer n;
    mpz_root(n.get_mpz_t(), c.get_mpz_t(), p);
    if (n < 1) n = 1;
    while (n > 1 && Rational(pow(Integer(n - 1), p)) >= q) n -= 1;
    while (Rational(pow(n, p)) < q) n += 1;
    return n;
}

std::string to_scientific(const Rational& q, int digits) {
    if (sgn(q) == 0) return "0";
    mpf_class f(q, 256);
    mp_exp_t exp = 0;
    std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    while (static_cast<int>(mant.size()) < digits) mant.push_back('0');
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp) - 1);
    return out;
}

}  // namespace sprime
