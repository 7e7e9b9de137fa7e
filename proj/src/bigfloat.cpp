#include "sprime/bigfloat.hpp"

#include <utility>

namespace sprime {

BigFloat::BigFloat(mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    // Steal the limbs and give `other` a fresh minimal value.
    *value_ = *other.value_;
    mpfr_init2(other.value_, MPFR_PREC_MIN);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) {
        std::swap(*value_, *other.value_);
    }
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(std::size_t digits) const {
    if (mpfr_zero_p(value_)) return "0";
    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 10, digits, value_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    return out + "e" + std::to_string(static_cast<long>(exp) - 1);
}

}  // namespace sprime
