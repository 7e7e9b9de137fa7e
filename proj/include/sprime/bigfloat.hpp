#pragma once

#include "sprime/rational.hpp"

#include <mpfr.h>

#include <string>

namespace sprime {

/// Owning MPFR value with a fixed precision (bits), round-to-nearest.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits);
    BigFloat(const Rational& q, mpfr_prec_t bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Scientific decimal string with `digits` significant digits.
    std::string to_string(std::size_t digits) const;

private:
    mpfr_t value_;
};

struct BigComplex {
    BigFloat re;
    BigFloat im;
};

}  // namespace sprime
