#pragma once

#include "sprime/rational.hpp"

#include <iosfwd>
#include <string>

namespace sprime {

/// Exact complex number re + im*i with rational parts. The value domain of every
/// exactly evaluable expression.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re) : re_(re), im_(0) {}

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational squared_magnitude() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    /// Throws std::domain_error on division by zero.
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Human form such as "3+4i", "-1/2", "2/3i".
    std::string to_string() const;

    // In-place kernels used by the evaluator; they reuse the limbs already held by `out`.
    // `out` must not alias an input.
    static void assign_add(GaussianRational& out, const GaussianRational& a, const GaussianRational& b);
    static void assign_mul(GaussianRational& out, const GaussianRational& a, const GaussianRational& b,
                           Rational& scratch);
    /// a / b with b != 0.
    static void assign_div(GaussianRational& out, const GaussianRational& a, const GaussianRational& b,
                           Rational& scratch);

private:
    Rational re_;
    Rational im_;
};

inline Rational squared_magnitude(const GaussianRational& z) { return z.squared_magnitude(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace sprime
