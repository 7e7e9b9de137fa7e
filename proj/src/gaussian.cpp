#include "sprime/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace sprime {

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    if (sgn(rhs.im_) != 0) im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    if (sgn(rhs.im_) != 0) im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    GaussianRational out;
    Rational scratch;
    assign_mul(out, *this, rhs, scratch);
    return *this = std::move(out);
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("GaussianRational division by zero");
    GaussianRational out;
    Rational scratch;
    assign_div(out, *this, rhs, scratch);
    return *this = std::move(out);
}

void GaussianRational::assign_add(GaussianRational& out, const GaussianRational& a,
                                  const GaussianRational& b) {
    mpq_add(out.re_.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    if (sgn(a.im_) == 0 && sgn(b.im_) == 0) {
        mpq_set_ui(out.im_.get_mpq_t(), 0, 1);
    } else {
        mpq_add(out.im_.get_mpq_t(), a.im_.get_mpq_t(), b.im_.get_mpq_t());
    }
}

void GaussianRational::assign_mul(GaussianRational& out, const GaussianRational& a,
                                  const GaussianRational& b, Rational& scratch) {
    const bool ar = a.is_real();
    const bool br = b.is_real();
    if (ar && br) {
        mpq_mul(out.re_.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
        mpq_set_ui(out.im_.get_mpq_t(), 0, 1);
        return;
    }
    if (br) {
        mpq_mul(out.re_.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
        mpq_mul(out.im_.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
        return;
    }
    if (ar) {
        mpq_mul(out.re_.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
        mpq_mul(out.im_.get_mpq_t(), a.re_.get_mpq_t(), b.im_.get_mpq_t());
        return;
    }
    // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
    mpq_mul(out.re_.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    mpq_mul(scratch.get_mpq_t(), a.im_.get_mpq_t(), b.im_.get_mpq_t());
    mpq_sub(out.re_.get_mpq_t(), out.re_.get_mpq_t(), scratch.get_mpq_t());
    mpq_mul(out.im_.get_mpq_t(), a.re_.get_mpq_t(), b.im_.get_mpq_t());
    mpq_mul(scratch.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
    mpq_add(out.im_.get_mpq_t(), out.im_.get_mpq_t(), scratch.get_mpq_t());
}

void GaussianRational::assign_div(GaussianRational& out, const GaussianRational& a,
                                  const GaussianRational& b, Rational& scratch) {
    if (b.is_real()) {
        mpq_div(out.re_.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
        if (a.is_real()) {
            mpq_set_ui(out.im_.get_mpq_t(), 0, 1);
        } else {
            mpq_div(out.im_.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
        }
        return;
    }
    // a / b = a * conj(b) / |b|^2
    const Rational norm = b.squared_magnitude();
    assign_mul(out, a, b.conj(), scratch);
    mpq_div(out.re_.get_mpq_t(), out.re_.get_mpq_t(), norm.get_mpq_t());
    mpq_div(out.im_.get_mpq_t(), out.im_.get_mpq_t(), norm.get_mpq_t());
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    if (sgn(re_) == 0) return im_.get_str() + "i";
    std::string s = re_.get_str();
    if (sgn(im_) > 0) s += "+";
    return s + im_.get_str() + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace sprime
