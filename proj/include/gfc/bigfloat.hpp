#pragma once

/**
 * @file bigfloat.hpp
 * @brief Arbitrary precision real and complex numbers on top of MPFR.
 *
 * BigFloat owns one mpfr_t. BigComplex is a plain pair of BigFloats with the
 * handful of operations the curve code needs (field arithmetic, principal
 * square root, modulus).
 */

#include <mpfr.h>
#include <gmpxx.h>

#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "gfc/error.hpp"

namespace gfc {

inline constexpr long kDefaultPrecision = 256;

class BigFloat {
public:
    explicit BigFloat(long prec = kDefaultPrecision) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_zero(v_, 1);
    }
    BigFloat(double d, long prec) : BigFloat(prec) { mpfr_set_d(v_, d, MPFR_RNDN); }
    BigFloat(const mpq_class& q, long prec) : BigFloat(prec) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

    static BigFloat parse(const std::string& text, long prec) {
        BigFloat out(prec);
        if (text.empty() || mpfr_set_str(out.v_, text.c_str(), 10, MPFR_RNDN) != 0)
            throw InputError("cannot parse real number '" + text + "'");
        return out;
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(joint(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(joint(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(joint(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        if (b.is_zero()) throw DomainError("division by zero");
        BigFloat r(joint(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }

    BigFloat abs() const {
        BigFloat r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        if (sign() < 0) throw DomainError("square root of a negative real");
        BigFloat r(precision());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }

    /// 2^e at the given precision.
    static BigFloat pow2(long e, long prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    /// Decimal text with the given number of significant digits, trailing zeros trimmed.
    std::string to_string(int digits = 20) const {
        if (is_zero()) return "0";
        std::unique_ptr<char[]> buf(new char[digits + 64]);
        mpfr_snprintf(buf.get(), digits + 64, "%.*Rg", digits, v_);
        return buf.get();
    }

private:
    static mpfr_prec_t clamp(long prec) {
        if (prec < MPFR_PREC_MIN || prec > 1'000'000)
            throw InputError("precision " + std::to_string(prec) + " bits out of range");
        return static_cast<mpfr_prec_t>(prec);
    }
    static long joint(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

    mpfr_t v_;
};

class BigComplex {
public:
    explicit BigComplex(long prec = kDefaultPrecision) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(const mpq_class& q, long prec) : re_(q, prec), im_(prec) {}

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    long precision() const { return std::max(re_.precision(), im_.precision()); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        if (b.is_zero()) throw DomainError("division by zero");
        const BigFloat den = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den};
    }
    BigComplex operator-() const { return {-re_, -im_}; }

    BigFloat norm2() const { return re_ * re_ + im_ * im_; }
    BigFloat abs() const { return norm2().sqrt(); }

    /// Principal square root (branch cut on the negative real axis, Re >= 0).
    BigComplex sqrt() const {
        if (is_zero()) return BigComplex(precision());
        const BigFloat r = abs();
        const BigFloat two(2.0, precision());
        BigFloat u = ((r + re_) / two).sqrt();
        BigFloat v = ((r - re_) / two).sqrt();
        if (im_.sign() < 0) v = -v;
        return {std::move(u), std::move(v)};
    }

    std::string to_string(int digits = 20) const {
        return "c(" + re_.to_string(digits) + "," + im_.to_string(digits) + ")";
    }

private:
    BigFloat re_;
    BigFloat im_;
};

}  // namespace gfc
