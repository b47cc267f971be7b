#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "mayachain/rational.hpp"

namespace mayachain {

/// Thin RAII wrapper over an mpfr_t with per-value precision in bits.
/// Binary operations round to the larger operand precision (MPFR_RNDN).
class MpFloat {
public:
    explicit MpFloat(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    MpFloat(const MpFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MpFloat(MpFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    MpFloat& operator=(const MpFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpFloat& operator=(MpFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpFloat() { mpfr_clear(v_); }

    static MpFloat from(long x, mpfr_prec_t prec) {
        MpFloat r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static MpFloat from(double x, mpfr_prec_t prec) {
        MpFloat r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static MpFloat from(const Rational& x, mpfr_prec_t prec) {
        MpFloat r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    /// 2^e.
    static MpFloat pow2(long e, mpfr_prec_t prec) {
        MpFloat r(prec);
        mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Base-2 exponent (magnitude ~ 2^exp); 0 for zero.
    long exponent() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

    std::string str(int digits) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend MpFloat operator+(const MpFloat& a, const MpFloat& b) {
        MpFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpFloat operator-(const MpFloat& a, const MpFloat& b) {
        MpFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpFloat operator*(const MpFloat& a, const MpFloat& b) {
        MpFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpFloat operator/(const MpFloat& a, const MpFloat& b) {
        MpFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    MpFloat operator-() const {
        MpFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    MpFloat& operator+=(const MpFloat& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    MpFloat& operator-=(const MpFloat& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    MpFloat& operator*=(const MpFloat& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator==(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend MpFloat abs(const MpFloat& a) {
        MpFloat r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend MpFloat sqrt(const MpFloat& a) {
        MpFloat r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend MpFloat hypot(const MpFloat& a, const MpFloat& b) {
        MpFloat r(std::max(a.prec(), b.prec()));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpFloat pow_ui(const MpFloat& a, unsigned long e) {
        MpFloat r(a.prec());
        mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend MpFloat max(const MpFloat& a, const MpFloat& b) { return a < b ? b : a; }

private:
    mpfr_t v_;
};

struct MpComplex {
    MpFloat re, im;

    explicit MpComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    MpComplex(MpFloat r, MpFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend MpComplex operator+(const MpComplex& a, const MpComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend MpComplex operator-(const MpComplex& a, const MpComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend MpComplex operator/(const MpComplex& a, const MpComplex& b) {
        const MpFloat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    MpComplex conj() const { return {re, -im}; }
    MpFloat abs() const { return hypot(re, im); }
};

}  // namespace mayachain
