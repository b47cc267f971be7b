#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "mayachain/rational.hpp"

namespace mayachain {

/// Element a + b*c of the quadratic extension Q(c), where c^2 = d is a fixed
/// rational that is not a square in Q.
///
/// The defining constant travels with the value. A value with b == 0 is a
/// plain rational and is compatible with any extension; binary operations on
/// two genuinely quadratic values require equal d and throw otherwise.
class Quad {
public:
    Quad() : a_(0), b_(0), d_(0) {}
    Quad(int v) : a_(v), b_(0), d_(0) {}
    Quad(Rational v) : a_(std::move(v)), b_(0), d_(0) {}
    Quad(Rational a, Rational b, Rational d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    static Quad generator(const Rational& d) { return Quad(0, 1, d); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const Rational& defining() const { return d_; }

    bool is_rational() const { return is_zero(b_); }

    /// Throws unless the value is a plain rational.
    const Rational& as_rational() const {
        if (!is_rational()) throw std::domain_error("Quad: value is not rational");
        return a_;
    }

    friend bool operator==(const Quad& x, const Quad& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        // d only matters when a radical part is present on both sides
        if (!is_zero(x.b_)) return x.d_ == y.d_;
        return true;
    }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

    Quad operator-() const { return Quad(-a_, -b_, d_); }

    friend Quad operator+(const Quad& x, const Quad& y) {
        return Quad(x.a_ + y.a_, x.b_ + y.b_, joint(x, y));
    }
    friend Quad operator-(const Quad& x, const Quad& y) {
        return Quad(x.a_ - y.a_, x.b_ - y.b_, joint(x, y));
    }
    friend Quad operator*(const Quad& x, const Quad& y) {
        const Rational d = joint(x, y);
        return Quad(x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend Quad operator/(const Quad& x, const Quad& y) { return x * y.inverse(); }

    Quad& operator+=(const Quad& y) { return *this = *this + y; }
    Quad& operator-=(const Quad& y) { return *this = *this - y; }
    Quad& operator*=(const Quad& y) { return *this = *this * y; }
    Quad& operator/=(const Quad& y) { return *this = *this / y; }

    Quad conjugate() const { return Quad(a_, -b_, d_); }

    /// Field norm a^2 - d b^2; zero only for the zero element when d is a
    /// non-square.
    Rational norm() const { return a_ * a_ - d_ * b_ * b_; }

    Quad inverse() const {
        const Rational n = norm();
        if (is_zero(n)) throw std::domain_error("Quad: division by zero (or zero divisor)");
        return Quad(a_ / n, -b_ / n, d_);
    }

    std::string str() const {
        if (is_rational()) return to_string(a_);
        return to_string(a_) + (sgn(b_) >= 0 ? "+" : "") + to_string(b_) + "*c";
    }

private:
    static Rational joint(const Quad& x, const Quad& y) {
        if (is_zero(x.b_)) return y.d_;
        if (is_zero(y.b_)) return x.d_;
        if (x.d_ != y.d_) throw std::domain_error("Quad: mixed extension constants");
        return x.d_;
    }

    Rational a_, b_, d_;
};

inline bool is_zero(const Quad& q) {
    return is_zero(q.rational_part()) && is_zero(q.radical_part());
}

}  // namespace mayachain
