#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "mayachain/poly.hpp"

namespace mayachain {

/// Quotient of polynomials over an exact field, kept in reduced normal form:
/// gcd(num, den) = 1 and den monic. The zero function is 0/1.
///
/// Addition and multiplication strip shared denominator factors before the
/// cross products (the denominators met here are products of a few large
/// Wronskians, so this keeps the gcd work on the small cofactors).
template <class K>
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly<K>::one()) {}
    RatFunc(K constant) : num_(std::move(constant)), den_(Poly<K>::one()) {}
    RatFunc(Poly<K> p) : num_(std::move(p)), den_(Poly<K>::one()) {}
    RatFunc(Poly<K> num, Poly<K> den) { assign_reduced(std::move(num), std::move(den)); }

    static RatFunc var() { return RatFunc(Poly<K>::var()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    bool operator==(const RatFunc&) const = default;

    RatFunc operator-() const { return coprime(-num_, den_); }

    friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        const Poly<K> d = gcd(x.den_, y.den_);
        if (d.degree() == 0)
            return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
        const Poly<K> xd = divexact(x.den_, d);
        const Poly<K> yd = divexact(y.den_, d);
        Poly<K> t = x.num_ * yd + y.num_ * xd;
        if (t.is_zero()) return RatFunc();
        const Poly<K> g = gcd(t, d);
        if (g.degree() == 0) return coprime(std::move(t), x.den_ * yd);
        return coprime(divexact(t, g), xd * yd * divexact(d, g));
    }

    friend RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

    friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
        if (x.is_zero() || y.is_zero()) return RatFunc();
        const Poly<K> g1 = gcd(x.num_, y.den_);
        const Poly<K> g2 = gcd(y.num_, x.den_);
        return coprime(divexact(x.num_, g1) * divexact(y.num_, g2),
                       divexact(x.den_, g2) * divexact(y.den_, g1));
    }

    friend RatFunc operator/(const RatFunc& x, const RatFunc& y) {
        if (y.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return x * coprime(y.den_, y.num_);
    }

    RatFunc& operator+=(const RatFunc& y) { return *this = *this + y; }
    RatFunc& operator-=(const RatFunc& y) { return *this = *this - y; }
    RatFunc& operator*=(const RatFunc& y) { return *this = *this * y; }
    RatFunc& operator/=(const RatFunc& y) { return *this = *this / y; }

    /// Derivative via the quotient rule. With gcd(num, den) = 1 the single
    /// reduction gcd(t, den) already yields the fully reduced result.
    RatFunc derivative() const {
        if (is_polynomial()) return RatFunc(num_.derivative());
        Poly<K> t = num_.derivative() * den_ - num_ * den_.derivative();
        if (t.is_zero()) return RatFunc();
        const Poly<K> g = gcd(t, den_);
        if (g.degree() == 0) return coprime(std::move(t), den_ * den_);
        return coprime(divexact(t, g), den_ * divexact(den_, g));
    }

    std::string str() const { return num_.str() + " / " + den_.str(); }

private:
    /// Normalizes a fraction already known to be in lowest terms.
    static RatFunc coprime(Poly<K> num, Poly<K> den) {
        RatFunc r;
        if (num.is_zero()) return r;
        const K lead = den.leading();
        r.num_ = num * (K(1) / lead);
        r.den_ = den.monic();
        return r;
    }

    void assign_reduced(Poly<K> num, Poly<K> den) {
        if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num.is_zero()) {
            num_ = Poly<K>();
            den_ = Poly<K>::one();
            return;
        }
        const Poly<K> g = gcd(num, den);
        if (g.degree() > 0) {
            num = divexact(num, g);
            den = divexact(den, g);
        }
        *this = coprime(std::move(num), std::move(den));
    }

    Poly<K> num_, den_;
};

/// d/dz log p = p'/p.
template <class K>
RatFunc<K> log_derivative(const Poly<K>& p) {
    if (p.is_zero()) throw std::domain_error("log_derivative of zero");
    return RatFunc<K>(p.derivative(), p);
}

using QRatFunc = RatFunc<Rational>;
using QuadRatFunc = RatFunc<Quad>;

/// Lifts a rational-coefficient polynomial into Q(c).
inline QuadPoly lift(const QPoly& p) {
    std::vector<Quad> c(p.coeffs().begin(), p.coeffs().end());
    return QuadPoly(std::move(c));
}

/// z -> p(cz), lifting coefficients into Q(c); even powers of c collapse to
/// rationals via c^2.
inline QuadPoly scale_argument(const QPoly& p, const Quad& c) {
    std::vector<Quad> out(p.coeffs().size());
    Quad power(1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = Quad(p.coeffs()[i]) * power;
        power *= c;
    }
    return QuadPoly(std::move(out));
}

inline QuadRatFunc scale_argument(const QRatFunc& f, const Quad& c) {
    if (is_zero(c)) throw std::invalid_argument("scale_argument: c must be non-zero");
    return QuadRatFunc(scale_argument(f.num(), c), scale_argument(f.den(), c));
}

}  // namespace mayachain
