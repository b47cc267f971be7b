#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mayachain/modp.hpp"
#include "mayachain/quadext.hpp"
#include "mayachain/rational.hpp"

namespace mayachain {

/// Dense univariate polynomial over an exact field K (Rational or Quad).
/// Coefficients are stored in ascending degree with no trailing zeros; the
/// zero polynomial is the empty sequence.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(K constant) { coeffs_.push_back(std::move(constant)); trim(); }
    explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(K(1)); }
    /// The monomial z.
    static Poly var() { return Poly(std::vector<K>{K(0), K(1)}); }
    static Poly monomial(std::size_t n, K coeff) {
        std::vector<K> c(n + 1, K(0));
        c[n] = std::move(coeff);
        return Poly(std::move(c));
    }

    const std::vector<K>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const K& leading() const {
        if (is_zero()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }

    bool operator==(const Poly&) const = default;

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& x, const Poly& y) {
        std::vector<K> c(std::max(x.coeffs_.size(), y.coeffs_.size()), K(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) c[i] = x.coeffs_[i];
        for (std::size_t i = 0; i < y.coeffs_.size(); ++i) c[i] += y.coeffs_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

    friend Poly operator*(const Poly& x, const Poly& y) {
        if (x.is_zero() || y.is_zero()) return Poly();
        return Poly(mul_vec(x.coeffs_, y.coeffs_));
    }

    friend Poly operator*(const Poly& x, const K& s) {
        if (mayachain::is_zero(s)) return Poly();
        Poly r(x);
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }
    friend Poly operator*(const K& s, const Poly& x) { return x * s; }

    Poly& operator+=(const Poly& y) { return *this = *this + y; }
    Poly& operator-=(const Poly& y) { return *this = *this - y; }
    Poly& operator*=(const Poly& y) { return *this = *this * y; }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<K> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * K(static_cast<int>(i));
        return Poly(std::move(c));
    }

    template <class V>
    V eval(const V& x) const {
        V acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + V(coeffs_[i]);
        return acc;
    }

    /// Quotient and remainder; K must be a field.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        const int db = b.degree();
        if (a.degree() < db) return {Poly(), a};
        std::vector<K> rem = a.coeffs_;
        std::vector<K> quot(a.degree() - db + 1, K(0));
        const K lead_inv = K(1) / b.leading();
        for (int i = a.degree(); i >= db; --i) {
            if (mayachain::is_zero(rem[i])) continue;
            const K q = rem[i] * lead_inv;
            const int off = i - db;
            quot[off] = q;
            for (int j = 0; j <= db; ++j) rem[off + j] -= q * b.coeffs_[j];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

    /// Exact division; throws if the remainder is non-zero.
    friend Poly divexact(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        return *this * (K(1) / leading());
    }

    /// Ascending coefficient list, e.g. "[12, 0, -48, 0, 16]".
    std::string str() const;

private:
    void trim() {
        while (!coeffs_.empty() && mayachain::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    static std::vector<K> mul_vec(const std::vector<K>& a, const std::vector<K>& b) {
        if (a.size() < 48 || b.size() < 48) {
            std::vector<K> c(a.size() + b.size() - 1, K(0));
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (mayachain::is_zero(a[i])) continue;
                for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
            }
            return c;
        }
        // Karatsuba split for the large products that show up in chain
        // verification.
        const std::size_t h = std::max(a.size(), b.size()) / 2;
        auto lo = [&](const std::vector<K>& v) {
            return std::vector<K>(v.begin(), v.begin() + std::min(h, v.size()));
        };
        auto hi = [&](const std::vector<K>& v) {
            return v.size() > h ? std::vector<K>(v.begin() + h, v.end()) : std::vector<K>{};
        };
        auto add_vec = [](std::vector<K> x, const std::vector<K>& y) {
            if (x.size() < y.size()) x.resize(y.size(), K(0));
            for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
            return x;
        };
        const auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
        auto safe_mul = [](const std::vector<K>& x, const std::vector<K>& y) {
            std::vector<K> xs = x, ys = y;
            while (!xs.empty() && mayachain::is_zero(xs.back())) xs.pop_back();
            while (!ys.empty() && mayachain::is_zero(ys.back())) ys.pop_back();
            if (xs.empty() || ys.empty()) return std::vector<K>{};
            return mul_vec(xs, ys);
        };
        const auto z0 = safe_mul(a0, b0);
        const auto z2 = safe_mul(a1, b1);
        const auto z1 = safe_mul(add_vec(a0, a1), add_vec(b0, b1));
        std::vector<K> c(a.size() + b.size() - 1, K(0));
        auto add_at = [&](const std::vector<K>& v, std::size_t off, bool negate) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (negate)
                    c[off + i] -= v[i];
                else
                    c[off + i] += v[i];
            }
        };
        add_at(z0, 0, false);
        add_at(z2, 2 * h, false);
        add_at(z1, h, false);
        add_at(z0, h, true);
        add_at(z2, h, true);
        return c;
    }

    std::vector<K> coeffs_;
};

inline std::string coeff_str(const Rational& c) { return to_string(c); }
inline std::string coeff_str(const Quad& c) { return c.str(); }

template <class K>
std::string Poly<K>::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += coeff_str(coeffs_[i]);
    }
    out += "]";
    return out;
}

using QPoly = Poly<Rational>;
using QuadPoly = Poly<Quad>;

// --- gcd ---------------------------------------------------------------------
//
// Monic gcd over Q or Q(c). Images of the gcd are computed modulo word-size
// primes, combined by CRT, and the rational coefficients recovered by
// rational reconstruction; the candidate is accepted only after exact trial
// division, so unlucky primes cost time but never correctness. A direct
// Euclidean fallback guards the (never observed) case where the modular loop
// fails to settle.

namespace gcd_detail {

/// Rational reconstruction: the unique a/b with |a|, |b| <= sqrt(M/2)
/// congruent to v mod M, if it exists.
inline std::optional<Rational> rational_reconstruct(const Integer& v, const Integer& modulus) {
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), Integer(modulus / 2).get_mpz_t());
    Integer r0 = modulus, r1 = v % modulus;
    if (sgn(r1) < 0) r1 += modulus;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Integer t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (sgn(t1) == 0) return std::nullopt;
    Integer abs_t1 = abs(t1);
    if (abs_t1 > bound) return std::nullopt;
    Integer g = gcd(r1, abs_t1);
    if (g != 1) return std::nullopt;
    return make_rational(r1, t1);
}

/// One CRT step per coefficient accumulator.
inline void crt_update(Integer& acc, const Integer& modulus, std::uint64_t v, std::uint64_t p) {
    const Integer pz(p);
    Integer mp = modulus % pz;
    Integer delta = (Integer(v) - acc) % pz;
    if (sgn(delta) < 0) delta += pz;
    Integer minv;
    if (mpz_invert(minv.get_mpz_t(), mp.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::logic_error("crt_update: moduli not coprime");
    Integer t = (delta * minv) % pz;
    acc += modulus * t;
}

template <class K>
Poly<K> gcd_euclid_reference(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline bool divides(const QPoly& a, const QPoly& g) { return divmod(a, g).second.is_zero(); }
inline bool divides(const QuadPoly& a, const QuadPoly& g) { return divmod(a, g).second.is_zero(); }

inline std::optional<FpPoly<Fp>> reduce_poly(const Fp& f, const QPoly& a) {
    FpPoly<Fp> out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto r = f.reduce(a.coeffs()[i]);
        if (!r) return std::nullopt;
        out[i] = *r;
    }
    if (!out.empty() && out.back() == 0) return std::nullopt;  // degree must be preserved
    return out;
}

inline std::optional<FpPoly<Fp2>> reduce_poly(const Fp2& f, const QuadPoly& a) {
    FpPoly<Fp2> out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto r = f.reduce(a.coeffs()[i]);
        if (!r) return std::nullopt;
        out[i] = *r;
    }
    if (!out.empty() && f.is_zero(out.back())) return std::nullopt;
    return out;
}

}  // namespace gcd_detail

QPoly gcd(const QPoly& a, const QPoly& b);
QuadPoly gcd(const QuadPoly& a, const QuadPoly& b);

inline QPoly gcd(const QPoly& a, const QPoly& b) {
    using namespace gcd_detail;
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return QPoly::one();

    std::size_t prime_idx = 0;
    int expected_deg = -1;
    std::vector<Integer> crt;     // accumulated lifted coefficients (monic image)
    Integer modulus = 1;

    for (int attempt = 0; attempt < 64; ++attempt) {
        const std::uint64_t p = nth_prime(prime_idx++);
        const Fp f(p);
        auto fa = reduce_poly(f, a);
        auto fb = reduce_poly(f, b);
        if (!fa || !fb) continue;
        auto g = fp_gcd(f, std::move(*fa), std::move(*fb));
        if (g.size() == 1) return QPoly::one();
        const int deg = static_cast<int>(g.size()) - 1;
        if (expected_deg >= 0 && deg > expected_deg) continue;  // unlucky prime
        if (expected_deg < 0 || deg < expected_deg) {
            expected_deg = deg;
            crt.assign(g.size(), Integer(0));
            modulus = 1;
        }
        for (std::size_t i = 0; i < g.size(); ++i)
            crt_update(crt[i], modulus, g[i], p);
        modulus *= Integer(p);

        std::vector<Rational> cand(crt.size());
        bool ok = true;
        for (std::size_t i = 0; i < crt.size() && ok; ++i) {
            auto r = rational_reconstruct(crt[i], modulus);
            if (!r) ok = false; else cand[i] = *r;
        }
        if (!ok) continue;
        QPoly candidate(std::move(cand));
        if (candidate.degree() != expected_deg) continue;
        if (divides(a, candidate) && divides(b, candidate)) return candidate;
    }
    return gcd_detail::gcd_euclid_reference(a, b);
}

inline QuadPoly gcd(const QuadPoly& a, const QuadPoly& b) {
    using namespace gcd_detail;
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return QuadPoly::one();

    // Locate the defining constant; if every coefficient is rational the
    // problem lives over Q.
    Rational d(0);
    bool has_radical = false;
    for (const auto* poly : {&a, &b}) {
        for (const auto& c : poly->coeffs())
            if (!c.is_rational()) { d = c.defining(); has_radical = true; break; }
        if (has_radical) break;
    }
    if (!has_radical) {
        std::vector<Rational> ra(a.coeffs().size()), rb(b.coeffs().size());
        for (std::size_t i = 0; i < ra.size(); ++i) ra[i] = a.coeffs()[i].rational_part();
        for (std::size_t i = 0; i < rb.size(); ++i) rb[i] = b.coeffs()[i].rational_part();
        const QPoly g = gcd(QPoly(std::move(ra)), QPoly(std::move(rb)));
        std::vector<Quad> out(g.coeffs().begin(), g.coeffs().end());
        return QuadPoly(std::move(out));
    }

    std::size_t prime_idx = 0;
    int expected_deg = -1;
    std::vector<std::pair<Integer, Integer>> crt;
    Integer modulus = 1;

    for (int attempt = 0; attempt < 64; ++attempt) {
        const std::uint64_t p = nth_prime(prime_idx++);
        const Fp base(p);
        auto dbar = base.reduce(d);
        if (!dbar || !is_nonresidue(*dbar, p)) continue;
        const Fp2 f(p, *dbar);
        auto fa = reduce_poly(f, a);
        auto fb = reduce_poly(f, b);
        if (!fa || !fb) continue;
        auto g = fp_gcd(f, std::move(*fa), std::move(*fb));
        if (g.size() == 1) return QuadPoly::one();
        const int deg = static_cast<int>(g.size()) - 1;
        if (expected_deg >= 0 && deg > expected_deg) continue;
        if (expected_deg < 0 || deg < expected_deg) {
            expected_deg = deg;
            crt.assign(g.size(), std::make_pair(Integer(0), Integer(0)));
            modulus = 1;
        }
        for (std::size_t i = 0; i < g.size(); ++i) {
            crt_update(crt[i].first, modulus, g[i].x, p);
            crt_update(crt[i].second, modulus, g[i].y, p);
        }
        modulus *= Integer(p);

        std::vector<Quad> cand(crt.size());
        bool ok = true;
        for (std::size_t i = 0; i < crt.size() && ok; ++i) {
            auto x = rational_reconstruct(crt[i].first, modulus);
            auto y = rational_reconstruct(crt[i].second, modulus);
            if (!x || !y) ok = false; else cand[i] = Quad(*x, *y, d);
        }
        if (!ok) continue;
        QuadPoly candidate(std::move(cand));
        if (candidate.degree() != expected_deg) continue;
        if (divides(a, candidate) && divides(b, candidate)) return candidate;
    }
    return gcd_detail::gcd_euclid_reference(a, b);
}

}  // namespace mayachain
