#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "mayachain/quadext.hpp"
#include "mayachain/rational.hpp"

namespace mayachain {

// Word-size prime fields used by the modular polynomial gcd. Reduction of a
// rational a/b at a prime dividing b is impossible; callers treat that as a
// bad prime and move on to the next one.

namespace detail {

inline std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t x, std::uint64_t p) { return powmod(x % p, p - 2, p); }

}  // namespace detail

/// Deterministic stream of ~62-bit primes (GMP nextprime from a fixed base).
inline std::uint64_t nth_prime(std::size_t i) {
    static std::mutex mu;
    static std::vector<std::uint64_t> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.reserve(64);
    while (cache.size() <= i) {
        Integer start;
        if (cache.empty()) {
            start = Integer(1) << 62;
        } else {
            start = Integer(cache.back());
        }
        Integer p;
        mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
        cache.push_back(p.get_ui());
    }
    return cache[i];
}

/// GF(p).
struct Fp {
    std::uint64_t p;
    explicit Fp(std::uint64_t prime) : p(prime) {}

    using Elem = std::uint64_t;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem x) const { return x == 0; }
    Elem add(Elem x, Elem y) const { Elem s = x + y; return s >= p ? s - p : s; }
    Elem sub(Elem x, Elem y) const { return x >= y ? x - y : x + p - y; }
    Elem neg(Elem x) const { return x == 0 ? 0 : p - x; }
    Elem mul(Elem x, Elem y) const { return detail::mulmod(x, y, p); }
    Elem inv(Elem x) const { return detail::invmod(x, p); }

    std::optional<Elem> reduce_integer(const Integer& z) const {
        Integer m = z % Integer(p);
        if (sgn(m) < 0) m += Integer(p);
        return m.get_ui();
    }

    std::optional<Elem> reduce(const Rational& r) const {
        const auto den = reduce_integer(Integer(r.get_den()));
        if (!den || *den == 0) return std::nullopt;
        const auto num = reduce_integer(Integer(r.get_num()));
        return mul(*num, inv(*den));
    }
};

/// GF(p^2) realised as GF(p)[t]/(t^2 - d) for a non-residue d.
struct Fp2 {
    Fp base;
    std::uint64_t d;  // image of the defining constant, a quadratic non-residue

    Fp2(std::uint64_t prime, std::uint64_t dbar) : base(prime), d(dbar) {}

    struct Elem {
        std::uint64_t x = 0, y = 0;  // x + y t
        bool operator==(const Elem&) const = default;
    };

    Elem zero() const { return {}; }
    Elem one() const { return {1, 0}; }
    bool is_zero(Elem e) const { return e.x == 0 && e.y == 0; }
    Elem add(Elem a, Elem b) const { return {base.add(a.x, b.x), base.add(a.y, b.y)}; }
    Elem sub(Elem a, Elem b) const { return {base.sub(a.x, b.x), base.sub(a.y, b.y)}; }
    Elem neg(Elem a) const { return {base.neg(a.x), base.neg(a.y)}; }
    Elem mul(Elem a, Elem b) const {
        return {base.add(base.mul(a.x, b.x), base.mul(d, base.mul(a.y, b.y))),
                base.add(base.mul(a.x, b.y), base.mul(a.y, b.x))};
    }
    Elem inv(Elem a) const {
        // (x + yt)^-1 = (x - yt) / (x^2 - d y^2)
        const std::uint64_t n =
            base.sub(base.mul(a.x, a.x), base.mul(d, base.mul(a.y, a.y)));
        const std::uint64_t ni = base.inv(n);
        return {base.mul(a.x, ni), base.mul(base.neg(a.y), ni)};
    }

    std::optional<Elem> reduce(const Quad& q) const {
        const auto x = base.reduce(q.rational_part());
        const auto y = base.reduce(q.radical_part());
        if (!x || !y) return std::nullopt;
        return Elem{*x, *y};
    }
};

/// Checks whether d is a quadratic non-residue mod p (so t^2 - d is
/// irreducible and Fp2 is a field).
inline bool is_nonresidue(std::uint64_t d, std::uint64_t p) {
    if (d % p == 0) return false;
    return detail::powmod(d % p, (p - 1) / 2, p) == p - 1;
}

// --- dense polynomial Euclid over a small field -----------------------------

template <class F>
using FpPoly = std::vector<typename F::Elem>;

template <class F>
void fp_trim(const F& f, FpPoly<F>& a) {
    while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
void fp_make_monic(const F& f, FpPoly<F>& a) {
    if (a.empty()) return;
    const auto s = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, s);
}

/// In-place remainder a mod b (b non-zero).
template <class F>
void fp_rem(const F& f, FpPoly<F>& a, const FpPoly<F>& b) {
    const auto binv = f.inv(b.back());
    while (a.size() >= b.size()) {
        const auto q = f.mul(a.back(), binv);
        const std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] = f.sub(a[off + i], f.mul(q, b[i]));
        fp_trim(f, a);
        if (a.empty()) return;
    }
}

/// Monic gcd over the field f.
template <class F>
FpPoly<F> fp_gcd(const F& f, FpPoly<F> a, FpPoly<F> b) {
    fp_trim(f, a);
    fp_trim(f, b);
    while (!b.empty()) {
        fp_rem(f, a, b);
        std::swap(a, b);
    }
    fp_make_monic(f, a);
    return a;
}

}  // namespace mayachain
