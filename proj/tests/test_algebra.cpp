#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mayachain/hermite.hpp"
#include "mayachain/poly.hpp"
#include "mayachain/quadext.hpp"
#include "mayachain/ratfunc.hpp"
#include "test_util.hpp"

using namespace mayachain;

TEST_CASE("rational helpers") {
    CHECK(rational_from_string("-4/3") == make_rational(-4, 3));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK_THROWS(rational_from_string("1/0"));
}

TEST_CASE("quadratic extension arithmetic") {
    const Rational d = make_rational(-1, 2);  // c^2 = -1/2
    const Quad c = Quad::generator(d);

    CHECK(c * c == Quad(d));
    CHECK((c + c) == Quad(Rational(0), Rational(2), d));

    const Quad x(Rational(3), make_rational(1, 2), d);
    const Quad y(make_rational(-2, 5), Rational(4), d);
    CHECK(x * y.inverse() * y == x);
    CHECK((x / y) * y == x);
    CHECK(x - x == Quad(0));
    CHECK(x.conjugate() * x == Quad(x.norm()));

    // mixing different extension constants is rejected
    const Quad other = Quad::generator(make_rational(-1, 6));
    CHECK_THROWS(void(c * other));
    // but plain rationals are compatible with anything
    CHECK(Quad(2) * c == c + c);
}

TEST_CASE("quadratic extension restricted to b=0 matches Rational exactly") {
    std::mt19937 rng(7);
    const Rational d = make_rational(-1, 10);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = testutil::random_rational(rng);
        Rational b = testutil::random_rational(rng);
        if (is_zero(b)) b = Rational(1);
        const Quad qa{a}, qb{b};
        CHECK((qa + qb).as_rational() == a + b);
        CHECK((qa * qb).as_rational() == a * b);
        CHECK((qa / qb).as_rational() == a / b);
        CHECK((qa - qb).as_rational() == a - b);
    }
}

TEST_CASE("polynomial ring identities over Q") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const QPoly a = testutil::random_qpoly(rng);
        const QPoly b = testutil::random_qpoly(rng);
        const QPoly c = testutil::random_qpoly(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        CHECK(a + b == b + a);
        if (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("polynomial ring identities over Q(c)") {
    std::mt19937 rng(13);
    const Rational d = make_rational(-1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const QuadPoly a = testutil::random_quadpoly(rng, d);
        const QuadPoly b = testutil::random_quadpoly(rng, d);
        const QuadPoly c = testutil::random_quadpoly(rng, d);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        if (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
        }
    }
}

TEST_CASE("degree of products adds") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        QPoly a = testutil::random_qpoly(rng, 30);
        QPoly b = testutil::random_qpoly(rng, 40);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("large products match a plain convolution") {
    // sizes beyond the split threshold of operator*
    std::mt19937 rng(37);
    for (int trial = 0; trial < 6; ++trial) {
        const QPoly a = testutil::random_qpoly(rng, 70 + trial * 31);
        const QPoly b = testutil::random_qpoly(rng, 120);
        if (a.is_zero() || b.is_zero()) continue;
        std::vector<Rational> conv(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs().size(); ++i)
            for (std::size_t j = 0; j < b.coeffs().size(); ++j)
                conv[i + j] += a.coeffs()[i] * b.coeffs()[j];
        CHECK(a * b == QPoly(std::move(conv)));
    }
}

TEST_CASE("gcd over Q agrees with the Euclidean reference") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        QPoly g = testutil::random_qpoly(rng, 4);
        QPoly a = testutil::random_qpoly(rng, 5);
        QPoly b = testutil::random_qpoly(rng, 5);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        const QPoly x = g * a;
        const QPoly y = g * b;
        const QPoly fast = gcd(x, y);
        const QPoly slow = gcd_detail::gcd_euclid_reference(x, y);
        CHECK(fast == slow);
        CHECK(divmod(x, fast).second.is_zero());
        CHECK(divmod(y, fast).second.is_zero());
    }
}

TEST_CASE("gcd over Q(c) agrees with the Euclidean reference") {
    std::mt19937 rng(23);
    const Rational d = make_rational(-1, 2);
    for (int trial = 0; trial < 25; ++trial) {
        QuadPoly g = testutil::random_quadpoly(rng, d, 3);
        QuadPoly a = testutil::random_quadpoly(rng, d, 4);
        QuadPoly b = testutil::random_quadpoly(rng, d, 4);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        const QuadPoly x = g * a;
        const QuadPoly y = g * b;
        const QuadPoly fast = gcd(x, y);
        const QuadPoly slow = gcd_detail::gcd_euclid_reference(x, y);
        CHECK(fast == slow);
    }
}

TEST_CASE("gcd with huge coefficients needs several prime images") {
    std::mt19937 rng(31);
    auto big_rational = [&rng]() {
        Integer num(0), den(0);
        for (int limb = 0; limb < 7; ++limb) {
            num = (num << 30) + static_cast<unsigned long>(rng() & 0x3fffffff);
            den = (den << 30) + static_cast<unsigned long>(rng() & 0x3fffffff);
        }
        return make_rational(rng() % 2 ? num : -num, den + 1);
    };
    auto big_poly = [&](int deg) {
        std::vector<Rational> c(deg + 1);
        for (auto& x : c) x = big_rational();
        return QPoly(std::move(c));
    };
    for (int trial = 0; trial < 5; ++trial) {
        const QPoly g = big_poly(4);
        const QPoly x = g * big_poly(3);
        const QPoly y = g * big_poly(3);
        const QPoly fast = gcd(x, y);
        CHECK(fast == gcd_detail::gcd_euclid_reference(x, y));
        CHECK(divmod(x, fast).second.is_zero());
        CHECK(divmod(y, fast).second.is_zero());
    }
}

TEST_CASE("known gcds") {
    const QPoly z = QPoly::var();
    const QPoly one = QPoly::one();
    CHECK(gcd(z * z - one, z - one) == z - one);
    CHECK(gcd(z * z + one, z - one) == one);
    CHECK(gcd(QPoly(), z) == z);  // gcd with zero
}

TEST_CASE("rational function normal form") {
    const QPoly z = QPoly::var();
    const QPoly one = QPoly::one();

    // (z^2 - 1)/(z - 1) collapses to z + 1
    const QRatFunc f(z * z - one, z - one);
    CHECK(f == QRatFunc(z + one));
    CHECK(f.is_polynomial());

    // d/dz (1/z) = -1/z^2
    const QRatFunc inv_z(one, z);
    CHECK(inv_z.derivative() == QRatFunc(-one, z * z));

    CHECK_THROWS(QRatFunc(one, QPoly()));
}

TEST_CASE("log derivative of H_2") {
    // H_2'/H_2 = 8z/(4z^2 - 2) = 4z/(2z^2 - 1) as rational functions
    const QRatFunc ld = log_derivative(hermite(2));
    const QPoly z = QPoly::var();
    const QRatFunc expected(Rational(4) * z, Rational(2) * z * z - QPoly::one());
    CHECK(ld == expected);
    // the canonical representative is monic in the denominator
    CHECK(ld.den().leading() == Rational(1));
}

TEST_CASE("rational function field identities") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        QPoly pa = testutil::random_qpoly(rng, 3);
        QPoly pb = testutil::random_qpoly(rng, 3);
        QPoly pc = testutil::random_qpoly(rng, 3);
        QPoly pd = testutil::random_qpoly(rng, 3);
        if (pb.is_zero() || pd.is_zero()) continue;
        const QRatFunc f(pa, pb), g(pc, pd);
        CHECK((f + g) - g == f);
        if (!g.is_zero()) CHECK((f / g) * g == f);
        // exact Leibniz rule
        CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
        CHECK((f + g).derivative() == f.derivative() + g.derivative());
    }
}

TEST_CASE("scale_argument") {
    const Rational d = make_rational(-1, 2);
    const Quad c = Quad::generator(d);
    const QPoly z = QPoly::var();

    // z -> cz
    CHECK(scale_argument(QRatFunc(z), c) ==
          QuadRatFunc(QuadPoly(std::vector<Quad>{Quad(0), c})));
    // z^2 -> c^2 z^2 = -z^2/2, a rational coefficient again
    CHECK(scale_argument(QRatFunc(z * z), c) ==
          QuadRatFunc(QuadPoly(std::vector<Quad>{Quad(0), Quad(0), Quad(d)})));
    // 4z/(2z^2-1) -> 4cz/(-z^2-1)
    const QRatFunc f(Rational(4) * z, Rational(2) * z * z - QPoly::one());
    const QuadPoly num(std::vector<Quad>{Quad(0), Quad(Rational(0), Rational(4), d)});
    const QuadPoly den(std::vector<Quad>{Quad(-1), Quad(0), Quad(-1)});
    CHECK(scale_argument(f, c) == QuadRatFunc(num, den));
    CHECK_THROWS(scale_argument(f, Quad(0)));
}

TEST_CASE("polynomial text form") {
    CHECK(hermite(4).str() == "[12, 0, -48, 0, 16]");
    CHECK(QPoly().str() == "[]");
    CHECK(QPoly(make_rational(-1, 3)).str() == "[-1/3]");
}
