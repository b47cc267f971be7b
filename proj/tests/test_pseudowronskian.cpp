#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mayachain/hermite.hpp"
#include "mayachain/pseudowronskian.hpp"
#include "test_util.hpp"

using namespace mayachain;

namespace {

/// Oracle built from the Wronskian-of-functions definition with the
/// exponential prefactors cleared symbolically: a column for e^{z^2} theta_s
/// turns D into (D + 2z) on the polynomial part, a column for H_t keeps plain
/// derivatives. Evaluated by cofactor expansion.
QPoly pseudo_oracle(const MayaDiagram& m) {
    const FrobeniusSymbol f = m.frobenius();
    const int size = static_cast<int>(f.s.size() + f.t.size());
    if (size == 0) return QPoly::one();
    const QPoly two_z = QPoly::monomial(1, Rational(2));

    PolyMatrix mat(size, std::vector<QPoly>(size));
    int row = 0;
    for (int s : f.s) {
        QPoly v = conjugate_hermite(s);
        for (int j = 0; j < size; ++j) {
            mat[row][j] = v;
            v = v.derivative() + two_z * v;
        }
        ++row;
    }
    for (std::size_t i = f.t.size(); i-- > 0;) {
        QPoly v = hermite(f.t[i]);
        for (int j = 0; j < size; ++j) {
            mat[row][j] = v;
            v = v.derivative();
        }
        ++row;
    }

    // cofactor expansion along the first column
    struct Rec {
        static QPoly det(const PolyMatrix& a) {
            const std::size_t n = a.size();
            if (n == 1) return a[0][0];
            QPoly out;
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i][0].is_zero()) continue;
                PolyMatrix minor(n - 1, std::vector<QPoly>(n - 1));
                std::size_t rr = 0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == i) continue;
                    for (std::size_t c = 1; c < n; ++c) minor[rr][c - 1] = a[r][c];
                    ++rr;
                }
                const QPoly term = a[i][0] * det(minor);
                out = (i % 2 == 0) ? out + term : out - term;
            }
            return out;
        }
    };
    return Rec::det(mat);
}

}  // namespace

TEST_CASE("trivial diagram") {
    const PseudoWronskian pw = pseudo_wronskian(MayaDiagram::trivial());
    CHECK(pw.poly == QPoly::one());
    CHECK(pw.r == 0);
    CHECK(pw.q == 0);
    CHECK(normalized_pseudo_wronskian(MayaDiagram::trivial()) == QPoly::one());
}

TEST_CASE("standard form gives a plain Hermite Wronskian") {
    const MayaDiagram m0 = MayaDiagram::xi({0, 2, 5, 6, 7});
    CHECK(m0.filled_nonneg() == std::vector<int>{2, 3, 4, 6});
    const PseudoWronskian pw = pseudo_wronskian(m0);
    CHECK(pw.r == 0);
    CHECK(pw.q == 4);
    CHECK(pw.poly == wronskian({hermite(2), hermite(3), hermite(4), hermite(6)}));

    std::mt19937 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const MayaDiagram m = testutil::random_maya(rng, 6).standard_form().first;
        std::vector<QPoly> fs;
        for (int t : m.filled_nonneg()) fs.push_back(hermite(t));
        if (fs.empty()) continue;
        CHECK(pseudo_wronskian(m).poly == wronskian(fs));
    }
}

TEST_CASE("mixed determinant matches the cleared-prefactor oracle") {
    // one conjugate row: the shift of Xi(0,1,4) by -1, Frobenius (0 | 2,1,0)
    const MayaDiagram m = MayaDiagram::xi({0, 1, 4}).shifted(-1);
    const PseudoWronskian pw = pseudo_wronskian(m);
    CHECK(pw.r == 1);
    CHECK(pw.q == 3);
    CHECK(pw.poly == pseudo_oracle(m));

    // two conjugate rows, no derivative rows
    const MayaDiagram m2 = MayaDiagram::xi({-2});
    CHECK(pseudo_wronskian(m2).poly == pseudo_oracle(m2));

    std::mt19937 rng(67);
    for (int trial = 0; trial < 15; ++trial) {
        const MayaDiagram r = testutil::random_maya(rng, 3);
        CHECK(pseudo_wronskian(r).poly == pseudo_oracle(r));
    }
}

TEST_CASE("normalized polynomial is shift invariant") {
    // determinant sizes 3 and 4 give the same normalized polynomial
    const MayaDiagram m = MayaDiagram::xi({0, 1, 4});
    CHECK(normalized_pseudo_wronskian(m) == normalized_pseudo_wronskian(m.shifted(-1)));

    // worked rank-5 diagram, shift 3
    const MayaDiagram ex52 = MayaDiagram::xi({-2, -1, 0, 2, 10, 11, 12, 16, 17});
    CHECK(normalized_pseudo_wronskian(ex52) == normalized_pseudo_wronskian(ex52.shifted(3)));

    std::mt19937 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        const MayaDiagram r = testutil::random_maya(rng, 5);
        const QPoly base = normalized_pseudo_wronskian(r);
        for (int k : {-2, -1, 1, 2, 3})
            CHECK(base == normalized_pseudo_wronskian(r.shifted(k)));
    }
}

TEST_CASE("normalized degree does not depend on the representative") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 10; ++trial) {
        const MayaDiagram r = testutil::random_maya(rng, 5);
        const int deg = normalized_pseudo_wronskian(r).degree();
        CHECK(normalized_pseudo_wronskian(r.shifted(2)).degree() == deg);
        CHECK(normalized_pseudo_wronskian(r.standard_form().first).degree() == deg);
    }
}

TEST_CASE("labels") {
    CHECK(wronskian_label(MayaDiagram::trivial()) == "1");
    CHECK(wronskian_label(MayaDiagram::xi({0, 2, 5, 6, 7})) == "Wr(H_2,H_3,H_4,H_6)");
    CHECK(wronskian_label(MayaDiagram::xi({0, 1, 4}).shifted(-1)) == "pW(th_0 | H_0,H_1,H_2)");
}
