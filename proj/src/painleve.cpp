#include "mayachain/painleve.hpp"

namespace mayachain {

namespace {

IdentityCheck check_zero(std::string name, const QuadRatFunc& residual) {
    IdentityCheck c;
    c.name = std::move(name);
    c.pass = residual.is_zero();
    if (!c.pass) c.residual_num = residual.num().str();
    return c;
}

}  // namespace

PainleveSolution to_painleve(const ChainSolution& sol) {
    const int p = static_cast<int>(sol.w.size());
    if (p % 2 == 0) throw std::invalid_argument("to_painleve: period must be odd");
    if (sol.delta == 0) throw std::invalid_argument("to_painleve: shift must be non-zero");

    PainleveSolution ps;
    ps.n = (p - 1) / 2;
    ps.c_squared = make_rational(-1, sol.delta);
    const Quad c = Quad::generator(ps.c_squared);

    ps.f.reserve(p);
    for (int i = 0; i < p; ++i) {
        const QRatFunc sum = sol.w[i] + sol.w[(i + 1) % p];
        ps.f.push_back(QuadRatFunc(Quad(c)) * scale_argument(sum, c));
    }
    ps.alpha.reserve(p);
    for (int i = 0; i < p; ++i) ps.alpha.push_back(ps.c_squared * Rational(sol.a[i]));
    return ps;
}

VerificationReport verify_painleve(const PainleveSolution& ps) {
    const int p = 2 * ps.n + 1;
    VerificationReport report;

    for (int i = 0; i < p; ++i) {
        QuadRatFunc bracket;
        for (int j = 1; j <= ps.n; ++j) {
            bracket += ps.f[(i + 2 * j - 1) % p];
            bracket -= ps.f[(i + 2 * j) % p];
        }
        QuadRatFunc residual =
            ps.f[i].derivative() + ps.f[i] * bracket - QuadRatFunc(Quad(ps.alpha[i]));
        report.checks.push_back(check_zero("eq[" + std::to_string(i) + "]", residual));
    }

    QuadRatFunc sumf;
    for (const auto& fi : ps.f) sumf += fi;
    sumf -= QuadRatFunc::var();
    report.checks.push_back(check_zero("sum_f", sumf));

    Rational suma(0);
    for (const auto& ai : ps.alpha) suma += ai;
    IdentityCheck sa;
    sa.name = "sum_alpha";
    sa.pass = suma == Rational(1);
    if (!sa.pass) sa.residual_num = "[" + to_string(suma - Rational(1)) + "]";
    report.checks.push_back(std::move(sa));

    return report;
}

PainleveSolution a4_solution(const Signature& sig, const std::vector<int>& n,
                             const std::vector<int>& perm) {
    const KBlockCoordinates blocks = a4_blocks(sig, n);
    const MayaCycle cycle = build_cycle(blocks, perm);
    return to_painleve(chain_solution(cycle));
}

}  // namespace mayachain
