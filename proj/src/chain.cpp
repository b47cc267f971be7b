#include "mayachain/chain.hpp"

#include "mayachain/pseudowronskian.hpp"

namespace mayachain {

namespace {

IdentityCheck check_zero(std::string name, const QRatFunc& residual) {
    IdentityCheck c;
    c.name = std::move(name);
    c.pass = residual.is_zero();
    if (!c.pass) c.residual_num = residual.num().str();
    return c;
}

}  // namespace

QRatFunc potential(const MayaDiagram& m) {
    const QPoly h = pseudo_wronskian(m).poly;
    const QRatFunc zsq(QPoly::monomial(2, Rational(1)));
    const QRatFunc shift(QPoly(Rational(2 * m.index())));
    return zsq - Rational(2) * log_derivative(h).derivative() + shift;
}

ChainSolution chain_solution(const MayaCycle& cycle) {
    const int p = cycle.p();
    ChainSolution sol;
    sol.cycle = cycle;
    sol.a = cycle.a;
    sol.delta = 2 * cycle.k;

    std::vector<QRatFunc> logd;
    logd.reserve(p + 1);
    for (const auto& m : cycle.diagrams) logd.push_back(log_derivative(pseudo_wronskian(m).poly));

    const QRatFunc z = QRatFunc::var();
    sol.w.reserve(p);
    for (int i = 0; i < p; ++i)
        sol.w.push_back(Rational(cycle.signs[i]) * z + logd[i + 1] - logd[i]);

    sol.potentials.reserve(p + 1);
    for (const auto& m : cycle.diagrams) sol.potentials.push_back(potential(m));
    return sol;
}

VerificationReport verify_chain_equations(const std::vector<QRatFunc>& w,
                                          const std::vector<int>& a, int delta) {
    const int p = static_cast<int>(w.size());
    VerificationReport report;

    for (int i = 0; i < p; ++i) {
        const QRatFunc& wi = w[i];
        const QRatFunc& wn = w[(i + 1) % p];
        QRatFunc lhs = (wi + wn).derivative() + wn * wn - wi * wi - QRatFunc(Rational(a[i]));
        report.checks.push_back(check_zero("chain[" + std::to_string(i) + "]", lhs));
    }

    int suma = delta;
    for (int ai : a) suma += ai;
    IdentityCheck sa;
    sa.name = "sum_a";
    sa.pass = suma == 0;
    if (!sa.pass) sa.residual_num = "[" + std::to_string(suma) + "]";
    report.checks.push_back(std::move(sa));

    QRatFunc sumw;
    for (const auto& wi : w) sumw += wi;
    sumw += make_rational(delta, 2) * QRatFunc::var();
    report.checks.push_back(check_zero("first_integral", sumw));

    return report;
}

VerificationReport verify_chain(const ChainSolution& sol) {
    const int p = static_cast<int>(sol.w.size());
    VerificationReport report = verify_chain_equations(sol.w, sol.a, sol.delta);

    for (int i = 0; i < p; ++i) {
        const QRatFunc& wi = sol.w[i];
        const QRatFunc lambda{Rational(sol.cycle.lambdas[i])};
        QRatFunc ra = wi.derivative() + wi * wi - sol.potentials[i] + lambda;
        QRatFunc rb = -wi.derivative() + wi * wi - sol.potentials[i + 1] + lambda;
        report.checks.push_back(check_zero("riccati_a[" + std::to_string(i) + "]", ra));
        report.checks.push_back(check_zero("riccati_b[" + std::to_string(i) + "]", rb));
    }

    for (int i = 0; i < p; ++i) {
        QRatFunc d = sol.potentials[i + 1] - sol.potentials[i] + Rational(2) * sol.w[i].derivative();
        report.checks.push_back(check_zero("darboux[" + std::to_string(i) + "]", d));
    }

    return report;
}

VerificationReport verify_eigenfunction(const MayaDiagram& m, int site) {
    const int eps = m.contains(site) ? +1 : -1;
    const MayaDiagram flipped = m.flip(site);
    const QRatFunc u = Rational(eps) * QRatFunc::var() +
                       log_derivative(pseudo_wronskian(flipped).poly) -
                       log_derivative(pseudo_wronskian(m).poly);
    const QRatFunc residual =
        -(u.derivative() + u * u) + potential(m) - QRatFunc(Rational(2 * site + 1));
    VerificationReport report;
    report.checks.push_back(
        check_zero("eigenfunction[site=" + std::to_string(site) + "]", residual));
    return report;
}

}  // namespace mayachain
