#include "mayachain/serialize.hpp"

#include <stdexcept>

namespace mayachain {

namespace {

Json qpoly_to_json(const QPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

Json quadpoly_to_json(const QuadPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(Json::array({to_string(c.rational_part()), to_string(c.radical_part())}));
    return arr;
}

QPoly qpoly_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(rational_from_string(c.get<std::string>()));
    return QPoly(std::move(coeffs));
}

QuadPoly quadpoly_from_json(const Json& j, const Rational& d) {
    std::vector<Quad> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
        if (!c.is_array() || c.size() != 2)
            throw std::invalid_argument("quadpoly_from_json: coefficient must be a pair");
        coeffs.push_back(Quad(rational_from_string(c[0].get<std::string>()),
                              rational_from_string(c[1].get<std::string>()), d));
    }
    return QuadPoly(std::move(coeffs));
}

}  // namespace

Json cycle_to_json(const MayaCycle& cycle) {
    Json j;
    j["k"] = cycle.k;
    j["signature"] = cycle.signature.parts;
    Json blocks = Json::array();
    for (const auto& g : cycle.blocks.blocks) blocks.push_back(g);
    j["blocks"] = blocks;
    j["perm"] = cycle.perm;
    j["flip_sites"] = cycle.flip_sites;
    j["signs"] = cycle.signs;
    j["lambdas"] = cycle.lambdas;
    j["a"] = cycle.a;
    Json diagrams = Json::array();
    for (const auto& m : cycle.diagrams) diagrams.push_back(m.block_coordinates());
    j["diagrams"] = diagrams;
    return j;
}

Json chain_to_json(const ChainSolution& sol) {
    Json j;
    j["delta"] = sol.delta;
    j["a"] = sol.a;
    Json w = Json::array();
    for (const auto& wi : sol.w)
        w.push_back(Json{{"num", qpoly_to_json(wi.num())}, {"den", qpoly_to_json(wi.den())}});
    j["w"] = w;
    return j;
}

Json painleve_to_json(const PainleveSolution& ps) {
    Json j;
    j["n"] = ps.n;
    Json alpha = Json::array();
    for (const auto& a : ps.alpha) alpha.push_back(to_string(a));
    j["alpha"] = alpha;
    j["c_squared"] = to_string(ps.c_squared);
    Json f = Json::array();
    for (const auto& fi : ps.f)
        f.push_back(Json{{"num", quadpoly_to_json(fi.num())}, {"den", quadpoly_to_json(fi.den())}});
    j["f"] = f;
    return j;
}

Json report_to_json(const VerificationReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.pass) e["residual_num"] = c.residual_num;
        checks.push_back(e);
    }
    Json j;
    j["all_pass"] = report.all_pass();
    j["checks"] = checks;
    return j;
}

Json solution_to_json(const ChainSolution& sol, const PainleveSolution& ps) {
    Json j;
    j["cycle"] = cycle_to_json(sol.cycle);
    j["chain"] = chain_to_json(sol);
    j["painleve"] = painleve_to_json(ps);
    return j;
}

PainleveSolution painleve_from_json(const Json& j) {
    PainleveSolution ps;
    ps.n = j.at("n").get<int>();
    ps.c_squared = rational_from_string(j.at("c_squared").get<std::string>());
    for (const auto& a : j.at("alpha")) ps.alpha.push_back(rational_from_string(a.get<std::string>()));
    for (const auto& f : j.at("f"))
        ps.f.push_back(QuadRatFunc(quadpoly_from_json(f.at("num"), ps.c_squared),
                                   quadpoly_from_json(f.at("den"), ps.c_squared)));
    const std::size_t p = 2 * ps.n + 1;
    if (ps.f.size() != p || ps.alpha.size() != p)
        throw std::invalid_argument("painleve_from_json: tuple sizes do not match n");
    return ps;
}

VerificationReport verify_solution_json(const Json& j) {
    VerificationReport combined;

    if (j.contains("painleve")) {
        const PainleveSolution ps = painleve_from_json(j.at("painleve"));
        VerificationReport r = verify_painleve(ps);
        for (auto& c : r.checks) {
            c.name = "painleve." + c.name;
            combined.checks.push_back(std::move(c));
        }
    }

    std::vector<QRatFunc> stored_w;
    if (j.contains("chain")) {
        const Json& cj = j.at("chain");
        const int delta = cj.at("delta").get<int>();
        std::vector<int> a = cj.at("a").get<std::vector<int>>();
        for (const auto& wj : cj.at("w"))
            stored_w.push_back(QRatFunc(qpoly_from_json(wj.at("num")), qpoly_from_json(wj.at("den"))));
        VerificationReport r = verify_chain_equations(stored_w, a, delta);
        for (auto& c : r.checks) {
            c.name = "chain." + c.name;
            combined.checks.push_back(std::move(c));
        }
    }

    if (j.contains("cycle") && j.at("cycle").contains("blocks") && j.at("cycle").contains("perm")) {
        const Json& cj = j.at("cycle");
        const KBlockCoordinates blocks(cj.at("blocks").get<std::vector<std::vector<int>>>());
        const std::vector<int> perm = cj.at("perm").get<std::vector<int>>();
        const MayaCycle cycle = build_cycle(blocks, perm);
        const ChainSolution sol = chain_solution(cycle);
        VerificationReport r = verify_chain(sol);
        for (auto& c : r.checks) {
            c.name = "rebuild." + c.name;
            combined.checks.push_back(std::move(c));
        }
        if (!stored_w.empty()) {
            IdentityCheck c;
            c.name = "rebuild.stored_w_matches";
            c.pass = stored_w == sol.w;
            combined.checks.push_back(std::move(c));
        }
        if (j.contains("painleve")) {
            const PainleveSolution recomputed = to_painleve(sol);
            const PainleveSolution stored = painleve_from_json(j.at("painleve"));
            IdentityCheck c;
            c.name = "rebuild.stored_painleve_matches";
            c.pass = recomputed.alpha == stored.alpha && recomputed.f == stored.f &&
                     recomputed.c_squared == stored.c_squared;
            combined.checks.push_back(std::move(c));
        }
    }

    if (combined.checks.empty())
        throw std::invalid_argument("verify_solution_json: no verifiable sections found");
    return combined;
}

}  // namespace mayachain
