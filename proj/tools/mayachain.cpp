#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mayachain/atlas.hpp"
#include "mayachain/painleve.hpp"
#include "mayachain/pseudowronskian.hpp"
#include "mayachain/serialize.hpp"

namespace mc = mayachain;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::vector<int>> parse_blocks(const std::string& text) {
    std::vector<std::vector<int>> groups;
    std::stringstream outer(text);
    std::string group;
    while (std::getline(outer, group, '|')) {
        std::vector<int> entries;
        std::stringstream inner(group);
        std::string tok;
        while (std::getline(inner, tok, ',')) entries.push_back(std::stoi(tok));
        groups.push_back(std::move(entries));
    }
    return groups;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

/// Normalized diagram count for one signature: first group pinned to start at
/// 0, all entries strictly increasing within their group and bounded by B.
std::uint64_t count_diagrams(const mc::Signature& sig, int bound) {
    std::uint64_t total = binomial(bound, sig.parts[0] - 1);
    for (std::size_t i = 1; i < sig.parts.size(); ++i)
        total *= binomial(bound + 1, sig.parts[i]);
    return total;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

int run_enumerate(int p, int k, int max_entry) {
    const std::vector<int> shifts = mc::admissible_shifts(p);
    if (k != 0 && std::find(shifts.begin(), shifts.end(), k) == shifts.end()) {
        std::cerr << "error: no period-" << p << " cycles with shift " << k << "\n";
        return kExitUsage;
    }
    std::cout << "p = " << p << "\n";
    for (int shift : shifts) {
        if (k != 0 && shift != k) continue;
        std::cout << "k = " << shift << ":";
        for (const auto& sig : mc::enumerate_signatures(p, shift)) {
            std::cout << " " << sig.str();
            if (max_entry > 0) std::cout << "[" << count_diagrams(sig, max_entry) << "]";
        }
        std::cout << "\n";
    }
    return 0;
}

/// Rows of the cycle as filled/empty boxes over a common window, one line per
/// diagram, written to stderr so stdout stays valid JSON.
void render_cycle(const mc::MayaCycle& cycle) {
    int lo = 0, hi = 0;
    for (const auto& m : cycle.diagrams) {
        lo = std::min(lo, m.support_lo() - 1);
        hi = std::max(hi, m.support_hi() + 1);
    }
    for (std::size_t i = 0; i < cycle.diagrams.size(); ++i) {
        std::cerr << "M_" << i << "  " << cycle.diagrams[i].render(lo, hi);
        if (i < cycle.flip_sites.size())
            std::cerr << "   flip " << cycle.flip_sites[i];
        std::cerr << "\n";
    }
}

int run_solve(const std::vector<int>& sig_parts, const std::vector<int>& n,
              const std::vector<int>& perm, bool allow_any_perm, bool do_verify,
              bool do_render, const std::string& out_path) {
    const mc::Signature sig(sig_parts);
    if (!sig.valid()) {
        std::cerr << "error: signature parts must be odd positive integers\n";
        return kExitUsage;
    }
    if (!allow_any_perm && (perm.empty() || perm.back() != 0)) {
        std::cerr << "error: normalized permutations end in 0 (use --allow-any-perm to override)\n";
        return kExitUsage;
    }
    const mc::KBlockCoordinates blocks = mc::signature_blocks(sig, n);
    const mc::MayaCycle cycle = mc::build_cycle(blocks, perm);
    if (do_render) render_cycle(cycle);
    const mc::ChainSolution chain = mc::chain_solution(cycle);
    const mc::PainleveSolution ps = mc::to_painleve(chain);

    mc::Json j = mc::solution_to_json(chain, ps);
    bool ok = true;
    if (do_verify) {
        const mc::VerificationReport rc = mc::verify_chain(chain);
        const mc::VerificationReport rp = mc::verify_painleve(ps);
        j["verification"] = mc::Json{{"chain", mc::report_to_json(rc)},
                                     {"painleve", mc::report_to_json(rp)}};
        ok = rc.all_pass() && rp.all_pass();
    }
    write_text(out_path, j.dump(2) + "\n");
    return ok ? 0 : kExitVerifyFailed;
}

int run_wronskian(const std::string& blocks_text, const std::vector<int>& sig_parts,
                  const std::vector<int>& n, bool do_render) {
    mc::MayaDiagram m;
    if (!blocks_text.empty()) {
        m = mc::KBlockCoordinates(parse_blocks(blocks_text)).diagram();
    } else {
        m = mc::a4_blocks(mc::Signature(sig_parts), n).diagram();
    }
    if (do_render)
        std::cerr << m.render(m.support_lo() - 1, m.support_hi() + 1) << "\n";
    const mc::PseudoWronskian pw = mc::pseudo_wronskian(m);
    std::cout << mc::wronskian_label(m) << "\n";
    std::cout << pw.poly.str() << "\n";
    return 0;
}

int run_roots(const std::vector<int>& sig_parts, const std::vector<int>& n, int precision,
              const std::string& format, const std::string& out_path) {
    mc::WronskianFamilySpec spec;
    spec.signature = mc::Signature(sig_parts);
    if (n.size() != 4) {
        std::cerr << "error: --n must have exactly 4 entries\n";
        return kExitUsage;
    }
    std::copy(n.begin(), n.end(), spec.n.begin());
    const mc::QPoly poly = mc::family_polynomial(spec);
    if (poly.degree() < 1) {
        std::cerr << "error: family polynomial is constant, no roots to find\n";
        return kExitUsage;
    }
    const mc::RootSet rs = mc::find_roots(poly, precision);
    int failed = 0;
    for (bool c : rs.converged)
        if (!c) ++failed;
    if (failed > 0)
        std::cerr << "warning: " << failed << " roots did not converge at " << rs.precision_bits
                  << " bits\n";
    mc::emit(rs, format, out_path);
    return 0;
}

int run_verify(const std::string& in_path) {
    std::ifstream in(in_path);
    if (!in) {
        std::cerr << "error: cannot open " << in_path << "\n";
        return kExitUsage;
    }
    mc::Json j = mc::Json::parse(in);
    const mc::VerificationReport report = mc::verify_solution_json(j);
    std::cout << mc::report_to_json(report).dump(2) << "\n";
    return report.all_pass() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Maya-cycle solutions of odd dressing chains and their symmetric "
                 "Painleve systems, with Hermite Wronskian zero maps"};
    app.require_subcommand(1);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "List admissible shifts and signatures");
    int p = 0, k = 0, max_entry = 0;
    cmd_enum->add_option("--p", p, "Cycle period (odd)")->required();
    cmd_enum->add_option("--k", k, "Restrict to one shift");
    cmd_enum->add_option("--max-entry", max_entry,
                         "Also count normalized diagrams with block entries <= bound");

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "Build and emit one rational solution");
    std::vector<int> sig_parts, n_tuple, perm;
    bool allow_any_perm = false, do_verify = false, solve_render = false;
    std::string out_path = "-";
    cmd_solve->add_option("--sig", sig_parts, "Signature, e.g. 5 or 1,1,3")
        ->required()
        ->delimiter(',');
    cmd_solve->add_option("--n", n_tuple, "p-1 non-negative increments")->required()->delimiter(',');
    cmd_solve->add_option("--perm", perm, "0-based permutation of the flip sequence")
        ->required()
        ->delimiter(',');
    cmd_solve->add_flag("--allow-any-perm", allow_any_perm, "Accept permutations not ending in 0");
    cmd_solve->add_flag("--verify", do_verify, "Verify all identities; non-zero exit on failure");
    cmd_solve->add_flag("--render", solve_render, "Draw the diagram cycle on stderr");
    cmd_solve->add_option("--out", out_path, "Output file (default stdout)");

    // wronskian
    auto* cmd_wr = app.add_subcommand("wronskian", "Print the determinant label and coefficients");
    std::string blocks_text;
    std::vector<int> wr_sig, wr_n;
    bool wr_render = false;
    cmd_wr->add_option("--blocks", blocks_text, "Block coordinates, groups separated by '|'");
    cmd_wr->add_option("--sig", wr_sig, "Signature (with --n)")->delimiter(',');
    cmd_wr->add_option("--n", wr_n, "4-tuple (with --sig)")->delimiter(',');
    cmd_wr->add_flag("--render", wr_render, "Draw the diagram on stderr");

    // roots
    auto* cmd_roots = app.add_subcommand("roots", "Map the zeros of a family polynomial");
    std::vector<int> rt_sig, rt_n;
    int precision = 128;
    std::string format = "csv", rt_out = "-";
    cmd_roots->add_option("--sig", rt_sig, "Signature")->required()->delimiter(',');
    cmd_roots->add_option("--n", rt_n, "4-tuple")->required()->delimiter(',');
    cmd_roots->add_option("--precision", precision, "Working precision in bits (default 128)");
    cmd_roots->add_option("--format", format, "csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    cmd_roots->add_option("--out", rt_out, "Output file (default stdout)");

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "Re-check a stored solution JSON");
    std::string in_path;
    cmd_ver->add_option("--in", in_path, "Solution file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_enum->parsed()) return run_enumerate(p, k, max_entry);
        if (cmd_solve->parsed())
            return run_solve(sig_parts, n_tuple, perm, allow_any_perm, do_verify, solve_render,
                             out_path);
        if (cmd_wr->parsed()) {
            if (blocks_text.empty() && (wr_sig.empty() || wr_n.empty())) {
                std::cerr << "error: need --blocks or both --sig and --n\n";
                return kExitUsage;
            }
            return run_wronskian(blocks_text, wr_sig, wr_n, wr_render);
        }
        if (cmd_roots->parsed()) return run_roots(rt_sig, rt_n, precision, format, rt_out);
        if (cmd_ver->parsed()) return run_verify(in_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mc::CycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
