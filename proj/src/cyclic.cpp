#include "mayachain/cyclic.hpp"

#include <algorithm>
#include <numeric>

namespace mayachain {

namespace {

int floordiv(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int floormod(int a, int b) { return a - floordiv(a, b) * b; }

}  // namespace

std::string Signature::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

KBlockCoordinates::KBlockCoordinates(std::vector<std::vector<int>> b) : blocks(std::move(b)) {
    if (blocks.empty()) throw std::invalid_argument("KBlockCoordinates: need at least one group");
    for (const auto& group : blocks) {
        if (group.size() % 2 == 0)
            throw std::invalid_argument("KBlockCoordinates: group lengths must be odd");
        for (std::size_t i = 1; i < group.size(); ++i)
            if (group[i] < group[i - 1])
                throw std::invalid_argument("KBlockCoordinates: groups must be non-decreasing");
    }
}

int KBlockCoordinates::period() const {
    int p = 0;
    for (const auto& g : blocks) p += static_cast<int>(g.size());
    return p;
}

Signature KBlockCoordinates::signature() const {
    std::vector<int> parts;
    parts.reserve(blocks.size());
    for (const auto& g : blocks) parts.push_back(static_cast<int>(g.size()));
    return Signature(std::move(parts));
}

MayaDiagram KBlockCoordinates::diagram() const {
    std::vector<MayaDiagram> parts;
    parts.reserve(blocks.size());
    for (const auto& g : blocks) parts.push_back(MayaDiagram::xi(g));
    return interlace(parts);
}

std::string KBlockCoordinates::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += " | ";
        for (std::size_t j = 0; j < blocks[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(blocks[i][j]);
        }
    }
    return out + ")";
}

MayaDiagram interlace(const std::vector<MayaDiagram>& parts) {
    const int k = static_cast<int>(parts.size());
    if (k < 1) throw std::invalid_argument("interlace: need at least one diagram");
    if (k == 1) return parts[0];
    int lo = 0, hi = -1;
    for (const auto& m : parts) {
        lo = std::min(lo, m.support_lo());
        hi = std::max(hi, m.support_hi());
    }
    const int wlo = k * lo - k;
    const int whi = k * hi + k;
    std::vector<int> filled, empty;
    for (int m = std::min(wlo, 0); m <= std::max(whi, -1); ++m) {
        const int r = floormod(m, k);
        const bool member = parts[r].contains(floordiv(m, k));
        if (m >= 0 && member) filled.push_back(m);
        if (m < 0 && !member) empty.push_back(-m - 1);
    }
    std::sort(empty.begin(), empty.end());
    return MayaDiagram::from_sets(std::move(filled), std::move(empty));
}

std::vector<int> interlace_sites(const std::vector<std::vector<int>>& parts) {
    const int k = static_cast<int>(parts.size());
    if (k < 1) throw std::invalid_argument("interlace_sites: need at least one list");
    std::vector<int> out;
    for (int i = 0; i < k; ++i)
        for (int v : parts[i]) out.push_back(k * v + i);
    return out;
}

std::vector<MayaDiagram> modular_decompose(const MayaDiagram& m, int k) {
    if (k < 1) throw std::invalid_argument("modular_decompose: k must be positive");
    if (k == 1) return {m};
    std::vector<MayaDiagram> parts;
    parts.reserve(k);
    for (int i = 0; i < k; ++i) {
        const int lo = floordiv(m.support_lo() - i, k) - 1;
        const int hi = floordiv(m.support_hi() - i, k) + 1;
        std::vector<int> filled, empty;
        for (int q = std::min(lo, 0); q <= std::max(hi, -1); ++q) {
            const bool member = m.contains(k * q + i);
            if (q >= 0 && member) filled.push_back(q);
            if (q < 0 && !member) empty.push_back(-q - 1);
        }
        std::sort(empty.begin(), empty.end());
        parts.push_back(MayaDiagram::from_sets(std::move(filled), std::move(empty)));
    }
    return parts;
}

std::vector<int> canonical_flip_sequence(const KBlockCoordinates& blocks) {
    return interlace_sites(blocks.blocks);
}

MayaCycle build_cycle(const KBlockCoordinates& blocks, const std::vector<int>& perm) {
    const int p = blocks.period();
    if (static_cast<int>(perm.size()) != p)
        throw std::invalid_argument("build_cycle: permutation length must equal the period");
    std::vector<bool> seen(p, false);
    for (int v : perm) {
        if (v < 0 || v >= p || seen[v])
            throw std::invalid_argument("build_cycle: not a permutation of 0..p-1");
        seen[v] = true;
    }

    MayaCycle cycle;
    cycle.k = blocks.k();
    cycle.signature = blocks.signature();
    cycle.blocks = blocks;
    cycle.perm = perm;

    const std::vector<int> mu = canonical_flip_sequence(blocks);
    cycle.flip_sites.reserve(p);
    for (int i = 0; i < p; ++i) cycle.flip_sites.push_back(mu[perm[i]]);

    cycle.diagrams.reserve(p + 1);
    cycle.diagrams.push_back(blocks.diagram());
    for (int i = 0; i < p; ++i) {
        const int site = cycle.flip_sites[i];
        cycle.signs.push_back(cycle.diagrams.back().contains(site) ? +1 : -1);
        cycle.diagrams.push_back(cycle.diagrams.back().flip(site));
    }
    if (cycle.diagrams.back() != cycle.diagrams.front().shifted(cycle.k))
        throw CycleError("build_cycle: flip sequence does not close onto the translate");

    cycle.lambdas.reserve(p);
    for (int site : cycle.flip_sites) cycle.lambdas.push_back(2 * site + 1);
    cycle.a.reserve(p);
    for (int i = 0; i < p; ++i) {
        const int next = (i + 1 < p) ? cycle.lambdas[i + 1] : cycle.lambdas[0] + 2 * cycle.k;
        cycle.a.push_back(cycle.lambdas[i] - next);
    }
    return cycle;
}

MayaCycle reverse_cycle(const MayaCycle& cycle) {
    const int p = cycle.p();
    MayaCycle rev;
    rev.k = -cycle.k;
    rev.diagrams.assign(cycle.diagrams.rbegin(), cycle.diagrams.rend());
    rev.flip_sites.assign(cycle.flip_sites.rbegin(), cycle.flip_sites.rend());
    for (int i = 0; i < p; ++i) {
        const int site = rev.flip_sites[i];
        rev.signs.push_back(rev.diagrams[i].contains(site) ? +1 : -1);
        rev.lambdas.push_back(2 * site + 1);
    }
    for (int i = 0; i < p; ++i) {
        const int next = (i + 1 < p) ? rev.lambdas[i + 1] : rev.lambdas[0] + 2 * rev.k;
        rev.a.push_back(rev.lambdas[i] - next);
    }
    return rev;
}

KBlockCoordinates signature_blocks(const Signature& sig, const std::vector<int>& n) {
    if (!sig.valid()) throw std::invalid_argument("signature_blocks: parts must be odd positive");
    const int p = sig.period();
    if (static_cast<int>(n.size()) != p - 1)
        throw std::invalid_argument("signature_blocks: need exactly p-1 increments");
    for (int v : n)
        if (v < 0) throw std::invalid_argument("signature_blocks: increments must be non-negative");

    std::vector<std::vector<int>> blocks;
    std::size_t idx = 0;
    for (std::size_t g = 0; g < sig.parts.size(); ++g) {
        std::vector<int> group;
        int value = (g == 0) ? 0 : n[idx++];
        group.push_back(value);
        for (int t = 1; t < sig.parts[g]; ++t) {
            value += n[idx++];
            group.push_back(value);
        }
        blocks.push_back(std::move(group));
    }
    return KBlockCoordinates(std::move(blocks));
}

KBlockCoordinates a4_blocks(const Signature& sig, const std::vector<int>& n) {
    static const std::vector<std::vector<int>> allowed = {
        {5}, {3, 1, 1}, {1, 3, 1}, {1, 1, 3}, {1, 1, 1, 1, 1}};
    if (std::find(allowed.begin(), allowed.end(), sig.parts) == allowed.end())
        throw std::invalid_argument("a4_blocks: signature must be one of (5), (3,1,1), (1,3,1), (1,1,3), (1,1,1,1,1)");
    if (n.size() != 4) throw std::invalid_argument("a4_blocks: need a 4-tuple");
    return signature_blocks(sig, n);
}

std::vector<int> admissible_shifts(int p) {
    if (p < 1 || p % 2 == 0) throw std::invalid_argument("admissible_shifts: p must be odd and positive");
    std::vector<int> shifts;
    for (int k = 1; k <= p; ++k)
        if (k % 2 == p % 2) shifts.push_back(k);
    return shifts;
}

std::vector<Signature> enumerate_signatures(int p, int k) {
    const auto shifts = admissible_shifts(p);
    if (std::find(shifts.begin(), shifts.end(), k) == shifts.end())
        throw std::invalid_argument("enumerate_signatures: no compositions of " + std::to_string(p) +
                                    " into " + std::to_string(k) + " odd parts");
    std::vector<Signature> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int slots) -> void {
        if (slots == 1) {
            if (remaining >= 1 && remaining % 2 == 1) {
                current.push_back(remaining);
                out.push_back(Signature(current));
                current.pop_back();
            }
            return;
        }
        for (int first = remaining - (slots - 1); first >= 1; first -= 2) {
            current.push_back(first);
            self(self, remaining - first, slots - 1);
            current.pop_back();
        }
    };
    rec(rec, p, k);
    return out;
}

}  // namespace mayachain
