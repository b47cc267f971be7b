#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mayachain/maya.hpp"

namespace mayachain {

/// Composition of a period p into k odd positive parts; part i is the length
/// of the i-th block coordinate group.
struct Signature {
    std::vector<int> parts;

    Signature() = default;
    explicit Signature(std::vector<int> p) : parts(std::move(p)) {}

    int k() const { return static_cast<int>(parts.size()); }
    int period() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    bool valid() const {
        if (parts.empty()) return false;
        for (int p : parts)
            if (p < 1 || p % 2 == 0) return false;
        return true;
    }
    std::string str() const;
    bool operator==(const Signature&) const = default;
};

/// Block coordinates of the k interlaced diagrams, (beta^(0) | ... | beta^(k-1)).
/// Each group has odd length and non-decreasing entries (repeats are the
/// degenerate, zero-length-block case).
struct KBlockCoordinates {
    std::vector<std::vector<int>> blocks;

    KBlockCoordinates() = default;
    explicit KBlockCoordinates(std::vector<std::vector<int>> b);

    int k() const { return static_cast<int>(blocks.size()); }
    int period() const;
    Signature signature() const;
    MayaDiagram diagram() const;
    std::string str() const;
    bool operator==(const KBlockCoordinates&) const = default;
};

/// Maya p-cycle: M_{i+1} = flip(M_i, flip_sites[i]) with M_p = M_0 + k.
struct MayaCycle {
    int k = 0;
    Signature signature;              // empty for cycles not built from blocks
    KBlockCoordinates blocks;         // likewise
    std::vector<int> perm;            // one-line permutation into the canonical flip sequence
    std::vector<int> flip_sites;      // the sites in the order applied
    std::vector<int> signs;           // +1 if the site was a member when flipped, else -1
    std::vector<int> lambdas;         // 2*site + 1
    std::vector<int> a;               // lambdas[i] - lambdas[i+1], closing with lambda_0 + 2k
    std::vector<MayaDiagram> diagrams;  // M_0, ..., M_p

    int p() const { return static_cast<int>(flip_sites.size()); }
};

struct CycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Merges k diagrams onto the residue classes mod k: member m of diagram i
/// contributes k*m + i.
MayaDiagram interlace(const std::vector<MayaDiagram>& parts);

/// Same merge for finite site lists, concatenated in block order (which is
/// exactly the residue-then-value total order when each list is increasing).
std::vector<int> interlace_sites(const std::vector<std::vector<int>>& parts);

/// Inverse of interlace: component i collects {m : k*m + i in M}.
std::vector<MayaDiagram> modular_decompose(const MayaDiagram& m, int k);

/// The unique flip sequence carrying Xi_k(blocks) to its translate by k,
/// ordered by residue class first and value second.
std::vector<int> canonical_flip_sequence(const KBlockCoordinates& blocks);

/// Builds the full cycle for a permutation of the canonical flip sequence.
/// Throws CycleError if the data does not close up.
MayaCycle build_cycle(const KBlockCoordinates& blocks, const std::vector<int>& perm);

/// Runs the same cycle backwards: diagrams reversed, shift negated. The
/// result carries no block/permutation labels.
MayaCycle reverse_cycle(const MayaCycle& cycle);

/// Block coordinates for a signature and the p-1 free non-negative
/// increments: group 0 starts at 0, later groups start at the next increment,
/// and entries inside a group accumulate.
KBlockCoordinates signature_blocks(const Signature& sig, const std::vector<int>& n);

/// The five-part front door: signatures (5), (3,1,1), (1,3,1), (1,1,3),
/// (1,1,1,1,1) with a 4-tuple of non-negative integers.
KBlockCoordinates a4_blocks(const Signature& sig, const std::vector<int>& n);

/// All shifts k for which p-cycles exist: 1 <= k <= p with k == p (mod 2).
std::vector<int> admissible_shifts(int p);

/// All ordered k-tuples of odd positive integers summing to p.
std::vector<Signature> enumerate_signatures(int p, int k);

}  // namespace mayachain
