#pragma once

#include <vector>

#include "mayachain/chain.hpp"
#include "mayachain/quadext.hpp"

namespace mayachain {

/// Rational solution tuple (f_0, ..., f_2n | alpha_0, ..., alpha_2n) of the
/// symmetric first-order system of rank 2n+1, over Q(c) with c^2 = -1/delta.
/// Invariants: sum f_i = z and sum alpha_i = 1, exactly.
struct PainleveSolution {
    int n = 0;
    std::vector<QuadRatFunc> f;
    std::vector<Rational> alpha;
    Rational c_squared;
};

/// Maps a chain solution of odd period p = 2n+1 and non-zero shift through
/// f_i = c (w_i + w_{i+1})(cz), alpha_i = c^2 a_i.
PainleveSolution to_painleve(const ChainSolution& sol);

/// Exact residuals of the symmetric system:
///   eq[i]      f_i' + f_i (sum_{j=1..n} f_{i+2j-1} - sum_{j=1..n} f_{i+2j}) - alpha_i
///   sum_f      f_0 + ... + f_2n - z
///   sum_alpha  alpha_0 + ... + alpha_2n - 1
VerificationReport verify_painleve(const PainleveSolution& ps);

/// Half alternating sums: w_i = (f_i - f_{i+1} + f_{i+2} - ...) / 2 over one
/// full cyclic round; inverts f_i = w_i + w_{i+1} for odd tuple length.
template <class K>
std::vector<RatFunc<K>> inverse_map(const std::vector<RatFunc<K>>& f) {
    const int p = static_cast<int>(f.size());
    if (p % 2 == 0) throw std::invalid_argument("inverse_map: tuple length must be odd");
    std::vector<RatFunc<K>> w(p);
    for (int i = 0; i < p; ++i) {
        RatFunc<K> acc;
        for (int j = 0; j < p; ++j) {
            const RatFunc<K>& term = f[(i + j) % p];
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        w[i] = acc * RatFunc<K>(K(Rational(1, 2)));
    }
    return w;
}

/// Front door for rank-5 solutions: signature + 4-tuple -> blocks -> cycle ->
/// chain -> symmetric-system tuple.
PainleveSolution a4_solution(const Signature& sig, const std::vector<int>& n,
                             const std::vector<int>& perm);

}  // namespace mayachain
