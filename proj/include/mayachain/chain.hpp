#pragma once

#include <string>
#include <vector>

#include "mayachain/cyclic.hpp"
#include "mayachain/ratfunc.hpp"

namespace mayachain {

/// One symbolic identity check: pass means the residual reduced to the zero
/// rational function; on failure the numerator coefficients are recorded.
struct IdentityCheck {
    std::string name;
    bool pass = false;
    std::string residual_num;  // "[...]" when the identity fails, empty otherwise
};

struct VerificationReport {
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Schroedinger potential attached to a diagram: z^2 - 2 (log H_M)'' + 2 s_M,
/// expanded into a single reduced fraction.
QRatFunc potential(const MayaDiagram& m);

/// The cycle's log-derivative solution: w_i = s_i z + (log H_{M_{i+1}})' -
/// (log H_{M_i})', with weights a_i and shift delta = 2k.
struct ChainSolution {
    MayaCycle cycle;
    std::vector<QRatFunc> w;
    std::vector<int> a;
    int delta = 0;
    std::vector<QRatFunc> potentials;  // U_{M_0}, ..., U_{M_p}
};

ChainSolution chain_solution(const MayaCycle& cycle);

/// The identities that only involve the tuple (w | a, delta):
///   chain[i]        (w_i + w_{i+1})' + w_{i+1}^2 - w_i^2 - a_i = 0
///   sum_a           a_0 + ... + a_{p-1} + delta = 0
///   first_integral  w_0 + ... + w_{p-1} + delta z / 2 = 0
VerificationReport verify_chain_equations(const std::vector<QRatFunc>& w,
                                          const std::vector<int>& a, int delta);

/// Exact verification of every chain identity: the equations above plus
///   riccati_a[i]    w_i' + w_i^2 - U_i + lambda_i = 0
///   riccati_b[i]    -w_i' + w_i^2 - U_{i+1} + lambda_i = 0
///   darboux[i]      U_{i+1} - U_i + 2 w_i' = 0
VerificationReport verify_chain(const ChainSolution& sol);

/// Checks that the quasi-rational seed attached to (M, m) is a formal
/// eigenfunction with eigenvalue 2m + 1: with u its log-derivative,
/// -(u' + u^2) + U_M - (2m + 1) = 0.
VerificationReport verify_eigenfunction(const MayaDiagram& m, int site);

}  // namespace mayachain
