#pragma once

#include <json.hpp>

#include "mayachain/chain.hpp"
#include "mayachain/painleve.hpp"

namespace mayachain {

using Json = nlohmann::ordered_json;

Json cycle_to_json(const MayaCycle& cycle);
Json chain_to_json(const ChainSolution& sol);
Json painleve_to_json(const PainleveSolution& ps);
Json report_to_json(const VerificationReport& report);

/// Full bundle {cycle, chain, painleve} as written by the solve command.
Json solution_to_json(const ChainSolution& sol, const PainleveSolution& ps);

PainleveSolution painleve_from_json(const Json& j);

/// Re-checks a stored bundle: the symmetric-system residuals for "painleve",
/// the self-contained chain equations for "chain", and (when "cycle" carries
/// blocks and a permutation) a full rebuild with consistency checks against
/// the stored tuples.
VerificationReport verify_solution_json(const Json& j);

}  // namespace mayachain
