#pragma once

#include <optional>
#include <vector>

#include "solv/pcpres.hpp"
#include "solv/pcsubgroup.hpp"

namespace solv {

// Abelian invariants of G/G' (or of G itself when abelian): prime powers in
// increasing order, e.g. C4 x C2 -> {2, 4}.
std::vector<u64> abelian_invariants(const PcPresPtr& G);
std::vector<u64> abelianization_invariants(const PcPresPtr& G);

// Exhaustive isomorphism search: assigns images to pc generators from the
// deepest up, pruned by relative orders, relation checks and injectivity of
// the partial map. Throws cap_error(oracle_cap) above the configured cap.
std::optional<GroupHom> brute_force_isomorphic(const PcPresPtr& G, const PcPresPtr& H);

}  // namespace solv
