#pragma once

#include <cstdint>

#include "sandwich/core.hpp"
#include "sandwich/recognizers.hpp"

namespace sandwich {

// Exhaustive enumeration over all completions, binary counting over the sorted
// undetermined pairs; at most 2^25 completions. Returns the lexicographically
// first accepted completion.
Certificate oracleSolve(const SandwichInstance& inst, const ClassId& cls);

// Backtracking over undetermined pairs with forbidden-pattern pruning for
// FFree-expressible classes. Returns Unknown when the node budget runs out.
Certificate searchSolve(const SandwichInstance& inst, const ClassId& cls,
                        std::uint64_t nodeBudget = 10000000);

// Exact (p,q)-split sandwich verdict by bipartition search: side A takes every
// undetermined pair as an edge and needs independence <= p, side B takes only
// forced edges and needs clique number <= q. Usable beyond the oracle's
// undetermined-pair cap (still exponential in n).
Certificate pqSplitSolve(const SandwichInstance& inst, int p, int q);

}  // namespace sandwich
