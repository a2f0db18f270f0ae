#pragma once

#include "sandwich/core.hpp"

namespace sandwich {

// Complete-multipartite sandwich: transitively close the "same part" relation
// induced by forbidden pairs; reject when a forced pair lands inside a part,
// else join distinct parts completely. Recognizer-gated certificate.
Certificate solveMultipartite(const SandwichInstance& inst);

// Split sandwich via 2-SAT: x_v = 1 puts v on the clique side. Forced uv gives
// (x_u or x_v), forbidden uv gives (!x_u or !x_v); implication-graph SCC.
Certificate solveSplit(const SandwichInstance& inst);

// Threshold sandwich by greedy peeling (remove isolated-able or universal-able
// vertices); certificate rebuilt by replaying the peel in reverse.
// tieBreakHighest picks the highest-index removable vertex instead of the
// lowest; the verdict must not depend on it.
Certificate solveThreshold(const SandwichInstance& inst, bool tieBreakHighest = false);

}  // namespace sandwich
