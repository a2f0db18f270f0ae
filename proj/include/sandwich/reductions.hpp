#pragma once

#include <stdexcept>

#include "sandwich/core.hpp"

namespace sandwich {

struct NotBipartiteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (V, E) -> (V, E, N=empty): k-colourability becomes a blow-up sandwich question.
SandwichInstance colouringToSandwich(const Graph& g);

// Swap forced and forbidden; an involution.
SandwichInstance complementInstance(const SandwichInstance& inst);

// Add p+1 fresh vertices, forced to every original vertex and mutually
// forbidden: (p,q)-split lifts to (p,q+1)-split.
SandwichInstance pqPadding(const SandwichInstance& inst, int p);

// One fresh vertex forced to every original vertex.
SandwichInstance universalVertexPadding(const SandwichInstance& inst);

// One pendant u_v per original v: forced {v,u_v}; forbidden {u_v,u_w} and
// {u_v,w} for w != v.
SandwichInstance pendantPadding(const SandwichInstance& inst);

// One variable per unordered vertex pair (indexed in lexicographic order); a
// T-constraint (uv, vw, uw) per 3-subset; U_E on forced pairs, U_N on forbidden.
StructureInstance lineBipToA(const SandwichInstance& inst);

// Pad a bipartite graph with a fresh t -> path -> s so the result has exactly
// 5 * 3^(i+2) vertices, i maximal with 5 * 3^i <= n (i = 0 when n < 5). The
// input has a Hamiltonian s-t path iff the output has a cycle whose length
// lies in {5 * 3^j}. Path vertices are n, n+1, ...; the first one anchors
// cycle searches.
Graph hamPathToCycleFamily(const Graph& g, int s, int t);

}  // namespace sandwich
