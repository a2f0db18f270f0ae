#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sandwich/core.hpp"

namespace sandwich {

// Builtin templates.
// StructA: domain {b,g,r} = {0,1,2}; U_N = {r}, U_E = {b,g},
// T = symmetric closure of {bbb, ggg, rrr, brr, grr, bgr}.
FiniteStructure structA();
// StructK: two-element 2-edge-coloured template; its CSP is 2-SAT restricted to
// all-positive / all-negative clauses.
FiniteStructure structK();
// OneInThree: ({0,1}, {(0,0,1),(0,1,0),(1,0,0)}).
FiniteStructure oneInThree();
// Clique(k) as a symmetric edge structure.
FiniteStructure cliqueStructure(int k);
// A finite graph as an {E}-structure (symmetric closure of the edge set).
FiniteStructure graphStructure(const Graph& g);
// A finite m x m grid-intersection template: vertices are cells, E links cells
// sharing a row or a column. Finite stand-in for the infinite grid.
FiniteStructure gridStructure(int m);

StructureInstance graphInstance(const Graph& g, const std::string& edgeSymbol = "E");

// Backtracking with arc-consistency propagation; smallest domain first,
// lowest value first. Returns HomYes(map) or No.
Certificate homSearch(const StructureInstance& inst, const FiniteStructure& tmpl);

// Coordinatewise k-th power; domainSize^k capped at 10^5.
FiniteStructure structurePower(const FiniteStructure& tmpl, int k);

// A 4-ary operation table over the template's domain, indexed by
// ((a*D + b)*D + c)*D + d.
using OperationTable = std::vector<int>;

// Searches for a 4-ary Siggers polymorphism (f(a,r,e,a) = f(r,a,r,e)) via an
// indicator CSP over the |D|^4 cells. Domain capped at 4.
std::optional<OperationTable> hasSiggers(const FiniteStructure& tmpl);

// Independent cell-by-cell re-check of conditions (i) polymorphism and (ii) the
// Siggers identity.
bool validateSiggersTable(const FiniteStructure& tmpl, const OperationTable& table);
bool isPolymorphism(const FiniteStructure& tmpl, const std::vector<int>& table, int arity);

struct PolymorphismEnumeration {
    long long count = 0;
    std::vector<std::vector<int>> sampleTables;  // first few found
};

// Full filter over all |D|^(|D|^arity) operation tables; optional Siggers identity
// constraint. Independent oracle for hasSiggers on two-element domains.
PolymorphismEnumeration enumeratePolymorphismsNaive(const FiniteStructure& tmpl, int arity,
                                                    bool requireSiggers = false,
                                                    std::size_t maxSamples = 3);

}  // namespace sandwich
