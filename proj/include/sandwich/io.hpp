#pragma once

#include <string>

#include "sandwich/core.hpp"

namespace sandwich {

// Text formats: whitespace-separated tokens, '#' comments, 1-based vertices
// and variables, 0-based domain elements.
//   instance:  "p swi <n>"  then "e u v" (forced) / "f u v" (forbidden)
//   graph:     "p gr <n>"   then "e u v"
//   structure: "p fst <domainSize>" then "r <name> <arity>" / "t <name> d1 .. dk"
//   csp:       "p csp <variableCount>" then "c <symbol> v1 .. vr"

SandwichInstance parseInstance(const std::string& text);
std::string emitInstance(const SandwichInstance& inst);

Graph parseGraph(const std::string& text);
std::string emitGraph(const Graph& g);

FiniteStructure parseStructure(const std::string& text);
std::string emitStructure(const FiniteStructure& s);

StructureInstance parseStructureInstance(const std::string& text);
std::string emitStructureInstance(const StructureInstance& inst);

}  // namespace sandwich
