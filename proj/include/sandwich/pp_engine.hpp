#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sandwich/core.hpp"

namespace sandwich {

// Existentially quantified conjunction of atoms, equalities and disequalities.
struct PPFormula {
    std::vector<std::string> freeVariables;
    std::vector<std::string> existentialVariables;
    std::vector<std::pair<std::string, std::vector<std::string>>> atoms;
    std::vector<std::pair<std::string, std::string>> equalities;
    std::vector<std::pair<std::string, std::string>> disequalities;

    void validate(const std::vector<std::pair<std::string, int>>& sourceSignature) const;
};

// A dimension-d interpretation of the target signature in the source signature.
// equivalenceFormula (2d free variables) quotients occurrence copies;
// domainFormula (d free variables) restricts which d-tuples are elements.
struct PPConstruction {
    int d = 1;
    std::vector<std::pair<std::string, int>> sourceSignature;
    std::vector<std::pair<std::string, int>> targetSignature;
    std::map<std::string, PPFormula> perSymbol;
    std::optional<PPFormula> equivalenceFormula;
    std::optional<PPFormula> domainFormula;

    void validate() const;
    int sourceArity(const std::string& symbol) const;
    int targetArity(const std::string& symbol) const;
};

// Builtins. CLI names: c5k5, split12-1in3, betweenness-perm, gr-structA.
PPConstruction builtinC5toK5();
PPConstruction builtinSplit12ToOneInThree();
PPConstruction builtinBetweennessToPermutation();
PPConstruction builtinGrToStructA();
std::optional<PPConstruction> builtinConstruction(const std::string& name);

// The derived structure on d-tuples; membership decided by exhaustive witness
// search in tmpl. With a domain formula the satisfying tuples are re-indexed
// densely. domainSize^d capped at 10^4.
FiniteStructure ppPower(const FiniteStructure& tmpl, const PPConstruction& con);

// Instance-level gadget replacement over the source signature. With an
// equivalence formula every constraint occurrence of a target variable gets a
// fresh d-block and consecutive occurrences are chained by the equivalence
// gadget; without one, blocks are shared. Equalities merge variables;
// disequalities are emitted as "neq" pseudo-constraints.
StructureInstance gadgetReduce(const PPConstruction& con, const StructureInstance& inst);

// gadgetReduce re-expressed over {B, R} as a sandwich instance: B -> forced,
// R -> forbidden; each neq(u, v) becomes two fresh witnesses w with
// forced {w,u} + forbidden {w,v} and vice versa.
SandwichInstance gadgetToSandwich(const PPConstruction& con, const StructureInstance& inst);

// Can a {B, R, neq} instance be placed on a grid? Cells are (row, col); B needs
// distinct cells sharing a row or a column, R needs cells differing in both,
// neq needs distinct cells. Backtracking with canonical row/column numbering.
bool mapsToGrid(const StructureInstance& inst);

// .ppc text format.
PPConstruction parsePPC(const std::string& text);
std::string emitPPC(const PPConstruction& con);

}  // namespace sandwich
