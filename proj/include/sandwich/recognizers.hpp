#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sandwich/core.hpp"

namespace sandwich {

// Cycle length family; GeometricT is {5 * 3^i : i >= 0}.
struct FamilySpec {
    enum class Kind { ExplicitSet, GeometricT };

    Kind kind = Kind::GeometricT;
    std::vector<int> lengths;  // ExplicitSet, each >= 5

    static FamilySpec explicitSet(std::vector<int> lengths);
    static FamilySpec geometricT() { return FamilySpec{}; }

    bool contains(int m) const;
};

struct ClassId {
    enum class Tag {
        Split,
        Threshold,
        CompleteMultipartite,
        FFree,
        PerfectKkFree,
        PqSplit,
        LineOfBipartite,
        LineOfBipartiteMulti,
        Permutation,
        CycleFamilyFree,
        PnKkFree,
    };

    Tag tag = Tag::Split;
    std::vector<Graph> patterns;  // FFree
    int p = 0, q = 0, k = 0, n = 0;
    FamilySpec family;

    static ClassId split();
    static ClassId threshold();
    static ClassId completeMultipartite();
    static ClassId fFree(std::vector<Graph> patterns);
    static ClassId perfectKkFree(int k);
    static ClassId pqSplit(int p, int q);
    static ClassId lineOfBipartite();
    static ClassId lineOfBipartiteMulti();
    static ClassId permutation();
    static ClassId cycleFamilyFree(FamilySpec family);
    static ClassId pnKkFree(int n, int k);

    std::string name() const;
};

// m = 5 * 3^i for some i >= 0.
bool inT(int m);

bool isSplit(const Graph& g);
bool isThreshold(const Graph& g);
bool isCompleteMultipartite(const Graph& g);
bool isFFree(const Graph& g, const std::vector<Graph>& forbidden);
bool isPerfectSmall(const Graph& g);
bool isPqSplitSmall(const Graph& g, int p, int q);
bool isLineOfBipartite(const Graph& g);
bool isLineOfBipartiteMulti(const Graph& g);
bool isPermutationSmall(const Graph& g);
bool containsCycleIn(const Graph& g, const FamilySpec& spec);

// Cycle search restricted to cycles through `anchor`; no vertex-count cap.
// Used by the Hamiltonian-path reduction where any qualifying cycle must
// traverse the added path.
bool containsCycleThrough(const Graph& g, int anchor, const FamilySpec& spec);

// Dispatch on ClassId; ground truth for the oracle.
bool recognize(const Graph& g, const ClassId& cls);

// CLI class names: split | threshold | multipartite | ffree |
// perfect-kfree:<k> | pqsplit:<p>,<q> | line-bip | line-bip-multi |
// permutation | cyclefam:<T or lengths> | pnkk:<n>,<k>. "ffree" takes its
// patterns from the second argument (callers resolve file references first).
ClassId parseClassName(const std::string& name, const std::vector<Graph>& ffreePatterns = {});

// Forbidden-pattern characterization where one exists (drives searchSolve pruning).
std::optional<std::vector<Graph>> fFreePatterns(const ClassId& cls);

// Test-support: does an induced embedding of `pattern` exist whose pattern-edges all
// land in `in` and pattern-non-edges all land in `out`? With in = edges(g) and
// out = nonEdges(g) this is plain induced-subgraph containment.
bool hasInducedEmbedding(int hostN, const PairSet& in, const PairSet& out, const Graph& pattern);

int cliqueNumber(const Graph& g);
int independenceNumber(const Graph& g);
bool isBipartite(const Graph& g);

}  // namespace sandwich
