#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sandwich {

// Vertices are 0-based dense integers. Unordered pairs are normalized (min,max).
using Pair = std::pair<int, int>;
using PairSet = std::set<Pair>;

// Adjacency rows fit one machine word.
inline constexpr int kMaxVertices = 64;

struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OverlapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SignatureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Pair makePair(int u, int v);
PairSet normalizePairs(int n, const PairSet& pairs);
PairSet allPairs(int n);

// Simple undirected graph.
class Graph {
  public:
    Graph() : n_(0) {}
    Graph(int n, PairSet edges);

    int n() const { return n_; }
    const PairSet& edges() const { return edges_; }
    bool adjacent(int u, int v) const;
    std::uint64_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;

    PairSet nonEdges() const;
    Graph complement() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph empty(int n);
    static Graph completeBipartite(int a, int b);

  private:
    int n_;
    PairSet edges_;
    std::vector<std::uint64_t> adj_;
};

struct ColouredGraph {
    int n = 0;
    PairSet blue;
    PairSet red;
};

struct SandwichInstance {
    int n = 0;
    PairSet forced;
    PairSet forbidden;

    bool operator==(const SandwichInstance& other) const {
        return n == other.n && forced == other.forced && forbidden == other.forbidden;
    }
};

struct FiniteStructure {
    int domainSize = 0;
    std::vector<std::pair<std::string, int>> signature;
    std::map<std::string, std::set<std::vector<int>>> relations;

    int arity(const std::string& symbol) const;
    bool hasSymbol(const std::string& symbol) const;
    void validate() const;
};

struct StructureInstance {
    int variableCount = 0;
    std::vector<std::pair<std::string, std::vector<int>>> constraints;

    // Checks every referenced symbol against the template's signature.
    void validateAgainst(const FiniteStructure& tmpl) const;
};

struct Certificate {
    enum class Kind { CompletionYes, HomYes, No, Unknown };

    Kind kind = Kind::No;
    PairSet edges;         // CompletionYes
    std::vector<int> hom;  // HomYes

    bool isYes() const { return kind == Kind::CompletionYes || kind == Kind::HomYes; }

    static Certificate completionYes(PairSet e);
    static Certificate homYes(std::vector<int> h);
    static Certificate no();
    static Certificate unknown();

    bool operator==(const Certificate& other) const {
        return kind == other.kind && edges == other.edges && hom == other.hom;
    }
};

SandwichInstance makeInstance(int n, const PairSet& forced, const PairSet& forbidden);

ColouredGraph toColouredGraph(const SandwichInstance& inst);
SandwichInstance fromColouredGraph(const ColouredGraph& g);

std::vector<Pair> undeterminedPairs(const SandwichInstance& inst);

Graph inducedSubgraph(const Graph& g, const std::vector<int>& vertexSet);

// Brute force over permutations with degree-sequence pruning; both graphs <= 10 vertices.
bool isIsomorphicSmall(const Graph& g1, const Graph& g2);

// Generic check for every CompletionYes emitted anywhere: forced subset of edges,
// edges disjoint from forbidden.
bool validCompletion(const SandwichInstance& inst, const PairSet& completion);

// Each pair independently forced with pForced, forbidden with pForbidden,
// else undetermined; mt19937_64 keyed by seed, one uniform draw per pair in
// sorted pair order.
SandwichInstance randomInstance(int n, double pForced, double pForbidden, std::uint64_t seed);

}  // namespace sandwich
