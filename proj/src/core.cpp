#include "sandwich/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace sandwich {

Pair makePair(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

PairSet normalizePairs(int n, const PairSet& pairs) {
    PairSet out;
    for (const auto& [u, v] : pairs) {
        if (u == v) throw RangeError("self-pair " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw RangeError("pair endpoint out of range for n=" + std::to_string(n));
        out.insert(makePair(u, v));
    }
    return out;
}

PairSet allPairs(int n) {
    PairSet out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.insert({u, v});
    return out;
}

Graph::Graph(int n, PairSet edges) : n_(n) {
    if (n < 0) throw RangeError("negative vertex count");
    if (n > kMaxVertices)
        throw SizeError("graph exceeds the " + std::to_string(kMaxVertices) + "-vertex cap");
    edges_ = normalizePairs(n, edges);
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw RangeError("vertex out of range");
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw RangeError("vertex out of range");
    return static_cast<int>(std::popcount(adj_[static_cast<std::size_t>(v)]));
}

PairSet Graph::nonEdges() const {
    PairSet out = allPairs(n_);
    for (const auto& e : edges_) out.erase(e);
    return out;
}

Graph Graph::complement() const { return Graph(n_, nonEdges()); }

Graph Graph::path(int n) {
    PairSet e;
    for (int i = 0; i + 1 < n; ++i) e.insert({i, i + 1});
    return Graph(n, e);
}

Graph Graph::cycle(int n) {
    PairSet e;
    for (int i = 0; i + 1 < n; ++i) e.insert({i, i + 1});
    if (n >= 3) e.insert({0, n - 1});
    return Graph(n, e);
}

Graph Graph::complete(int n) { return Graph(n, allPairs(n)); }

Graph Graph::empty(int n) { return Graph(n, {}); }

Graph Graph::completeBipartite(int a, int b) {
    PairSet e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.insert(makePair(i, a + j));
    return Graph(a + b, e);
}

int FiniteStructure::arity(const std::string& symbol) const {
    for (const auto& [name, r] : signature)
        if (name == symbol) return r;
    throw SignatureError("unknown symbol " + symbol);
}

bool FiniteStructure::hasSymbol(const std::string& symbol) const {
    for (const auto& [name, r] : signature)
        if (name == symbol) return true;
    return false;
}

void FiniteStructure::validate() const {
    if (domainSize <= 0) throw RangeError("domain size must be positive");
    for (const auto& [name, tuples] : relations) {
        const int r = arity(name);
        for (const auto& t : tuples) {
            if (static_cast<int>(t.size()) != r)
                throw SignatureError("tuple arity mismatch for " + name);
            for (int x : t)
                if (x < 0 || x >= domainSize) throw RangeError("tuple entry out of domain");
        }
    }
}

void StructureInstance::validateAgainst(const FiniteStructure& tmpl) const {
    for (const auto& [sym, vars] : constraints) {
        if (!tmpl.hasSymbol(sym)) throw SignatureError("constraint symbol " + sym + " not in template");
        if (static_cast<int>(vars.size()) != tmpl.arity(sym))
            throw SignatureError("constraint arity mismatch for " + sym);
        for (int v : vars)
            if (v < 0 || v >= variableCount) throw RangeError("constraint variable out of range");
    }
}

Certificate Certificate::completionYes(PairSet e) {
    Certificate c;
    c.kind = Kind::CompletionYes;
    c.edges = std::move(e);
    return c;
}

Certificate Certificate::homYes(std::vector<int> h) {
    Certificate c;
    c.kind = Kind::HomYes;
    c.hom = std::move(h);
    return c;
}

Certificate Certificate::no() { return Certificate{}; }

Certificate Certificate::unknown() {
    Certificate c;
    c.kind = Kind::Unknown;
    return c;
}

SandwichInstance makeInstance(int n, const PairSet& forced, const PairSet& forbidden) {
    if (n < 0) throw RangeError("negative vertex count");
    if (n > kMaxVertices)
        throw SizeError("instance exceeds the " + std::to_string(kMaxVertices) + "-vertex cap");
    SandwichInstance inst;
    inst.n = n;
    inst.forced = normalizePairs(n, forced);
    inst.forbidden = normalizePairs(n, forbidden);
    for (const auto& p : inst.forced)
        if (inst.forbidden.count(p))
            throw OverlapError("pair {" + std::to_string(p.first) + "," + std::to_string(p.second) +
                               "} is both forced and forbidden");
    return inst;
}

ColouredGraph toColouredGraph(const SandwichInstance& inst) {
    return ColouredGraph{inst.n, inst.forced, inst.forbidden};
}

SandwichInstance fromColouredGraph(const ColouredGraph& g) {
    return makeInstance(g.n, g.blue, g.red);
}

std::vector<Pair> undeterminedPairs(const SandwichInstance& inst) {
    std::vector<Pair> out;
    for (const auto& p : allPairs(inst.n))
        if (!inst.forced.count(p) && !inst.forbidden.count(p)) out.push_back(p);
    return out;
}

Graph inducedSubgraph(const Graph& g, const std::vector<int>& vertexSet) {
    std::vector<int> verts = vertexSet;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= g.n()) throw RangeError("vertex set member out of range");
        relabel[verts[i]] = static_cast<int>(i);
    }
    PairSet e;
    for (const auto& [u, v] : g.edges())
        if (relabel.count(u) && relabel.count(v)) e.insert(makePair(relabel[u], relabel[v]));
    return Graph(static_cast<int>(verts.size()), e);
}

bool isIsomorphicSmall(const Graph& g1, const Graph& g2) {
    if (g1.n() > 10 || g2.n() > 10) throw SizeError("isomorphism check capped at 10 vertices");
    if (g1.n() != g2.n() || g1.edges().size() != g2.edges().size()) return false;
    const int n = g1.n();
    std::vector<int> d1, d2;
    for (int v = 0; v < n; ++v) {
        d1.push_back(g1.degree(v));
        d2.push_back(g2.degree(v));
    }
    std::vector<int> s1 = d1, s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool degreesMatch = true;
        for (int v = 0; v < n && degreesMatch; ++v)
            if (d1[static_cast<std::size_t>(v)] != d2[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])])
                degreesMatch = false;
        if (!degreesMatch) continue;
        bool ok = true;
        for (const auto& [u, v] : g1.edges()) {
            if (!g2.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool validCompletion(const SandwichInstance& inst, const PairSet& completion) {
    for (const auto& [u, v] : completion)
        if (u < 0 || v < 0 || u >= inst.n || v >= inst.n || u >= v) return false;
    for (const auto& p : inst.forced)
        if (!completion.count(p)) return false;
    for (const auto& p : inst.forbidden)
        if (completion.count(p)) return false;
    return true;
}

SandwichInstance randomInstance(int n, double pForced, double pForbidden, std::uint64_t seed) {
    if (n < 0 || pForced < 0 || pForbidden < 0 || pForced + pForbidden > 1)
        throw RangeError("need n >= 0 and pForced + pForbidden <= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    PairSet forced, forbidden;
    for (const auto& p : allPairs(n)) {
        const double x = unit(rng);
        if (x < pForced)
            forced.insert(p);
        else if (x < pForced + pForbidden)
            forbidden.insert(p);
    }
    return makeInstance(n, forced, forbidden);
}

}  // namespace sandwich
