#include "sandwich/reductions.hpp"

#include <map>

#include "sandwich/recognizers.hpp"

namespace sandwich {

SandwichInstance colouringToSandwich(const Graph& g) {
    return makeInstance(g.n(), g.edges(), {});
}

SandwichInstance complementInstance(const SandwichInstance& inst) {
    return makeInstance(inst.n, inst.forbidden, inst.forced);
}

SandwichInstance pqPadding(const SandwichInstance& inst, int p) {
    if (p < 0) throw RangeError("padding parameter must be nonnegative");
    const int extra = p + 1;
    PairSet forced = inst.forced;
    PairSet forbidden = inst.forbidden;
    for (int i = 0; i < extra; ++i) {
        const int vi = inst.n + i;
        for (int u = 0; u < inst.n; ++u) forced.insert(makePair(u, vi));
        for (int j = i + 1; j < extra; ++j) forbidden.insert(makePair(vi, inst.n + j));
    }
    return makeInstance(inst.n + extra, forced, forbidden);
}

SandwichInstance universalVertexPadding(const SandwichInstance& inst) {
    PairSet forced = inst.forced;
    for (int u = 0; u < inst.n; ++u) forced.insert(makePair(u, inst.n));
    return makeInstance(inst.n + 1, forced, inst.forbidden);
}

SandwichInstance pendantPadding(const SandwichInstance& inst) {
    PairSet forced = inst.forced;
    PairSet forbidden = inst.forbidden;
    const auto pendant = [&inst](int v) { return inst.n + v; };
    for (int v = 0; v < inst.n; ++v) {
        forced.insert(makePair(v, pendant(v)));
        for (int w = v + 1; w < inst.n; ++w) forbidden.insert(makePair(pendant(v), pendant(w)));
        for (int w = 0; w < inst.n; ++w)
            if (w != v) forbidden.insert(makePair(pendant(v), w));
    }
    return makeInstance(2 * inst.n, forced, forbidden);
}

StructureInstance lineBipToA(const SandwichInstance& inst) {
    if (inst.n < 2) throw RangeError("pair encoding needs at least 2 vertices");
    std::map<Pair, int> pairIndex;
    for (const auto& p : allPairs(inst.n)) pairIndex.emplace(p, static_cast<int>(pairIndex.size()));

    StructureInstance out;
    out.variableCount = static_cast<int>(pairIndex.size());
    for (int u = 0; u < inst.n; ++u)
        for (int v = u + 1; v < inst.n; ++v)
            for (int w = v + 1; w < inst.n; ++w)
                out.constraints.push_back(
                    {"T", {pairIndex.at({u, v}), pairIndex.at({v, w}), pairIndex.at({u, w})}});
    for (const auto& p : inst.forced) out.constraints.push_back({"U_E", {pairIndex.at(p)}});
    for (const auto& p : inst.forbidden) out.constraints.push_back({"U_N", {pairIndex.at(p)}});
    return out;
}

Graph hamPathToCycleFamily(const Graph& g, int s, int t) {
    if (s < 0 || t < 0 || s >= g.n() || t >= g.n()) throw RangeError("endpoint out of range");
    if (s == t) throw RangeError("endpoints must differ");
    if (!isBipartite(g)) throw NotBipartiteError("input graph is not bipartite");

    int ki = 5;
    while (3 * ki <= g.n()) ki *= 3;  // ki maximal in the family with ki <= n (5 when n < 5)
    const int target = 9 * ki;
    const int l = target - g.n();

    PairSet edges = g.edges();
    for (int j = 0; j + 1 < l; ++j) edges.insert(makePair(g.n() + j, g.n() + j + 1));
    edges.insert(makePair(t, g.n()));
    edges.insert(makePair(g.n() + l - 1, s));
    return Graph(target, edges);
}

}  // namespace sandwich
