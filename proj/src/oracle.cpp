#include "sandwich/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace sandwich {

Certificate oracleSolve(const SandwichInstance& inst, const ClassId& cls) {
    const std::vector<Pair> free = undeterminedPairs(inst);
    if (free.size() > 25) throw SizeError("oracle capped at 25 undetermined pairs");
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        PairSet edges = inst.forced;
        for (std::size_t j = 0; j < free.size(); ++j)
            if ((mask >> j) & 1) edges.insert(free[j]);
        if (recognize(Graph(inst.n, edges), cls)) return Certificate::completionYes(std::move(edges));
    }
    return Certificate::no();
}

namespace {

struct SearchState {
    const SandwichInstance* inst;
    const ClassId* cls;
    const std::vector<Graph>* patterns;  // null when no pattern characterization
    std::vector<Pair> free;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
};

// Sound prune: some forbidden pattern already occurs with all its edges in `in`
// and all its non-edges in `out`, so every extension stays bad.
bool doomed(const SearchState& st, const PairSet& in, const PairSet& out) {
    if (!st.patterns) return false;
    for (const Graph& pat : *st.patterns)
        if (hasInducedEmbedding(st.inst->n, in, out, pat)) return true;
    return false;
}

bool searchRec(SearchState& st, std::size_t depth, PairSet& in, PairSet& out, PairSet& result) {
    if (++st.nodes > st.budget) {
        st.exhausted = true;
        return false;
    }
    if (doomed(st, in, out)) return false;
    if (depth == st.free.size()) {
        if (recognize(Graph(st.inst->n, in), *st.cls)) {
            result = in;
            return true;
        }
        return false;
    }
    const Pair p = st.free[depth];
    out.insert(p);
    if (searchRec(st, depth + 1, in, out, result)) return true;
    out.erase(p);
    if (st.exhausted) return false;
    in.insert(p);
    if (searchRec(st, depth + 1, in, out, result)) return true;
    in.erase(p);
    return false;
}

}  // namespace

namespace {

struct PqState {
    const SandwichInstance* inst;
    int p, q;
    std::vector<std::uint64_t> forbiddenAdj, forcedAdj;
    std::uint64_t sideA = 0, sideB = 0;
};

// alpha of the A-side (all pairs except forbidden) exceeds p iff the forbidden
// pairs contain a clique of size p+1 inside A; omega of the B-side likewise
// needs a forced clique of size q+1. Both reduce to a depth-capped clique
// search through the newly placed vertex.
bool cliqueThroughVertexExceeds(const std::vector<std::uint64_t>& adj, std::uint64_t side, int v,
                                int cap) {
    const std::function<bool(std::uint64_t, int)> grow = [&](std::uint64_t cand, int size) {
        if (size > cap) return true;
        while (cand) {
            const int w = std::countr_zero(cand);
            cand &= cand - 1;
            if (grow(cand & adj[static_cast<std::size_t>(w)], size + 1)) return true;
        }
        return false;
    };
    const std::uint64_t cand =
        side & adj[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
    return grow(cand, 1);
}

bool pqRec(PqState& st, int v) {
    const int n = st.inst->n;
    if (v == n) return true;
    const std::uint64_t bit = std::uint64_t{1} << v;
    // Side A first (deterministic order).
    st.sideA |= bit;
    if (!cliqueThroughVertexExceeds(st.forbiddenAdj, st.sideA, v, st.p) &&
        pqRec(st, v + 1))
        return true;
    st.sideA &= ~bit;
    st.sideB |= bit;
    if (!cliqueThroughVertexExceeds(st.forcedAdj, st.sideB, v, st.q) &&
        pqRec(st, v + 1))
        return true;
    st.sideB &= ~bit;
    return false;
}

}  // namespace

Certificate pqSplitSolve(const SandwichInstance& inst, int p, int q) {
    if (p <= 0 || q <= 0) throw RangeError("p and q must be positive");
    PqState st;
    st.inst = &inst;
    st.p = p;
    st.q = q;
    st.forbiddenAdj.assign(static_cast<std::size_t>(inst.n), 0);
    st.forcedAdj.assign(static_cast<std::size_t>(inst.n), 0);
    for (const auto& [u, v] : inst.forbidden) {
        st.forbiddenAdj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        st.forbiddenAdj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    for (const auto& [u, v] : inst.forced) {
        st.forcedAdj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        st.forcedAdj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    if (!pqRec(st, 0)) return Certificate::no();

    // A-side: every non-forbidden pair becomes an edge; B-side and cross pairs
    // keep only the forced edges.
    PairSet edges = inst.forced;
    for (int u = 0; u < inst.n; ++u)
        for (int v = u + 1; v < inst.n; ++v)
            if (((st.sideA >> u) & 1) && ((st.sideA >> v) & 1) &&
                !inst.forbidden.count({u, v}))
                edges.insert({u, v});
    if (!validCompletion(inst, edges)) return Certificate::no();
    return Certificate::completionYes(std::move(edges));
}

Certificate searchSolve(const SandwichInstance& inst, const ClassId& cls, std::uint64_t nodeBudget) {
    const auto patterns = fFreePatterns(cls);
    SearchState st;
    st.inst = &inst;
    st.cls = &cls;
    st.patterns = patterns ? &*patterns : nullptr;
    st.free = undeterminedPairs(inst);
    st.budget = nodeBudget;

    PairSet in = inst.forced;
    PairSet out = inst.forbidden;
    PairSet result;
    if (searchRec(st, 0, in, out, result)) return Certificate::completionYes(std::move(result));
    if (st.exhausted) return Certificate::unknown();
    return Certificate::no();
}

}  // namespace sandwich
