#include "sandwich/poly_solvers.hpp"

#include <algorithm>
#include <numeric>

#include "sandwich/recognizers.hpp"

namespace sandwich {

Certificate solveMultipartite(const SandwichInstance& inst) {
    // Union the endpoints of every forbidden pair: complete multipartite
    // non-adjacency is an equivalence relation.
    std::vector<int> part(static_cast<std::size_t>(inst.n));
    std::iota(part.begin(), part.end(), 0);
    const auto root = [&part](int x) {
        while (part[static_cast<std::size_t>(x)] != x) {
            part[static_cast<std::size_t>(x)] =
                part[static_cast<std::size_t>(part[static_cast<std::size_t>(x)])];
            x = part[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& [u, v] : inst.forbidden) part[static_cast<std::size_t>(root(u))] = root(v);
    for (const auto& [u, v] : inst.forced)
        if (root(u) == root(v)) return Certificate::no();

    PairSet edges;
    for (int u = 0; u < inst.n; ++u)
        for (int v = u + 1; v < inst.n; ++v)
            if (root(u) != root(v)) edges.insert({u, v});
    if (!validCompletion(inst, edges) || !isCompleteMultipartite(Graph(inst.n, edges)))
        return Certificate::no();
    return Certificate::completionYes(std::move(edges));
}

namespace {

// 2-SAT by implication-graph SCC (Tarjan); literal 2v = "x_v", 2v+1 = "not x_v".
class TwoSat {
   public:
    explicit TwoSat(int vars) : n_(vars), adj_(static_cast<std::size_t>(2 * vars)) {}

    // (a or b) with literals given as (var, isPositive).
    void addClause(int u, bool up, int v, bool vp) {
        const int a = lit(u, up), b = lit(v, vp);
        adj_[static_cast<std::size_t>(a ^ 1)].push_back(b);
        adj_[static_cast<std::size_t>(b ^ 1)].push_back(a);
    }

    bool solve(std::vector<char>& value) {
        const int m = 2 * n_;
        comp_.assign(static_cast<std::size_t>(m), -1);
        low_.assign(static_cast<std::size_t>(m), 0);
        num_.assign(static_cast<std::size_t>(m), -1);
        onStack_.assign(static_cast<std::size_t>(m), 0);
        for (int v = 0; v < m; ++v)
            if (num_[static_cast<std::size_t>(v)] < 0) tarjan(v);
        value.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v) {
            const int ct = comp_[static_cast<std::size_t>(2 * v)];
            const int cf = comp_[static_cast<std::size_t>(2 * v + 1)];
            if (ct == cf) return false;
            value[static_cast<std::size_t>(v)] = ct < cf ? 1 : 0;
        }
        return true;
    }

   private:
    static int lit(int v, bool positive) { return 2 * v + (positive ? 0 : 1); }

    void tarjan(int start) {
        // Iterative DFS; components are numbered sinks-first.
        std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
        while (!stack.empty()) {
            auto& [v, ei] = stack.back();
            if (ei == 0) {
                num_[static_cast<std::size_t>(v)] = low_[static_cast<std::size_t>(v)] = counter_++;
                scc_.push_back(v);
                onStack_[static_cast<std::size_t>(v)] = 1;
            }
            if (ei < adj_[static_cast<std::size_t>(v)].size()) {
                const int w = adj_[static_cast<std::size_t>(v)][ei++];
                if (num_[static_cast<std::size_t>(w)] < 0) {
                    stack.push_back({w, 0});
                } else if (onStack_[static_cast<std::size_t>(w)]) {
                    low_[static_cast<std::size_t>(v)] =
                        std::min(low_[static_cast<std::size_t>(v)], num_[static_cast<std::size_t>(w)]);
                }
                continue;
            }
            if (low_[static_cast<std::size_t>(v)] == num_[static_cast<std::size_t>(v)]) {
                while (true) {
                    const int w = scc_.back();
                    scc_.pop_back();
                    onStack_[static_cast<std::size_t>(w)] = 0;
                    comp_[static_cast<std::size_t>(w)] = compCount_;
                    if (w == v) break;
                }
                ++compCount_;
            }
            stack.pop_back();
            if (!stack.empty()) {
                const int parent = stack.back().first;
                low_[static_cast<std::size_t>(parent)] =
                    std::min(low_[static_cast<std::size_t>(parent)], low_[static_cast<std::size_t>(v)]);
            }
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> comp_, low_, num_, scc_;
    std::vector<char> onStack_;
    int counter_ = 0, compCount_ = 0;
};

}  // namespace

Certificate solveSplit(const SandwichInstance& inst) {
    TwoSat sat(inst.n);
    for (const auto& [u, v] : inst.forced) sat.addClause(u, true, v, true);
    for (const auto& [u, v] : inst.forbidden) sat.addClause(u, false, v, false);
    std::vector<char> clique;
    if (!sat.solve(clique)) return Certificate::no();

    PairSet edges = inst.forced;
    for (int u = 0; u < inst.n; ++u)
        for (int v = u + 1; v < inst.n; ++v)
            if (clique[static_cast<std::size_t>(u)] && clique[static_cast<std::size_t>(v)])
                edges.insert({u, v});
    if (!validCompletion(inst, edges) || !isSplit(Graph(inst.n, edges))) return Certificate::no();
    return Certificate::completionYes(std::move(edges));
}

Certificate solveThreshold(const SandwichInstance& inst, bool tieBreakHighest) {
    std::vector<std::uint64_t> forcedAdj(static_cast<std::size_t>(inst.n), 0);
    std::vector<std::uint64_t> forbiddenAdj(static_cast<std::size_t>(inst.n), 0);
    for (const auto& [u, v] : inst.forced) {
        forcedAdj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        forcedAdj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    for (const auto& [u, v] : inst.forbidden) {
        forbiddenAdj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        forbiddenAdj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    std::uint64_t remaining = inst.n == 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << inst.n) - 1;
    std::vector<std::pair<int, bool>> peel;  // (vertex, removedAsUniversal)
    while (remaining) {
        int pick = -1;
        bool universal = false;
        for (int i = 0; i < inst.n; ++i) {
            const int v = tieBreakHighest ? inst.n - 1 - i : i;
            if (!((remaining >> v) & 1)) continue;
            const std::uint64_t others = remaining & ~(std::uint64_t{1} << v);
            if ((forcedAdj[static_cast<std::size_t>(v)] & others) == 0) {
                pick = v;
                universal = false;
                break;
            }
            if ((forbiddenAdj[static_cast<std::size_t>(v)] & others) == 0) {
                pick = v;
                universal = true;
                break;
            }
        }
        if (pick < 0) return Certificate::no();
        peel.push_back({pick, universal});
        remaining &= ~(std::uint64_t{1} << pick);
    }

    // Replay in reverse: a universal vertex joins everything already present.
    PairSet edges;
    std::vector<int> present;
    for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
        if (it->second)
            for (int w : present) edges.insert(makePair(it->first, w));
        present.push_back(it->first);
    }
    if (!validCompletion(inst, edges) || !isThreshold(Graph(inst.n, edges))) return Certificate::no();
    return Certificate::completionYes(std::move(edges));
}

}  // namespace sandwich
