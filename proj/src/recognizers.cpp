#include "sandwich/recognizers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sandwich/finite_csp.hpp"
#include "sandwich/reductions.hpp"

namespace sandwich {

FamilySpec FamilySpec::explicitSet(std::vector<int> lengths) {
    for (int l : lengths)
        if (l < 5) throw RangeError("cycle family lengths must be at least 5");
    FamilySpec spec;
    spec.kind = Kind::ExplicitSet;
    spec.lengths = std::move(lengths);
    std::sort(spec.lengths.begin(), spec.lengths.end());
    return spec;
}

bool FamilySpec::contains(int m) const {
    if (kind == Kind::GeometricT) return inT(m);
    return std::binary_search(lengths.begin(), lengths.end(), m);
}

namespace {
ClassId makeClass(ClassId::Tag tag) {
    ClassId c;
    c.tag = tag;
    return c;
}
using Tag = ClassId::Tag;
}  // namespace

ClassId ClassId::split() { return makeClass(Tag::Split); }
ClassId ClassId::threshold() { return makeClass(Tag::Threshold); }
ClassId ClassId::completeMultipartite() { return makeClass(Tag::CompleteMultipartite); }

ClassId ClassId::fFree(std::vector<Graph> patterns) {
    if (patterns.empty()) throw RangeError("FFree needs at least one forbidden graph");
    ClassId c = makeClass(Tag::FFree);
    c.patterns = std::move(patterns);
    return c;
}

ClassId ClassId::perfectKkFree(int k) {
    if (k <= 0) throw RangeError("k must be positive");
    ClassId c = makeClass(Tag::PerfectKkFree);
    c.k = k;
    return c;
}

ClassId ClassId::pqSplit(int p, int q) {
    if (p <= 0 || q <= 0) throw RangeError("p and q must be positive");
    ClassId c = makeClass(Tag::PqSplit);
    c.p = p;
    c.q = q;
    return c;
}

ClassId ClassId::lineOfBipartite() { return makeClass(Tag::LineOfBipartite); }
ClassId ClassId::lineOfBipartiteMulti() { return makeClass(Tag::LineOfBipartiteMulti); }
ClassId ClassId::permutation() { return makeClass(Tag::Permutation); }

ClassId ClassId::cycleFamilyFree(FamilySpec family) {
    ClassId c = makeClass(Tag::CycleFamilyFree);
    c.family = std::move(family);
    return c;
}

ClassId ClassId::pnKkFree(int n, int k) {
    if (n <= 0 || k <= 0) throw RangeError("n and k must be positive");
    ClassId c = makeClass(Tag::PnKkFree);
    c.n = n;
    c.k = k;
    return c;
}

std::string ClassId::name() const {
    switch (tag) {
        case Tag::Split: return "split";
        case Tag::Threshold: return "threshold";
        case Tag::CompleteMultipartite: return "multipartite";
        case Tag::FFree: return "ffree";
        case Tag::PerfectKkFree: return "perfect-kfree:" + std::to_string(k);
        case Tag::PqSplit: return "pqsplit:" + std::to_string(p) + "," + std::to_string(q);
        case Tag::LineOfBipartite: return "line-bip";
        case Tag::LineOfBipartiteMulti: return "line-bip-multi";
        case Tag::Permutation: return "permutation";
        case Tag::CycleFamilyFree: return "cyclefam";
        case Tag::PnKkFree: return "pnkk:" + std::to_string(n) + "," + std::to_string(k);
    }
    return "?";
}

bool inT(int m) {
    if (m < 1) throw RangeError("inT expects a positive integer");
    while (m % 3 == 0) m /= 3;
    return m == 5;
}

namespace {

std::vector<std::uint64_t> adjMasks(int n, const PairSet& pairs) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : pairs) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return adj;
}

bool embedRec(const Graph& pattern, const std::vector<int>& order, std::size_t depth,
              const std::vector<std::uint64_t>& inAdj, const std::vector<std::uint64_t>& outAdj,
              std::vector<int>& assign, std::uint64_t used) {
    if (depth == order.size()) return true;
    const int u = order[depth];
    const int hostN = static_cast<int>(inAdj.size());
    const int degIn = pattern.degree(u);
    const int degOut = pattern.n() - 1 - degIn;
    for (int a = 0; a < hostN; ++a) {
        if ((used >> a) & 1) continue;
        if (std::popcount(inAdj[static_cast<std::size_t>(a)]) < degIn) continue;
        if (std::popcount(outAdj[static_cast<std::size_t>(a)]) < degOut) continue;
        bool ok = true;
        for (std::size_t j = 0; j < depth; ++j) {
            const int w = order[j];
            const int b = assign[static_cast<std::size_t>(w)];
            const std::uint64_t need = pattern.adjacent(u, w) ? inAdj[static_cast<std::size_t>(a)]
                                                              : outAdj[static_cast<std::size_t>(a)];
            if (!((need >> b) & 1)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        assign[static_cast<std::size_t>(u)] = a;
        if (embedRec(pattern, order, depth + 1, inAdj, outAdj, assign, used | (std::uint64_t{1} << a)))
            return true;
    }
    return false;
}

bool hasCliqueRec(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, int k) {
    if (k == 0) return true;
    while (candidates) {
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        if (std::popcount(candidates) + 1 < k) return false;
        if (hasCliqueRec(adj, candidates & adj[static_cast<std::size_t>(v)], k - 1)) return true;
    }
    return false;
}

bool maskIsInducedCycle(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
    const int size = std::popcount(mask);
    if (size < 3) return false;
    int start = -1;
    std::uint64_t rest = mask;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (std::popcount(adj[static_cast<std::size_t>(v)] & mask) != 2) return false;
        start = v;
    }
    // All degrees are 2; connected iff a single cycle.
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[static_cast<std::size_t>(v)] & mask & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return std::popcount(seen) == size;
}

bool cycleDfs(const std::vector<std::uint64_t>& adj, const FamilySpec& spec, int root, int v,
              std::uint64_t onPath, int length, int maxLen, bool restrictAboveRoot) {
    if (length >= 3 && ((adj[static_cast<std::size_t>(v)] >> root) & 1) && spec.contains(length))
        return true;
    if (length == maxLen) return false;
    std::uint64_t next = adj[static_cast<std::size_t>(v)] & ~onPath;
    while (next) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        if (restrictAboveRoot && w < root) continue;
        if (w == root) continue;
        if (cycleDfs(adj, spec, root, w, onPath | (std::uint64_t{1} << w), length + 1, maxLen,
                     restrictAboveRoot))
            return true;
    }
    return false;
}

int maxUsableLength(const Graph& g, const FamilySpec& spec) {
    for (int l = g.n(); l >= 3; --l)
        if (spec.contains(l)) return l;
    return 0;
}

}  // namespace

bool hasInducedEmbedding(int hostN, const PairSet& in, const PairSet& out, const Graph& pattern) {
    if (pattern.n() > 10) throw SizeError("forbidden patterns capped at 10 vertices");
    if (pattern.n() > hostN) return false;
    if (hostN > kMaxVertices) throw SizeError("host exceeds vertex cap");
    const auto inAdj = adjMasks(hostN, in);
    const auto outAdj = adjMasks(hostN, out);
    // Most-constrained-first: descending pattern degree.
    std::vector<int> order(static_cast<std::size_t>(pattern.n()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    std::vector<int> assign(static_cast<std::size_t>(pattern.n()), -1);
    return embedRec(pattern, order, 0, inAdj, outAdj, assign, 0);
}

bool isFFree(const Graph& g, const std::vector<Graph>& forbidden) {
    const PairSet in = g.edges();
    const PairSet out = g.nonEdges();
    for (const Graph& pattern : forbidden)
        if (hasInducedEmbedding(g.n(), in, out, pattern)) return false;
    return true;
}

bool isSplit(const Graph& g) {
    // Degree-sequence characterization: with d1 >= ... >= dn and m the largest
    // index with d_m >= m - 1, split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
    const int n = g.n();
    std::vector<long long> d;
    d.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) d.push_back(g.degree(v));
    std::sort(d.rbegin(), d.rend());
    long long m = 0;
    for (int i = 0; i < n; ++i)
        if (d[static_cast<std::size_t>(i)] >= i) m = i + 1;
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i) (i < m ? head : tail) += d[static_cast<std::size_t>(i)];
    return head == m * (m - 1) + tail;
}

bool isThreshold(const Graph& g) {
    std::uint64_t alive = (g.n() == 64) ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << g.n()) - 1;
    auto adj = adjMasks(g.n(), g.edges());
    int remaining = g.n();
    while (remaining > 0) {
        int pick = -1;
        std::uint64_t scan = alive;
        while (scan) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            const int deg = std::popcount(adj[static_cast<std::size_t>(v)] & alive);
            if (deg == 0 || deg == remaining - 1) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return false;
        alive &= ~(std::uint64_t{1} << pick);
        --remaining;
    }
    return true;
}

bool isCompleteMultipartite(const Graph& g) {
    // Non-adjacency must be transitive: no induced K2 + K1.
    const Graph co = g.complement();
    auto adj = adjMasks(co.n(), co.edges());
    std::uint64_t unseen = (co.n() == 0) ? 0 : ((co.n() == 64) ? ~std::uint64_t{0}
                                                               : (std::uint64_t{1} << co.n()) - 1);
    while (unseen) {
        const int start = std::countr_zero(unseen);
        std::uint64_t comp = std::uint64_t{1} << start;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[static_cast<std::size_t>(v)] & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        std::uint64_t members = comp;
        while (members) {
            const int v = std::countr_zero(members);
            members &= members - 1;
            if ((adj[static_cast<std::size_t>(v)] & comp) != (comp & ~(std::uint64_t{1} << v)))
                return false;
        }
        unseen &= ~comp;
    }
    return true;
}

bool isPerfectSmall(const Graph& g) {
    if (g.n() > 12) throw SizeError("perfection test capped at 12 vertices");
    const auto adj = adjMasks(g.n(), g.edges());
    const Graph co = g.complement();
    const auto coAdj = adjMasks(co.n(), co.edges());
    const std::uint64_t full = (g.n() == 0) ? 0 : (std::uint64_t{1} << g.n()) - 1;
    for (std::uint64_t mask = 0; mask <= full && full; ++mask) {
        const int size = std::popcount(mask);
        if (size < 5 || size % 2 == 0) continue;
        if (maskIsInducedCycle(adj, mask) || maskIsInducedCycle(coAdj, mask)) return false;
        if (mask == full) break;
    }
    return true;
}

int cliqueNumber(const Graph& g) {
    const auto adj = adjMasks(g.n(), g.edges());
    const std::uint64_t full = (g.n() == 0) ? 0 : ((g.n() == 64) ? ~std::uint64_t{0}
                                                                 : (std::uint64_t{1} << g.n()) - 1);
    int k = 0;
    while (k < g.n() && hasCliqueRec(adj, full, k + 1)) ++k;
    return k;
}

int independenceNumber(const Graph& g) { return cliqueNumber(g.complement()); }

bool isPqSplitSmall(const Graph& g, int p, int q) {
    if (g.n() > 16) throw SizeError("(p,q)-split test capped at 16 vertices");
    if (p <= 0 || q <= 0) throw RangeError("p and q must be positive");
    const auto adj = adjMasks(g.n(), g.edges());
    std::vector<std::uint64_t> coAdj(adj.size());
    const std::uint64_t full = (g.n() == 0) ? 0 : (std::uint64_t{1} << g.n()) - 1;
    for (int v = 0; v < g.n(); ++v)
        coAdj[static_cast<std::size_t>(v)] = full & ~adj[static_cast<std::size_t>(v)] &
                                             ~(std::uint64_t{1} << v);
    for (std::uint64_t a = 0;; ++a) {
        // G[a] needs independence <= p, G[~a] needs clique <= q.
        if (!hasCliqueRec(coAdj, a, p + 1) && !hasCliqueRec(adj, full & ~a, q + 1)) return true;
        if (a == full) break;
    }
    return false;
}

bool isLineOfBipartite(const Graph& g) {
    if (g.n() < 2) return true;  // empty graph and K1 count as members
    SandwichInstance inst = makeInstance(g.n(), g.edges(), g.nonEdges());
    const StructureInstance csp = lineBipToA(inst);
    return homSearch(csp, structA()).isYes();
}

bool isLineOfBipartiteMulti(const Graph& g) {
    if (g.n() > 10) throw SizeError("multigraph line recognition capped at 10 vertices");
    // Contract co-twin classes (adjacent, equal closed neighbourhoods), then test the quotient.
    const auto adj = adjMasks(g.n(), g.edges());
    std::vector<int> cls(static_cast<std::size_t>(g.n()), -1);
    int numClasses = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (cls[static_cast<std::size_t>(v)] >= 0) continue;
        cls[static_cast<std::size_t>(v)] = numClasses;
        const std::uint64_t closedV = adj[static_cast<std::size_t>(v)] | (std::uint64_t{1} << v);
        for (int u = v + 1; u < g.n(); ++u) {
            if (cls[static_cast<std::size_t>(u)] >= 0) continue;
            const std::uint64_t closedU = adj[static_cast<std::size_t>(u)] | (std::uint64_t{1} << u);
            if (g.adjacent(u, v) && closedU == closedV) cls[static_cast<std::size_t>(u)] = numClasses;
        }
        ++numClasses;
    }
    PairSet quotientEdges;
    for (const auto& [u, v] : g.edges()) {
        const int cu = cls[static_cast<std::size_t>(u)];
        const int cv = cls[static_cast<std::size_t>(v)];
        if (cu != cv) quotientEdges.insert(makePair(cu, cv));
    }
    return isLineOfBipartite(Graph(numClasses, quotientEdges));
}

namespace {

// Given a prefix of the first order, the second order is forced: for placed u before x,
// u precedes x on the second line iff ux is a non-edge. Feasibility = the forced relation
// stays transitive.
bool permutationRec(const Graph& g, std::vector<std::vector<bool>>& less2, std::vector<int>& placed,
                    std::uint64_t used) {
    const std::size_t n = static_cast<std::size_t>(g.n());
    if (placed.size() == n) return true;
    for (int x = 0; x < g.n(); ++x) {
        if ((used >> x) & 1) continue;
        for (int u : placed) {
            if (g.adjacent(u, x)) {
                less2[static_cast<std::size_t>(x)][static_cast<std::size_t>(u)] = true;
            } else {
                less2[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)] = true;
            }
        }
        bool ok = true;
        for (std::size_t i = 0; i < placed.size() && ok; ++i) {
            const auto u = static_cast<std::size_t>(placed[i]);
            const auto xs = static_cast<std::size_t>(x);
            // Transitivity through the newcomer.
            for (std::size_t j = 0; j < placed.size() && ok; ++j) {
                const auto w = static_cast<std::size_t>(placed[j]);
                if (less2[u][xs] && less2[xs][w] && !less2[u][w]) ok = false;
            }
        }
        if (ok) {
            placed.push_back(x);
            if (permutationRec(g, less2, placed, used | (std::uint64_t{1} << x))) return true;
            placed.pop_back();
        }
        for (int u : placed) {
            less2[static_cast<std::size_t>(x)][static_cast<std::size_t>(u)] = false;
            less2[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)] = false;
        }
    }
    return false;
}

}  // namespace

bool isPermutationSmall(const Graph& g) {
    if (g.n() > 10) throw SizeError("permutation recognition capped at 10 vertices");
    if (g.n() <= 2) return true;
    std::vector<std::vector<bool>> less2(static_cast<std::size_t>(g.n()),
                                         std::vector<bool>(static_cast<std::size_t>(g.n()), false));
    std::vector<int> placed;
    return permutationRec(g, less2, placed, 0);
}

bool containsCycleIn(const Graph& g, const FamilySpec& spec) {
    if (g.n() > 20) throw SizeError("cycle family search capped at 20 vertices");
    const int maxLen = maxUsableLength(g, spec);
    if (maxLen == 0) return false;
    const auto adj = adjMasks(g.n(), g.edges());
    for (int root = 0; root < g.n(); ++root)
        if (cycleDfs(adj, spec, root, root, std::uint64_t{1} << root, 1, maxLen, true)) return true;
    return false;
}

bool containsCycleThrough(const Graph& g, int anchor, const FamilySpec& spec) {
    if (anchor < 0 || anchor >= g.n()) throw RangeError("anchor out of range");
    const int maxLen = maxUsableLength(g, spec);
    if (maxLen == 0) return false;
    const auto adj = adjMasks(g.n(), g.edges());
    return cycleDfs(adj, spec, anchor, anchor, std::uint64_t{1} << anchor, 1, maxLen, false);
}

bool isBipartite(const Graph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (colour[static_cast<std::size_t>(s)] >= 0) continue;
        colour[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < g.n(); ++w) {
                if (!g.adjacent(v, w)) continue;
                if (colour[static_cast<std::size_t>(w)] < 0) {
                    colour[static_cast<std::size_t>(w)] = 1 - colour[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (colour[static_cast<std::size_t>(w)] == colour[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool recognize(const Graph& g, const ClassId& cls) {
    switch (cls.tag) {
        case ClassId::Tag::Split: return isSplit(g);
        case ClassId::Tag::Threshold: return isThreshold(g);
        case ClassId::Tag::CompleteMultipartite: return isCompleteMultipartite(g);
        case ClassId::Tag::FFree: return isFFree(g, cls.patterns);
        case ClassId::Tag::PerfectKkFree:
            return cliqueNumber(g) < cls.k && isPerfectSmall(g);
        case ClassId::Tag::PqSplit: return isPqSplitSmall(g, cls.p, cls.q);
        case ClassId::Tag::LineOfBipartite: return isLineOfBipartite(g);
        case ClassId::Tag::LineOfBipartiteMulti: return isLineOfBipartiteMulti(g);
        case ClassId::Tag::Permutation: return isPermutationSmall(g);
        case ClassId::Tag::CycleFamilyFree: return !containsCycleIn(g, cls.family);
        case ClassId::Tag::PnKkFree:
            return isFFree(g, {Graph::path(cls.n), Graph::complete(cls.k)});
    }
    throw UnsupportedClassError("unknown class tag");
}

std::optional<std::vector<Graph>> fFreePatterns(const ClassId& cls) {
    switch (cls.tag) {
        case ClassId::Tag::Split:
            return std::vector<Graph>{Graph(4, {{0, 1}, {2, 3}}), Graph::cycle(4), Graph::cycle(5)};
        case ClassId::Tag::Threshold:
            return std::vector<Graph>{Graph(4, {{0, 1}, {2, 3}}), Graph::cycle(4), Graph::path(4)};
        case ClassId::Tag::CompleteMultipartite:
            return std::vector<Graph>{Graph(3, {{0, 1}})};  // K2 + K1
        case ClassId::Tag::FFree: return cls.patterns;
        case ClassId::Tag::PnKkFree:
            return std::vector<Graph>{Graph::path(cls.n), Graph::complete(cls.k)};
        default: return std::nullopt;
    }
}

namespace {

std::vector<std::string> splitArg(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        parts.push_back(s.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return parts;
}

int argInt(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + s + "'");
    }
    if (used != s.size()) throw ParseError("bad integer '" + s + "'");
    return v;
}

}  // namespace

ClassId parseClassName(const std::string& name, const std::vector<Graph>& ffreePatterns) {
    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
    if (head == "split") return ClassId::split();
    if (head == "threshold") return ClassId::threshold();
    if (head == "multipartite") return ClassId::completeMultipartite();
    if (head == "line-bip") return ClassId::lineOfBipartite();
    if (head == "line-bip-multi") return ClassId::lineOfBipartiteMulti();
    if (head == "permutation") return ClassId::permutation();
    if (head == "ffree") return ClassId::fFree(ffreePatterns);
    if (head == "perfect-kfree") return ClassId::perfectKkFree(argInt(arg));
    if (head == "pqsplit") {
        const auto parts = splitArg(arg);
        if (parts.size() != 2) throw ParseError("pqsplit needs p,q");
        return ClassId::pqSplit(argInt(parts[0]), argInt(parts[1]));
    }
    if (head == "pnkk") {
        const auto parts = splitArg(arg);
        if (parts.size() != 2) throw ParseError("pnkk needs n,k");
        return ClassId::pnKkFree(argInt(parts[0]), argInt(parts[1]));
    }
    if (head == "cyclefam") {
        if (arg.empty() || arg == "T") return ClassId::cycleFamilyFree(FamilySpec::geometricT());
        std::vector<int> lengths;
        for (const auto& tok : splitArg(arg)) lengths.push_back(argInt(tok));
        return ClassId::cycleFamilyFree(FamilySpec::explicitSet(std::move(lengths)));
    }
    throw UnsupportedClassError("unknown class " + name);
}

}  // namespace sandwich
