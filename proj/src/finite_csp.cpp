#include "sandwich/finite_csp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace sandwich {

FiniteStructure structA() {
    FiniteStructure a;
    a.domainSize = 3;  // b=0, g=1, r=2
    a.signature = {{"U_N", 1}, {"U_E", 1}, {"T", 3}};
    a.relations["U_N"] = {{2}};
    a.relations["U_E"] = {{0}, {1}};
    const std::vector<std::vector<int>> bases = {
        {0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0, 2, 2}, {1, 2, 2}, {0, 1, 2}};
    std::set<std::vector<int>> t;
    for (auto base : bases) {
        std::sort(base.begin(), base.end());
        do t.insert(base);
        while (std::next_permutation(base.begin(), base.end()));
    }
    a.relations["T"] = std::move(t);
    return a;
}

FiniteStructure structK() {
    FiniteStructure k;
    k.domainSize = 2;  // 0 = independent side, 1 = clique side
    k.signature = {{"B", 2}, {"R", 2}};
    k.relations["B"] = {{0, 1}, {1, 0}, {1, 1}};
    k.relations["R"] = {{0, 0}, {0, 1}, {1, 0}};
    return k;
}

FiniteStructure oneInThree() {
    FiniteStructure s;
    s.domainSize = 2;
    s.signature = {{"R", 3}};
    s.relations["R"] = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    return s;
}

FiniteStructure cliqueStructure(int k) {
    if (k <= 0) throw RangeError("clique size must be positive");
    FiniteStructure s;
    s.domainSize = k;
    s.signature = {{"E", 2}};
    std::set<std::vector<int>> rel;
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            if (u != v) rel.insert({u, v});
    s.relations["E"] = std::move(rel);
    return s;
}

FiniteStructure graphStructure(const Graph& g) {
    FiniteStructure s;
    s.domainSize = std::max(g.n(), 1);
    s.signature = {{"E", 2}};
    std::set<std::vector<int>> rel;
    for (const auto& [u, v] : g.edges()) {
        rel.insert({u, v});
        rel.insert({v, u});
    }
    s.relations["E"] = std::move(rel);
    return s;
}

FiniteStructure gridStructure(int m) {
    if (m <= 0) throw RangeError("grid side must be positive");
    if (m * m > 100000) throw SizeError("grid template too large");
    FiniteStructure s;
    s.domainSize = m * m;  // cell (row, col) = row * m + col
    s.signature = {{"B", 2}, {"R", 2}};
    std::set<std::vector<int>> blue, red;
    for (int a = 0; a < m * m; ++a)
        for (int b = 0; b < m * m; ++b) {
            if (a == b) continue;
            const bool sameRow = a / m == b / m;
            const bool sameCol = a % m == b % m;
            if (sameRow || sameCol)
                blue.insert({a, b});
            else
                red.insert({a, b});
        }
    s.relations["B"] = std::move(blue);
    s.relations["R"] = std::move(red);
    return s;
}

StructureInstance graphInstance(const Graph& g, const std::string& edgeSymbol) {
    StructureInstance inst;
    inst.variableCount = g.n();
    for (const auto& [u, v] : g.edges()) inst.constraints.push_back({edgeSymbol, {u, v}});
    return inst;
}

namespace {

struct CompiledConstraint {
    std::vector<int> vars;
    const std::vector<std::vector<int>>* tuples;
};

using Domains = std::vector<std::vector<char>>;

bool tupleSupported(const CompiledConstraint& c, const std::vector<int>& t, const Domains& dom) {
    for (std::size_t j = 0; j < c.vars.size(); ++j)
        if (!dom[static_cast<std::size_t>(c.vars[j])][static_cast<std::size_t>(t[j])]) return false;
    // Repeated variables must take equal values.
    for (std::size_t j = 0; j < c.vars.size(); ++j)
        for (std::size_t k = j + 1; k < c.vars.size(); ++k)
            if (c.vars[j] == c.vars[k] && t[j] != t[k]) return false;
    return true;
}

// AC fixpoint; returns false on a wiped-out domain.
bool propagate(const std::vector<CompiledConstraint>& constraints,
               const std::vector<std::vector<int>>& constraintsOfVar, Domains& dom,
               std::deque<int>& queue, std::vector<char>& queued) {
    while (!queue.empty()) {
        const int ci = queue.front();
        queue.pop_front();
        queued[static_cast<std::size_t>(ci)] = 0;
        const CompiledConstraint& c = constraints[static_cast<std::size_t>(ci)];
        for (std::size_t pos = 0; pos < c.vars.size(); ++pos) {
            const int v = c.vars[pos];
            auto& dv = dom[static_cast<std::size_t>(v)];
            bool changed = false;
            for (std::size_t val = 0; val < dv.size(); ++val) {
                if (!dv[val]) continue;
                bool supported = false;
                for (const auto& t : *c.tuples) {
                    if (static_cast<std::size_t>(t[pos]) != val) continue;
                    if (tupleSupported(c, t, dom)) {
                        supported = true;
                        break;
                    }
                }
                if (!supported) {
                    dv[val] = 0;
                    changed = true;
                }
            }
            if (changed) {
                if (std::none_of(dv.begin(), dv.end(), [](char x) { return x != 0; })) return false;
                for (int other : constraintsOfVar[static_cast<std::size_t>(v)]) {
                    if (!queued[static_cast<std::size_t>(other)]) {
                        queued[static_cast<std::size_t>(other)] = 1;
                        queue.push_back(other);
                    }
                }
            }
        }
    }
    return true;
}

bool solveRec(const std::vector<CompiledConstraint>& constraints,
              const std::vector<std::vector<int>>& constraintsOfVar, Domains dom,
              std::vector<int>& assignment) {
    // Smallest live domain first, lowest variable index breaking ties.
    int best = -1;
    std::size_t bestCount = 0;
    for (std::size_t v = 0; v < dom.size(); ++v) {
        const auto count = static_cast<std::size_t>(
            std::count(dom[v].begin(), dom[v].end(), static_cast<char>(1)));
        if (count > 1 && (best < 0 || count < bestCount)) {
            best = static_cast<int>(v);
            bestCount = count;
        }
    }
    if (best < 0) {
        for (std::size_t v = 0; v < dom.size(); ++v)
            assignment[v] = static_cast<int>(
                std::find(dom[v].begin(), dom[v].end(), static_cast<char>(1)) - dom[v].begin());
        return true;
    }
    for (std::size_t val = 0; val < dom[static_cast<std::size_t>(best)].size(); ++val) {
        if (!dom[static_cast<std::size_t>(best)][val]) continue;
        Domains next = dom;
        auto& dv = next[static_cast<std::size_t>(best)];
        std::fill(dv.begin(), dv.end(), 0);
        dv[val] = 1;
        std::deque<int> queue;
        std::vector<char> queued(constraints.size(), 0);
        for (int ci : constraintsOfVar[static_cast<std::size_t>(best)]) {
            queued[static_cast<std::size_t>(ci)] = 1;
            queue.push_back(ci);
        }
        if (propagate(constraints, constraintsOfVar, next, queue, queued) &&
            solveRec(constraints, constraintsOfVar, std::move(next), assignment))
            return true;
    }
    return false;
}

}  // namespace

Certificate homSearch(const StructureInstance& inst, const FiniteStructure& tmpl) {
    tmpl.validate();
    inst.validateAgainst(tmpl);

    std::vector<CompiledConstraint> constraints;
    std::map<std::string, std::vector<std::vector<int>>> tupleLists;
    for (const auto& [sym, tuples] : tmpl.relations)
        tupleLists[sym] = std::vector<std::vector<int>>(tuples.begin(), tuples.end());
    // Constraints on an empty relation are unsatisfiable outright.
    for (const auto& [sym, vars] : inst.constraints) {
        auto it = tupleLists.find(sym);
        if (it == tupleLists.end() || it->second.empty()) return Certificate::no();
        constraints.push_back({vars, &it->second});
    }

    const auto m = static_cast<std::size_t>(inst.variableCount);
    std::vector<std::vector<int>> constraintsOfVar(m);
    for (std::size_t ci = 0; ci < constraints.size(); ++ci)
        for (int v : constraints[ci].vars) {
            auto& list = constraintsOfVar[static_cast<std::size_t>(v)];
            if (list.empty() || list.back() != static_cast<int>(ci)) list.push_back(static_cast<int>(ci));
        }

    Domains dom(m, std::vector<char>(static_cast<std::size_t>(tmpl.domainSize), 1));
    std::deque<int> queue;
    std::vector<char> queued(constraints.size(), 1);
    for (std::size_t ci = 0; ci < constraints.size(); ++ci) queue.push_back(static_cast<int>(ci));
    if (!propagate(constraints, constraintsOfVar, dom, queue, queued)) return Certificate::no();

    std::vector<int> assignment(m, 0);
    if (!solveRec(constraints, constraintsOfVar, std::move(dom), assignment)) return Certificate::no();
    return Certificate::homYes(std::move(assignment));
}

FiniteStructure structurePower(const FiniteStructure& tmpl, int k) {
    tmpl.validate();
    if (k < 1) throw RangeError("power exponent must be positive");
    long long size = 1;
    for (int i = 0; i < k; ++i) {
        size *= tmpl.domainSize;
        if (size > 100000) throw SizeError("power domain exceeds 10^5");
    }
    FiniteStructure out;
    out.domainSize = static_cast<int>(size);
    out.signature = tmpl.signature;
    const int d = tmpl.domainSize;
    for (const auto& [sym, tuples] : tmpl.relations) {
        const int r = tmpl.arity(sym);
        std::vector<std::vector<int>> list(tuples.begin(), tuples.end());
        std::set<std::vector<int>> rel;
        // Enumerate |R|^k coordinate choices.
        std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
        if (!list.empty()) {
            while (true) {
                std::vector<int> tuple(static_cast<std::size_t>(r), 0);
                for (int i = 0; i < r; ++i) {
                    int code = 0;
                    for (int j = k - 1; j >= 0; --j)
                        code = code * d + list[pick[static_cast<std::size_t>(j)]][static_cast<std::size_t>(i)];
                    tuple[static_cast<std::size_t>(i)] = code;
                }
                rel.insert(std::move(tuple));
                int j = 0;
                while (j < k) {
                    if (++pick[static_cast<std::size_t>(j)] < list.size()) break;
                    pick[static_cast<std::size_t>(j)] = 0;
                    ++j;
                }
                if (j == k) break;
            }
        }
        out.relations[sym] = std::move(rel);
    }
    return out;
}

namespace {

int findRoot(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

}  // namespace

std::optional<OperationTable> hasSiggers(const FiniteStructure& tmpl) {
    tmpl.validate();
    const int d = tmpl.domainSize;
    if (d > 4) throw SizeError("Siggers search capped at 4-element domains");
    const int cells = d * d * d * d;
    const auto idx = [d](int a, int b, int c, int e) { return ((a * d + b) * d + c) * d + e; };

    // Merge cells identified by f(a,r,e,a) = f(r,a,r,e).
    std::vector<int> parent(static_cast<std::size_t>(cells));
    std::iota(parent.begin(), parent.end(), 0);
    for (int a = 0; a < d; ++a)
        for (int r = 0; r < d; ++r)
            for (int e = 0; e < d; ++e) {
                const int x = findRoot(parent, idx(a, r, e, a));
                const int y = findRoot(parent, idx(r, a, r, e));
                parent[static_cast<std::size_t>(x)] = y;
            }
    std::map<int, int> repToVar;
    std::vector<int> cellVar(static_cast<std::size_t>(cells));
    for (int c = 0; c < cells; ++c) {
        const int root = findRoot(parent, c);
        auto [it, inserted] = repToVar.try_emplace(root, static_cast<int>(repToVar.size()));
        cellVar[static_cast<std::size_t>(c)] = it->second;
    }

    // Indicator CSP: one constraint per 4-tuple of relation tuples.
    StructureInstance inst;
    inst.variableCount = static_cast<int>(repToVar.size());
    std::set<std::pair<std::string, std::vector<int>>> dedup;
    for (const auto& [sym, tuples] : tmpl.relations) {
        const int r = tmpl.arity(sym);
        std::vector<std::vector<int>> list(tuples.begin(), tuples.end());
        for (const auto& t1 : list)
            for (const auto& t2 : list)
                for (const auto& t3 : list)
                    for (const auto& t4 : list) {
                        std::vector<int> vars(static_cast<std::size_t>(r));
                        for (int i = 0; i < r; ++i)
                            vars[static_cast<std::size_t>(i)] =
                                cellVar[static_cast<std::size_t>(idx(t1[static_cast<std::size_t>(i)],
                                                                     t2[static_cast<std::size_t>(i)],
                                                                     t3[static_cast<std::size_t>(i)],
                                                                     t4[static_cast<std::size_t>(i)]))];
                        dedup.insert({sym, std::move(vars)});
                    }
    }
    inst.constraints.assign(dedup.begin(), dedup.end());

    const Certificate result = homSearch(inst, tmpl);
    if (!result.isYes()) return std::nullopt;
    OperationTable table(static_cast<std::size_t>(cells));
    for (int c = 0; c < cells; ++c)
        table[static_cast<std::size_t>(c)] = result.hom[static_cast<std::size_t>(cellVar[static_cast<std::size_t>(c)])];
    if (!validateSiggersTable(tmpl, table))
        throw std::logic_error("Siggers search produced a table its validator rejects");
    return table;
}

bool isPolymorphism(const FiniteStructure& tmpl, const std::vector<int>& table, int arity) {
    const int d = tmpl.domainSize;
    long long cells = 1;
    for (int i = 0; i < arity; ++i) cells *= d;
    if (static_cast<long long>(table.size()) != cells) return false;
    for (int v : table)
        if (v < 0 || v >= d) return false;

    for (const auto& [sym, tuples] : tmpl.relations) {
        const int r = tmpl.arity(sym);
        std::vector<std::vector<int>> list(tuples.begin(), tuples.end());
        if (list.empty()) continue;
        std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
        while (true) {
            std::vector<int> image(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) {
                long long code = 0;
                for (int j = 0; j < arity; ++j)
                    code = code * d + list[pick[static_cast<std::size_t>(j)]][static_cast<std::size_t>(i)];
                image[static_cast<std::size_t>(i)] = table[static_cast<std::size_t>(code)];
            }
            if (!tuples.count(image)) return false;
            int j = arity - 1;
            while (j >= 0) {
                if (++pick[static_cast<std::size_t>(j)] < list.size()) break;
                pick[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
        }
    }
    return true;
}

bool validateSiggersTable(const FiniteStructure& tmpl, const OperationTable& table) {
    const int d = tmpl.domainSize;
    const auto idx = [d](int a, int b, int c, int e) {
        return static_cast<std::size_t>(((a * d + b) * d + c) * d + e);
    };
    if (static_cast<int>(table.size()) != d * d * d * d) return false;
    for (int a = 0; a < d; ++a)
        for (int r = 0; r < d; ++r)
            for (int e = 0; e < d; ++e)
                if (table[idx(a, r, e, a)] != table[idx(r, a, r, e)]) return false;
    return isPolymorphism(tmpl, table, 4);
}

PolymorphismEnumeration enumeratePolymorphismsNaive(const FiniteStructure& tmpl, int arity,
                                                    bool requireSiggers, std::size_t maxSamples) {
    tmpl.validate();
    if (arity < 1) throw RangeError("arity must be positive");
    const int d = tmpl.domainSize;
    long long cells = 1;
    for (int i = 0; i < arity; ++i) {
        cells *= d;
        if (cells > 64) throw SizeError("naive enumeration: too many cells");
    }
    double total = 1;
    for (long long i = 0; i < cells; ++i) {
        total *= d;
        if (total > 1e6) throw SizeError("naive enumeration: too many candidate tables");
    }
    const auto numTables = static_cast<long long>(total);
    if (requireSiggers && arity != 4)
        throw RangeError("the Siggers identity applies to arity 4");

    PolymorphismEnumeration out;
    std::vector<int> table(static_cast<std::size_t>(cells), 0);
    for (long long candidate = 0; candidate < numTables; ++candidate) {
        long long rest = candidate;
        for (long long i = 0; i < cells; ++i) {
            table[static_cast<std::size_t>(i)] = static_cast<int>(rest % d);
            rest /= d;
        }
        if (requireSiggers) {
            const auto idx = [d](int a, int b, int c, int e) {
                return static_cast<std::size_t>(((a * d + b) * d + c) * d + e);
            };
            bool identityOk = true;
            for (int a = 0; a < d && identityOk; ++a)
                for (int r = 0; r < d && identityOk; ++r)
                    for (int e = 0; e < d && identityOk; ++e)
                        if (table[idx(a, r, e, a)] != table[idx(r, a, r, e)]) identityOk = false;
            if (!identityOk) continue;
        }
        if (isPolymorphism(tmpl, table, arity)) {
            ++out.count;
            if (out.sampleTables.size() < maxSamples) out.sampleTables.push_back(table);
        }
    }
    return out;
}

}  // namespace sandwich
