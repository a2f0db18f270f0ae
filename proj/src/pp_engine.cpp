#include "sandwich/pp_engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sandwich {

namespace {

int arityIn(const std::vector<std::pair<std::string, int>>& sig, const std::string& symbol) {
    for (const auto& [name, r] : sig)
        if (name == symbol) return r;
    throw SignatureError("unknown symbol " + symbol);
}

bool inSig(const std::vector<std::pair<std::string, int>>& sig, const std::string& symbol) {
    for (const auto& [name, r] : sig)
        if (name == symbol) return true;
    return false;
}

}  // namespace

void PPFormula::validate(const std::vector<std::pair<std::string, int>>& sourceSignature) const {
    std::set<std::string> declared(freeVariables.begin(), freeVariables.end());
    declared.insert(existentialVariables.begin(), existentialVariables.end());
    if (declared.size() != freeVariables.size() + existentialVariables.size())
        throw ParseError("duplicate variable declaration in formula");
    const auto check = [&declared](const std::string& v) {
        if (!declared.count(v)) throw ParseError("undeclared variable " + v);
    };
    for (const auto& [sym, vars] : atoms) {
        if (static_cast<int>(vars.size()) != arityIn(sourceSignature, sym))
            throw SignatureError("atom arity mismatch for " + sym);
        for (const auto& v : vars) check(v);
    }
    for (const auto& [u, v] : equalities) {
        check(u);
        check(v);
    }
    for (const auto& [u, v] : disequalities) {
        check(u);
        check(v);
    }
}

void PPConstruction::validate() const {
    if (d < 1) throw RangeError("construction dimension must be positive");
    for (const auto& [sym, r] : targetSignature) {
        auto it = perSymbol.find(sym);
        if (it == perSymbol.end()) throw SignatureError("no defining formula for " + sym);
        if (static_cast<int>(it->second.freeVariables.size()) != r * d)
            throw SignatureError("formula for " + sym + " must have arity*d free variables");
        it->second.validate(sourceSignature);
    }
    for (const auto& [sym, f] : perSymbol)
        if (!inSig(targetSignature, sym)) throw SignatureError("formula for unknown target symbol " + sym);
    if (equivalenceFormula) {
        if (static_cast<int>(equivalenceFormula->freeVariables.size()) != 2 * d)
            throw SignatureError("equivalence formula must have 2d free variables");
        equivalenceFormula->validate(sourceSignature);
    }
    if (domainFormula) {
        if (static_cast<int>(domainFormula->freeVariables.size()) != d)
            throw SignatureError("domain formula must have d free variables");
        domainFormula->validate(sourceSignature);
    }
}

int PPConstruction::sourceArity(const std::string& symbol) const { return arityIn(sourceSignature, symbol); }
int PPConstruction::targetArity(const std::string& symbol) const { return arityIn(targetSignature, symbol); }

namespace {

PPFormula makeFormula(std::vector<std::string> free, std::vector<std::string> exist,
                      std::vector<std::pair<std::string, std::vector<std::string>>> atoms,
                      std::vector<std::pair<std::string, std::string>> neqs = {}) {
    PPFormula f;
    f.freeVariables = std::move(free);
    f.existentialVariables = std::move(exist);
    f.atoms = std::move(atoms);
    f.disequalities = std::move(neqs);
    return f;
}

}  // namespace

PPConstruction builtinC5toK5() {
    PPConstruction con;
    con.d = 1;
    con.sourceSignature = {{"E", 2}};
    con.targetSignature = {{"E", 2}};
    con.perSymbol["E"] = makeFormula({"x", "y"}, {"z", "w"},
                                     {{"E", {"x", "z"}}, {"E", {"z", "w"}}, {"E", {"w", "y"}}});
    return con;
}

PPConstruction builtinSplit12ToOneInThree() {
    PPConstruction con;
    con.d = 1;
    con.sourceSignature = {{"B", 2}, {"R", 2}};
    con.targetSignature = {{"R", 3}};
    con.perSymbol["R"] =
        makeFormula({"x", "y", "z"}, {}, {{"B", {"x", "y"}}, {"B", {"y", "z"}}, {"B", {"x", "z"}}});
    con.equivalenceFormula = makeFormula(
        {"x", "y"}, {"z", "w1", "w2", "w3"},
        {{"R", {"x", "z"}},
         {"R", {"z", "y"}},
         {"B", {"x", "w1"}},
         {"B", {"x", "w2"}},
         {"B", {"y", "w2"}},
         {"B", {"y", "w3"}},
         {"B", {"w1", "w2"}},
         {"B", {"w2", "w3"}},
         {"B", {"z", "w1"}},
         {"B", {"z", "w2"}},
         {"B", {"z", "w3"}}});
    return con;
}

PPConstruction builtinBetweennessToPermutation() {
    PPConstruction con;
    con.d = 1;
    con.sourceSignature = {{"B", 2}, {"R", 2}};
    con.targetSignature = {{"Betw", 3}};
    con.perSymbol["Betw"] = makeFormula({"x", "y", "z"}, {"w1", "w2"},
                                        {{"B", {"x", "w1"}},
                                         {"B", {"w1", "y"}},
                                         {"B", {"y", "w2"}},
                                         {"B", {"w2", "z"}},
                                         {"R", {"x", "y"}},
                                         {"R", {"x", "w2"}},
                                         {"R", {"x", "z"}},
                                         {"R", {"w1", "w2"}},
                                         {"R", {"w1", "z"}},
                                         {"R", {"y", "z"}}});
    return con;
}

namespace {

// gamma(x1, x2, y1, y2): the 4-witness square gadget; w2/w3 are the two
// "corner" witnesses that must stay apart.
void appendGamma(PPFormula& f, const std::string& x1, const std::string& x2, const std::string& y1,
                 const std::string& y2, const std::string& tag) {
    const std::string w1 = "w1" + tag, w2 = "w2" + tag, w3 = "w3" + tag, w4 = "w4" + tag;
    for (const auto& w : {w1, w2, w3, w4}) f.existentialVariables.push_back(w);
    const std::vector<std::pair<std::string, std::vector<std::string>>> atoms = {
        {"B", {w1, w2}}, {"B", {w2, w4}}, {"B", {w4, w3}}, {"B", {w3, w1}},
        {"B", {x1, w1}}, {"B", {x2, w1}}, {"R", {x1, w2}}, {"R", {x2, w3}},
        {"B", {y1, w4}}, {"B", {y2, w4}}, {"R", {y1, w2}}, {"R", {y2, w3}}};
    f.atoms.insert(f.atoms.end(), atoms.begin(), atoms.end());
    f.disequalities.push_back({x1, x2});
    f.disequalities.push_back({y1, y2});
    f.disequalities.push_back({w2, w3});
}

}  // namespace

PPConstruction builtinGrToStructA() {
    PPConstruction con;
    con.d = 2;
    con.sourceSignature = {{"B", 2}, {"R", 2}};
    con.targetSignature = {{"U_N", 1}, {"U_E", 1}, {"T", 3}};
    con.perSymbol["U_N"] = makeFormula({"x", "y"}, {}, {{"R", {"x", "y"}}});
    con.perSymbol["U_E"] = makeFormula({"x", "y"}, {}, {{"B", {"x", "y"}}});
    PPFormula t;
    t.freeVariables = {"x1", "y1", "x2", "y2", "x3", "y3"};
    t.existentialVariables = {"u", "v", "w"};
    appendGamma(t, "x1", "y1", "u", "v", "a");
    appendGamma(t, "x2", "y2", "v", "w", "b");
    appendGamma(t, "x3", "y3", "w", "u", "c");
    con.perSymbol["T"] = std::move(t);
    con.domainFormula = makeFormula({"x", "y"}, {}, {}, {{"x", "y"}});
    return con;
}

std::optional<PPConstruction> builtinConstruction(const std::string& name) {
    if (name == "c5k5") return builtinC5toK5();
    if (name == "split12-1in3") return builtinSplit12ToOneInThree();
    if (name == "betweenness-perm") return builtinBetweennessToPermutation();
    if (name == "gr-structA") return builtinGrToStructA();
    return std::nullopt;
}

namespace {

// Exhaustive witness search for a single pp-formula under a fixed assignment
// of its free variables.
bool holdsIn(const FiniteStructure& tmpl, const PPFormula& f, const std::vector<int>& freeValues) {
    std::map<std::string, int> env;
    for (std::size_t i = 0; i < f.freeVariables.size(); ++i) env[f.freeVariables[i]] = freeValues[i];

    const int d = tmpl.domainSize;
    const auto m = f.existentialVariables.size();
    double space = 1;
    for (std::size_t i = 0; i < m; ++i) {
        space *= d;
        if (space > 1e8) throw SizeError("witness space too large");
    }
    std::vector<int> witness(m, 0);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) env[f.existentialVariables[i]] = witness[i];
        bool ok = true;
        for (const auto& [u, v] : f.equalities)
            if (env[u] != env[v]) {
                ok = false;
                break;
            }
        for (const auto& [u, v] : f.disequalities) {
            if (!ok) break;
            if (env[u] == env[v]) ok = false;
        }
        for (const auto& [sym, vars] : f.atoms) {
            if (!ok) break;
            auto it = tmpl.relations.find(sym);
            std::vector<int> tuple;
            tuple.reserve(vars.size());
            for (const auto& v : vars) tuple.push_back(env[v]);
            if (it == tmpl.relations.end() || !it->second.count(tuple)) ok = false;
        }
        if (ok) return true;
        std::size_t j = 0;
        while (j < m) {
            if (++witness[j] < d) break;
            witness[j] = 0;
            ++j;
        }
        if (j == m || m == 0) return false;
    }
}

}  // namespace

FiniteStructure ppPower(const FiniteStructure& tmpl, const PPConstruction& con) {
    tmpl.validate();
    con.validate();
    for (const auto& [sym, r] : con.sourceSignature)
        if (!tmpl.hasSymbol(sym)) throw SignatureError("template lacks source symbol " + sym);
    long long size = 1;
    for (int i = 0; i < con.d; ++i) {
        size *= tmpl.domainSize;
        if (size > 10000) throw SizeError("power domain exceeds 10^4");
    }

    const int dOld = tmpl.domainSize;
    const auto decode = [&](long long code) {
        std::vector<int> tuple(static_cast<std::size_t>(con.d));
        for (int i = 0; i < con.d; ++i) {
            tuple[static_cast<std::size_t>(i)] = static_cast<int>(code % dOld);
            code /= dOld;
        }
        return tuple;
    };

    // Domain = d-tuples, filtered by the domain formula when present.
    std::vector<long long> elements;
    for (long long code = 0; code < size; ++code) {
        if (con.domainFormula && !holdsIn(tmpl, *con.domainFormula, decode(code))) continue;
        elements.push_back(code);
    }
    std::map<long long, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);

    FiniteStructure out;
    out.domainSize = static_cast<int>(elements.size());
    out.signature = con.targetSignature;
    for (const auto& [sym, r] : con.targetSignature) {
        const PPFormula& f = con.perSymbol.at(sym);
        std::set<std::vector<int>> rel;
        std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
        if (!elements.empty() && r > 0) {
            while (true) {
                std::vector<int> freeValues;
                freeValues.reserve(static_cast<std::size_t>(r * con.d));
                for (int i = 0; i < r; ++i)
                    for (int x : decode(elements[pick[static_cast<std::size_t>(i)]]))
                        freeValues.push_back(x);
                if (holdsIn(tmpl, f, freeValues)) {
                    std::vector<int> tuple(static_cast<std::size_t>(r));
                    for (int i = 0; i < r; ++i)
                        tuple[static_cast<std::size_t>(i)] =
                            index[elements[pick[static_cast<std::size_t>(i)]]];
                    rel.insert(std::move(tuple));
                }
                std::size_t j = 0;
                while (j < static_cast<std::size_t>(r)) {
                    if (++pick[j] < elements.size()) break;
                    pick[j] = 0;
                    ++j;
                }
                if (j == static_cast<std::size_t>(r)) break;
            }
        }
        out.relations[sym] = std::move(rel);
    }
    return out;
}

namespace {

struct GadgetBuilder {
    int next = 0;
    std::vector<std::pair<std::string, std::vector<int>>> atoms;
    std::vector<std::pair<int, int>> equalities;
    std::vector<std::pair<int, int>> disequalities;

    std::vector<int> allocBlock(int d) {
        std::vector<int> ids(static_cast<std::size_t>(d));
        std::iota(ids.begin(), ids.end(), next);
        next += d;
        return ids;
    }

    void instantiate(const PPFormula& f, const std::vector<int>& freeIds) {
        std::map<std::string, int> env;
        for (std::size_t i = 0; i < f.freeVariables.size(); ++i) env[f.freeVariables[i]] = freeIds[i];
        for (const auto& w : f.existentialVariables) env[w] = next++;
        for (const auto& [sym, vars] : f.atoms) {
            std::vector<int> ids;
            ids.reserve(vars.size());
            for (const auto& v : vars) ids.push_back(env[v]);
            atoms.push_back({sym, std::move(ids)});
        }
        for (const auto& [u, v] : f.equalities) equalities.push_back({env[u], env[v]});
        for (const auto& [u, v] : f.disequalities) disequalities.push_back({env[u], env[v]});
    }
};

}  // namespace

StructureInstance gadgetReduce(const PPConstruction& con, const StructureInstance& inst) {
    con.validate();
    for (const auto& [sym, vars] : inst.constraints)
        if (!inSig(con.targetSignature, sym))
            throw SignatureError("instance symbol " + sym + " not in target signature");

    GadgetBuilder b;
    const int n = inst.variableCount;
    const bool copies = con.equivalenceFormula.has_value();

    std::vector<std::vector<int>> sharedBlock(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> lastCopy(static_cast<std::size_t>(n));
    if (!copies) {
        for (int v = 0; v < n; ++v) {
            sharedBlock[static_cast<std::size_t>(v)] = b.allocBlock(con.d);
            if (con.domainFormula)
                b.instantiate(*con.domainFormula, sharedBlock[static_cast<std::size_t>(v)]);
        }
    }

    for (const auto& [sym, vars] : inst.constraints) {
        std::vector<int> freeIds;
        for (int v : vars) {
            std::vector<int> block;
            if (copies) {
                block = b.allocBlock(con.d);
                if (con.domainFormula) b.instantiate(*con.domainFormula, block);
                auto& prev = lastCopy[static_cast<std::size_t>(v)];
                if (!prev.empty()) {
                    std::vector<int> link = prev;
                    link.insert(link.end(), block.begin(), block.end());
                    b.instantiate(*con.equivalenceFormula, link);
                }
                prev = block;
            } else {
                block = sharedBlock[static_cast<std::size_t>(v)];
            }
            freeIds.insert(freeIds.end(), block.begin(), block.end());
        }
        b.instantiate(con.perSymbol.at(sym), freeIds);
    }
    // Target variables with no occurrence still contribute one block.
    if (copies)
        for (int v = 0; v < n; ++v)
            if (lastCopy[static_cast<std::size_t>(v)].empty()) {
                lastCopy[static_cast<std::size_t>(v)] = b.allocBlock(con.d);
                if (con.domainFormula)
                    b.instantiate(*con.domainFormula, lastCopy[static_cast<std::size_t>(v)]);
            }

    // Equalities merge variables; remap to dense ids in first-appearance order.
    std::vector<int> parent(static_cast<std::size_t>(b.next));
    std::iota(parent.begin(), parent.end(), 0);
    const auto root = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& [u, v] : b.equalities) parent[static_cast<std::size_t>(root(u))] = root(v);
    std::map<int, int> dense;
    for (int x = 0; x < b.next; ++x) dense.try_emplace(root(x), static_cast<int>(dense.size()));

    StructureInstance out;
    out.variableCount = static_cast<int>(dense.size());
    for (auto& [sym, ids] : b.atoms) {
        for (int& x : ids) x = dense[root(x)];
        out.constraints.push_back({sym, ids});
    }
    for (const auto& [u, v] : b.disequalities)
        out.constraints.push_back({"neq", {dense[root(u)], dense[root(v)]}});
    return out;
}

SandwichInstance gadgetToSandwich(const PPConstruction& con, const StructureInstance& inst) {
    for (const auto& [sym, r] : con.sourceSignature)
        if (sym != "B" && sym != "R") throw SignatureError("sandwich export needs a {B,R} source");
    const StructureInstance reduced = gadgetReduce(con, inst);

    int n = reduced.variableCount;
    PairSet forced, forbidden;
    for (const auto& [sym, vars] : reduced.constraints) {
        if (sym == "B") {
            forced.insert(makePair(vars[0], vars[1]));
        } else if (sym == "R") {
            forbidden.insert(makePair(vars[0], vars[1]));
        } else if (sym == "neq") {
            const int w1 = n++, w2 = n++;
            forced.insert(makePair(w1, vars[0]));
            forbidden.insert(makePair(w1, vars[1]));
            forced.insert(makePair(w2, vars[1]));
            forbidden.insert(makePair(w2, vars[0]));
        } else {
            throw SignatureError("unexpected gadget symbol " + sym);
        }
    }
    return makeInstance(n, forced, forbidden);
}

namespace {

bool gridRec(const std::vector<std::vector<std::pair<std::string, int>>>& byVar, std::size_t v,
             std::vector<std::pair<int, int>>& cell, int usedRows, int usedCols) {
    if (v == cell.size()) return true;
    for (int r = 0; r <= usedRows && r < static_cast<int>(cell.size()); ++r) {
        for (int c = 0; c <= usedCols && c < static_cast<int>(cell.size()); ++c) {
            cell[v] = {r, c};
            bool ok = true;
            for (const auto& [sym, other] : byVar[v]) {
                const auto& [ro, co] = cell[static_cast<std::size_t>(other)];
                const bool sameCell = ro == r && co == c;
                const bool shares = ro == r || co == c;
                if (sym == "B")
                    ok = !sameCell && shares;
                else if (sym == "R")
                    ok = ro != r && co != c;
                else
                    ok = !sameCell;  // neq
                if (!ok) break;
            }
            if (ok && gridRec(byVar, v + 1, cell, std::max(usedRows, r + 1), std::max(usedCols, c + 1)))
                return true;
        }
    }
    return false;
}

}  // namespace

bool mapsToGrid(const StructureInstance& inst) {
    const auto n = static_cast<std::size_t>(inst.variableCount);
    // Constraints indexed by their later variable, checked on assignment.
    std::vector<std::vector<std::pair<std::string, int>>> byVar(n);
    for (const auto& [sym, vars] : inst.constraints) {
        if (sym != "B" && sym != "R" && sym != "neq")
            throw SignatureError("grid placement expects a {B,R,neq} instance");
        const int u = vars[0], v = vars[1];
        if (u == v) return false;  // B, R and neq all need distinct cells
        byVar[static_cast<std::size_t>(std::max(u, v))].push_back({sym, std::min(u, v)});
    }
    std::vector<std::pair<int, int>> cell(n, {0, 0});
    return gridRec(byVar, 0, cell, 0, 0);
}

namespace {

std::vector<std::pair<std::string, int>> parseSig(const std::string& token, int line) {
    std::vector<std::pair<std::string, int>> sig;
    std::stringstream ss(token);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos)
            throw ParseError("line " + std::to_string(line) + ": signature entry needs name:arity");
        try {
            sig.push_back({part.substr(0, colon), std::stoi(part.substr(colon + 1))});
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line) + ": bad arity in signature");
        }
    }
    if (sig.empty()) throw ParseError("line " + std::to_string(line) + ": empty signature");
    return sig;
}

std::string emitSig(const std::vector<std::pair<std::string, int>>& sig) {
    std::string out;
    for (const auto& [name, r] : sig) {
        if (!out.empty()) out += ",";
        out += name + ":" + std::to_string(r);
    }
    return out;
}

PPFormula parseHeaderLine(const std::vector<std::string>& tokens, std::size_t from, int line) {
    PPFormula f;
    std::size_t i = from;
    if (i >= tokens.size() || tokens[i] != "free")
        throw ParseError("line " + std::to_string(line) + ": expected 'free'");
    ++i;
    while (i < tokens.size() && tokens[i] != "exist") f.freeVariables.push_back(tokens[i++]);
    if (i < tokens.size() && tokens[i] == "exist") {
        ++i;
        while (i < tokens.size()) f.existentialVariables.push_back(tokens[i++]);
    }
    return f;
}

}  // namespace

PPConstruction parsePPC(const std::string& text) {
    PPConstruction con;
    PPFormula* current = nullptr;
    std::string currentSymbol;
    bool sawHeader = false;

    std::stringstream ss(text);
    std::string lineText;
    int lineNo = 0;
    while (std::getline(ss, lineText)) {
        ++lineNo;
        const auto hash = lineText.find('#');
        if (hash != std::string::npos) lineText.erase(hash);
        std::stringstream ls(lineText);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;

        if (!sawHeader) {
            if (tokens[0] != "ppc" || tokens.size() != 4)
                throw ParseError("line " + std::to_string(lineNo) + ": expected 'ppc <d> <src> <tgt>'");
            try {
                con.d = std::stoi(tokens[1]);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineNo) + ": bad dimension");
            }
            con.sourceSignature = parseSig(tokens[2], lineNo);
            con.targetSignature = parseSig(tokens[3], lineNo);
            sawHeader = true;
            continue;
        }
        if (tokens[0] == "def") {
            if (tokens.size() < 3) throw ParseError("line " + std::to_string(lineNo) + ": bad def");
            currentSymbol = tokens[1];
            con.perSymbol[currentSymbol] = parseHeaderLine(tokens, 2, lineNo);
            current = &con.perSymbol[currentSymbol];
        } else if (tokens[0] == "equiv") {
            con.equivalenceFormula = parseHeaderLine(tokens, 1, lineNo);
            current = &*con.equivalenceFormula;
        } else if (tokens[0] == "domain") {
            con.domainFormula = parseHeaderLine(tokens, 1, lineNo);
            current = &*con.domainFormula;
        } else if (tokens[0] == "atom") {
            if (!current || tokens.size() < 2)
                throw ParseError("line " + std::to_string(lineNo) + ": stray atom");
            current->atoms.push_back({tokens[1], {tokens.begin() + 2, tokens.end()}});
        } else if (tokens[0] == "eq" || tokens[0] == "neq") {
            if (!current || tokens.size() != 3)
                throw ParseError("line " + std::to_string(lineNo) + ": bad " + tokens[0]);
            auto& list = tokens[0] == "eq" ? current->equalities : current->disequalities;
            list.push_back({tokens[1], tokens[2]});
        } else {
            throw ParseError("line " + std::to_string(lineNo) + ": unknown directive " + tokens[0]);
        }
    }
    if (!sawHeader) throw ParseError("missing ppc header");
    con.validate();
    return con;
}

namespace {

void emitFormulaBody(std::string& out, const PPFormula& f) {
    for (const auto& [sym, vars] : f.atoms) {
        out += "atom " + sym;
        for (const auto& v : vars) out += " " + v;
        out += "\n";
    }
    for (const auto& [u, v] : f.equalities) out += "eq " + u + " " + v + "\n";
    for (const auto& [u, v] : f.disequalities) out += "neq " + u + " " + v + "\n";
}

std::string formulaHeader(const PPFormula& f) {
    std::string out = "free";
    for (const auto& v : f.freeVariables) out += " " + v;
    if (!f.existentialVariables.empty()) {
        out += " exist";
        for (const auto& v : f.existentialVariables) out += " " + v;
    }
    return out;
}

}  // namespace

std::string emitPPC(const PPConstruction& con) {
    std::string out = "ppc " + std::to_string(con.d) + " " + emitSig(con.sourceSignature) + " " +
                      emitSig(con.targetSignature) + "\n";
    for (const auto& [sym, r] : con.targetSignature) {
        const PPFormula& f = con.perSymbol.at(sym);
        out += "def " + sym + " " + formulaHeader(f) + "\n";
        emitFormulaBody(out, f);
    }
    if (con.equivalenceFormula) {
        out += "equiv " + formulaHeader(*con.equivalenceFormula) + "\n";
        emitFormulaBody(out, *con.equivalenceFormula);
    }
    if (con.domainFormula) {
        out += "domain " + formulaHeader(*con.domainFormula) + "\n";
        emitFormulaBody(out, *con.domainFormula);
    }
    return out;
}

}  // namespace sandwich
