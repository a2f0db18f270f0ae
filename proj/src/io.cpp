#include "sandwich/io.hpp"

#include <sstream>
#include <vector>

namespace sandwich {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::stringstream ss(text);
    std::string raw;
    int number = 0;
    while (std::getline(ss, raw)) {
        ++number;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::stringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

int parseInt(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(tok, &used);
        if (used != tok.size()) fail(line, "bad integer '" + tok + "'");
        return value;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "bad integer '" + tok + "'");
    }
}

// 1-based on disk, 0-based in memory.
int parseVertex(const std::string& tok, int n, int line) {
    const int v = parseInt(tok, line);
    if (v < 1 || v > n) fail(line, "vertex " + tok + " out of range");
    return v - 1;
}

std::vector<Line> expectHeader(const std::string& text, const std::string& kind, int& headerValue) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("line 1: empty input");
    const auto& h = lines.front();
    if (h.tokens.size() != 3 || h.tokens[0] != "p" || h.tokens[1] != kind)
        fail(h.number, "expected 'p " + kind + " <n>'");
    headerValue = parseInt(h.tokens[2], h.number);
    lines.erase(lines.begin());
    return lines;
}

}  // namespace

SandwichInstance parseInstance(const std::string& text) {
    int n = 0;
    PairSet forced, forbidden;
    for (const auto& line : expectHeader(text, "swi", n)) {
        if (line.tokens.size() != 3 || (line.tokens[0] != "e" && line.tokens[0] != "f"))
            fail(line.number, "expected 'e u v' or 'f u v'");
        const int u = parseVertex(line.tokens[1], n, line.number);
        const int v = parseVertex(line.tokens[2], n, line.number);
        if (u == v) fail(line.number, "self-pair");
        (line.tokens[0] == "e" ? forced : forbidden).insert(makePair(u, v));
    }
    return makeInstance(n, forced, forbidden);
}

std::string emitInstance(const SandwichInstance& inst) {
    std::string out = "p swi " + std::to_string(inst.n) + "\n";
    for (const auto& [u, v] : inst.forced)
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    for (const auto& [u, v] : inst.forbidden)
        out += "f " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

Graph parseGraph(const std::string& text) {
    int n = 0;
    PairSet edges;
    for (const auto& line : expectHeader(text, "gr", n)) {
        if (line.tokens.size() != 3 || line.tokens[0] != "e") fail(line.number, "expected 'e u v'");
        const int u = parseVertex(line.tokens[1], n, line.number);
        const int v = parseVertex(line.tokens[2], n, line.number);
        if (u == v) fail(line.number, "self-loop");
        edges.insert(makePair(u, v));
    }
    return Graph(n, edges);
}

std::string emitGraph(const Graph& g) {
    std::string out = "p gr " + std::to_string(g.n()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

FiniteStructure parseStructure(const std::string& text) {
    FiniteStructure s;
    for (const auto& line : expectHeader(text, "fst", s.domainSize)) {
        if (line.tokens[0] == "r") {
            if (line.tokens.size() != 3) fail(line.number, "expected 'r <name> <arity>'");
            if (s.hasSymbol(line.tokens[1])) fail(line.number, "duplicate symbol " + line.tokens[1]);
            s.signature.push_back({line.tokens[1], parseInt(line.tokens[2], line.number)});
            s.relations[line.tokens[1]];
        } else if (line.tokens[0] == "t") {
            if (line.tokens.size() < 2 || !s.hasSymbol(line.tokens[1]))
                fail(line.number, "tuple for undeclared symbol");
            const int r = s.arity(line.tokens[1]);
            if (static_cast<int>(line.tokens.size()) != r + 2)
                fail(line.number, "tuple arity mismatch");
            std::vector<int> tuple;
            for (int i = 0; i < r; ++i) {
                const int x = parseInt(line.tokens[static_cast<std::size_t>(i) + 2], line.number);
                if (x < 0 || x >= s.domainSize) fail(line.number, "domain element out of range");
                tuple.push_back(x);
            }
            s.relations[line.tokens[1]].insert(std::move(tuple));
        } else {
            fail(line.number, "expected 'r' or 't' line");
        }
    }
    s.validate();
    return s;
}

std::string emitStructure(const FiniteStructure& s) {
    std::string out = "p fst " + std::to_string(s.domainSize) + "\n";
    for (const auto& [name, r] : s.signature)
        out += "r " + name + " " + std::to_string(r) + "\n";
    for (const auto& [name, r] : s.signature) {
        auto it = s.relations.find(name);
        if (it == s.relations.end()) continue;
        for (const auto& tuple : it->second) {
            out += "t " + name;
            for (int x : tuple) out += " " + std::to_string(x);
            out += "\n";
        }
    }
    return out;
}

StructureInstance parseStructureInstance(const std::string& text) {
    StructureInstance inst;
    for (const auto& line : expectHeader(text, "csp", inst.variableCount)) {
        if (line.tokens.size() < 2 || line.tokens[0] != "c")
            fail(line.number, "expected 'c <symbol> v1 ... vr'");
        std::vector<int> vars;
        for (std::size_t i = 2; i < line.tokens.size(); ++i)
            vars.push_back(parseVertex(line.tokens[i], inst.variableCount, line.number));
        inst.constraints.push_back({line.tokens[1], std::move(vars)});
    }
    return inst;
}

std::string emitStructureInstance(const StructureInstance& inst) {
    std::string out = "p csp " + std::to_string(inst.variableCount) + "\n";
    for (const auto& [sym, vars] : inst.constraints) {
        out += "c " + sym;
        for (int v : vars) out += " " + std::to_string(v + 1);
        out += "\n";
    }
    return out;
}

}  // namespace sandwich
