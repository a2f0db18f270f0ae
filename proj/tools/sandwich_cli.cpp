#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sandwich/core.hpp"
#include "sandwich/finite_csp.hpp"
#include "sandwich/io.hpp"
#include "sandwich/oracle.hpp"
#include "sandwich/poly_solvers.hpp"
#include "sandwich/pp_engine.hpp"
#include "sandwich/recognizers.hpp"
#include "sandwich/reductions.hpp"

namespace {

using namespace sandwich;

constexpr int kExitAnswered = 0;
constexpr int kExitParse = 2;
constexpr int kExitSize = 3;
constexpr int kExitBudget = 4;

std::string readInput(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeOutput(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << text;
}

std::vector<std::string> splitList(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) parts.push_back(part);
    return parts;
}

int parseIntArg(const std::string& s) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("bad integer '" + s + "'");
    return v;
}

// Class names as in parseClassName; "ffree:<graph files>" loads each comma-
// separated file before handing the patterns to the library.
ClassId parseClass(const std::string& name) {
    const auto colon = name.find(':');
    if (name.substr(0, colon) == "ffree") {
        std::vector<Graph> patterns;
        const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
        for (const auto& file : splitList(arg, ','))
            patterns.push_back(parseGraph(readInput(file)));
        return parseClassName("ffree", patterns);
    }
    return parseClassName(name);
}

bool hasPolySolver(const ClassId& cls) {
    return cls.tag == ClassId::Tag::Split || cls.tag == ClassId::Tag::Threshold ||
           cls.tag == ClassId::Tag::CompleteMultipartite;
}

Certificate polySolve(const SandwichInstance& inst, const ClassId& cls) {
    switch (cls.tag) {
        case ClassId::Tag::Split: return solveSplit(inst);
        case ClassId::Tag::Threshold: return solveThreshold(inst);
        case ClassId::Tag::CompleteMultipartite: return solveMultipartite(inst);
        default: throw UnsupportedClassError("no polynomial solver for " + cls.name());
    }
}

int reportCertificate(const SandwichInstance& inst, const ClassId& cls, const Certificate& cert) {
    switch (cert.kind) {
        case Certificate::Kind::CompletionYes:
            if (!validCompletion(inst, cert.edges) || !recognize(Graph(inst.n, cert.edges), cls)) {
                std::cerr << "internal error: certificate failed validation\n";
                return 1;
            }
            std::cout << "YES\n";
            for (const auto& [u, v] : cert.edges)
                std::cout << "e " << u + 1 << " " << v + 1 << "\n";
            return kExitAnswered;
        case Certificate::Kind::No:
            std::cout << "NO\n";
            return kExitAnswered;
        default:
            std::cout << "UNKNOWN\n";
            return kExitBudget;
    }
}

struct CrosscheckResult {
    long long instances = 0;
    long long discrepancies = 0;
    std::string firstDiscrepancy;
};

void crosscheckOne(const SandwichInstance& inst, const ClassId& cls, CrosscheckResult& result) {
    ++result.instances;
    const bool fast = polySolve(inst, cls).isYes();
    const bool slow = oracleSolve(inst, cls).isYes();
    if (fast != slow) {
        ++result.discrepancies;
        if (result.firstDiscrepancy.empty()) result.firstDiscrepancy = emitInstance(inst);
    }
}

CrosscheckResult runCrosscheck(const ClassId& cls, std::uint64_t seed) {
    CrosscheckResult result;
    // Exhaustive n = 4 (3^6 instances).
    const PairSet pairSet = allPairs(4);
    const std::vector<Pair> pairs(pairSet.begin(), pairSet.end());
    for (int code = 0; code < 729; ++code) {
        int c = code;
        PairSet forced, forbidden;
        for (const auto& p : pairs) {
            const int digit = c % 3;
            c /= 3;
            if (digit == 1) forced.insert(p);
            if (digit == 2) forbidden.insert(p);
        }
        crosscheckOne(makeInstance(4, forced, forbidden), cls, result);
    }
    // Seeded random suites at n in {5, 6, 7}, mixed densities.
    // Dense enough to keep the oracle's completion enumeration small at n = 7.
    const double densities[][2] = {{0.45, 0.45}, {0.3, 0.6}, {0.6, 0.3}, {0.5, 0.4}, {0.35, 0.35}};
    for (int n = 5; n <= 7; ++n)
        for (int i = 0; i < 500; ++i) {
            const auto& d = densities[i % 5];
            crosscheckOne(randomInstance(n, d[0], d[1], seed + static_cast<std::uint64_t>(n) * 100000 + i),
                          cls, result);
        }
    return result;
}

int runMain(int argc, char** argv) {
    CLI::App app{"graph sandwich toolkit"};
    app.require_subcommand(1);

    std::string className, method = "auto", inputPath, outputPath, builtinName, ppcPath;
    std::string structurePath, reductionName;
    std::uint64_t seed = 0, budget = 10000000;
    int genN = 0;
    double genForced = 0, genForbidden = 0;
    bool asSandwich = false, siggers = false;

    auto* solve = app.add_subcommand("solve", "solve a sandwich instance");
    solve->add_option("--class", className)->required();
    solve->add_option("--method", method)->check(CLI::IsMember({"auto", "poly", "search", "oracle"}));
    solve->add_option("--budget", budget);
    solve->add_option("input", inputPath);
    solve->add_option("-o", outputPath);

    auto* recognizeCmd = app.add_subcommand("recognize", "test class membership of a graph");
    recognizeCmd->add_option("--class", className)->required();
    recognizeCmd->add_option("input", inputPath);

    auto* reduce = app.add_subcommand("reduce", "apply an instance reduction");
    reduce->add_option("name", reductionName)->required();
    reduce->add_option("input", inputPath);
    reduce->add_option("-o", outputPath);

    auto* ppower = app.add_subcommand("ppower", "pp-power of a finite structure");
    ppower->add_option("--builtin", builtinName);
    ppower->add_option("--ppc", ppcPath);
    ppower->add_option("--structure", structurePath)->required();
    ppower->add_option("-o", outputPath);

    auto* gadget = app.add_subcommand("gadget", "gadget-reduce a constraint instance");
    gadget->add_option("--builtin", builtinName);
    gadget->add_option("--ppc", ppcPath);
    gadget->add_flag("--sandwich", asSandwich, "emit a sandwich instance over {B,R}");
    gadget->add_option("input", inputPath);
    gadget->add_option("-o", outputPath);

    auto* poly = app.add_subcommand("polymorphism", "polymorphism search");
    poly->add_flag("--siggers", siggers, "search for a 4-ary Siggers polymorphism");
    poly->add_option("input", inputPath);

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("n", genN)->required();
    gen->add_option("pforced", genForced)->required();
    gen->add_option("pforbidden", genForbidden)->required();
    gen->add_option("--seed", seed);
    gen->add_option("-o", outputPath);

    auto* crosscheck = app.add_subcommand("crosscheck", "solver vs oracle agreement suites");
    crosscheck->add_option("--class", className)->required();
    crosscheck->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) {
        const ClassId cls = parseClass(className);
        const SandwichInstance inst = parseInstance(readInput(inputPath));
        Certificate cert = Certificate::unknown();
        if (method == "poly") {
            cert = polySolve(inst, cls);
        } else if (method == "oracle") {
            cert = oracleSolve(inst, cls);
        } else if (method == "search") {
            cert = searchSolve(inst, cls, budget);
        } else if (hasPolySolver(cls)) {
            cert = polySolve(inst, cls);
        } else if (fFreePatterns(cls)) {
            cert = searchSolve(inst, cls, budget);
        } else {
            cert = oracleSolve(inst, cls);
        }
        return reportCertificate(inst, cls, cert);
    }
    if (recognizeCmd->parsed()) {
        const ClassId cls = parseClass(className);
        const Graph g = parseGraph(readInput(inputPath));
        std::cout << (recognize(g, cls) ? "YES" : "NO") << "\n";
        return kExitAnswered;
    }
    if (reduce->parsed()) {
        const auto colon = reductionName.find(':');
        const std::string head = reductionName.substr(0, colon);
        const std::string arg =
            colon == std::string::npos ? "" : reductionName.substr(colon + 1);
        if (head == "colouring") {
            writeOutput(outputPath, emitInstance(colouringToSandwich(parseGraph(readInput(inputPath)))));
        } else if (head == "complement") {
            writeOutput(outputPath, emitInstance(complementInstance(parseInstance(readInput(inputPath)))));
        } else if (head == "pq-pad") {
            writeOutput(outputPath,
                        emitInstance(pqPadding(parseInstance(readInput(inputPath)), parseIntArg(arg))));
        } else if (head == "universal-pad") {
            writeOutput(outputPath, emitInstance(universalVertexPadding(parseInstance(readInput(inputPath)))));
        } else if (head == "pendant-pad") {
            writeOutput(outputPath, emitInstance(pendantPadding(parseInstance(readInput(inputPath)))));
        } else if (head == "linebip-to-A") {
            writeOutput(outputPath, emitStructureInstance(lineBipToA(parseInstance(readInput(inputPath)))));
        } else if (head == "ham-to-kt") {
            const auto parts = splitList(arg, ',');
            if (parts.size() != 2) throw ParseError("ham-to-kt needs s,t");
            writeOutput(outputPath,
                        emitGraph(hamPathToCycleFamily(parseGraph(readInput(inputPath)),
                                                       parseIntArg(parts[0]) - 1, parseIntArg(parts[1]) - 1)));
        } else {
            throw ParseError("unknown reduction " + reductionName);
        }
        return kExitAnswered;
    }
    if (ppower->parsed() || gadget->parsed()) {
        PPConstruction con;
        if (!builtinName.empty()) {
            auto b = builtinConstruction(builtinName);
            if (!b) throw ParseError("unknown builtin " + builtinName);
            con = *b;
        } else if (!ppcPath.empty()) {
            con = parsePPC(readInput(ppcPath));
        } else {
            throw ParseError("need --builtin or --ppc");
        }
        if (ppower->parsed()) {
            writeOutput(outputPath, emitStructure(ppPower(parseStructure(readInput(structurePath)), con)));
        } else {
            const StructureInstance inst = parseStructureInstance(readInput(inputPath));
            if (asSandwich)
                writeOutput(outputPath, emitInstance(gadgetToSandwich(con, inst)));
            else
                writeOutput(outputPath, emitStructureInstance(gadgetReduce(con, inst)));
        }
        return kExitAnswered;
    }
    if (poly->parsed()) {
        if (!siggers) throw ParseError("only --siggers search is available");
        const FiniteStructure tmpl = parseStructure(readInput(inputPath));
        const auto table = hasSiggers(tmpl);
        if (!table) {
            std::cout << "NONE\n";
            return kExitAnswered;
        }
        std::cout << "SIGGERS";
        for (int v : *table) std::cout << " " << v;
        std::cout << "\n";
        return kExitAnswered;
    }
    if (gen->parsed()) {
        writeOutput(outputPath, emitInstance(randomInstance(genN, genForced, genForbidden, seed)));
        return kExitAnswered;
    }
    if (crosscheck->parsed()) {
        const ClassId cls = parseClass(className);
        const CrosscheckResult result = runCrosscheck(cls, seed);
        std::cout << "class " << cls.name() << "\ninstances " << result.instances
                  << "\ndiscrepancies " << result.discrepancies << "\n";
        if (result.discrepancies > 0) {
            std::cerr << "first discrepancy:\n" << result.firstDiscrepancy;
            return 1;
        }
        return kExitAnswered;
    }
    return kExitAnswered;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return runMain(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SizeError& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return kExitSize;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
