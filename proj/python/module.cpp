#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "sandwich/core.hpp"
#include "sandwich/finite_csp.hpp"
#include "sandwich/io.hpp"
#include "sandwich/oracle.hpp"
#include "sandwich/poly_solvers.hpp"
#include "sandwich/pp_engine.hpp"
#include "sandwich/recognizers.hpp"
#include "sandwich/reductions.hpp"

namespace py = pybind11;
using namespace sandwich;

namespace {

ClassId resolveClass(const std::string& name, const std::vector<std::string>& ffreeGraphs) {
    std::vector<Graph> patterns;
    for (const auto& text : ffreeGraphs) patterns.push_back(parseGraph(text));
    return parseClassName(name, patterns);
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

// verdict: "yes" (with 0-based edge list), "no", or "unknown" (budget).
py::dict solveText(const std::string& instanceText, const std::string& className,
                   const std::string& method, std::uint64_t budget,
                   const std::vector<std::string>& ffreeGraphs) {
    const ClassId cls = resolveClass(className, ffreeGraphs);
    const SandwichInstance inst = parseInstance(instanceText);
    Certificate cert = Certificate::unknown();
    if (method == "poly") {
        cert = polySolve(inst, cls);
    } else if (method == "oracle") {
        cert = oracleSolve(inst, cls);
    } else if (method == "search") {
        cert = searchSolve(inst, cls, budget);
    } else if (method == "auto") {
        if (hasPolySolver(cls))
            cert = polySolve(inst, cls);
        else if (fFreePatterns(cls))
            cert = searchSolve(inst, cls, budget);
        else
            cert = oracleSolve(inst, cls);
    } else {
        throw ParseError("unknown method " + method);
    }

    py::dict out;
    if (cert.kind == Certificate::Kind::CompletionYes) {
        if (!validCompletion(inst, cert.edges) || !recognize(Graph(inst.n, cert.edges), cls))
            throw std::logic_error("certificate failed validation");
        out["verdict"] = "yes";
        py::list edges;
        for (const auto& [u, v] : cert.edges) edges.append(py::make_tuple(u, v));
        out["edges"] = edges;
    } else if (cert.kind == Certificate::Kind::No) {
        out["verdict"] = "no";
    } else {
        out["verdict"] = "unknown";
    }
    return out;
}

bool recognizeText(const std::string& graphText, const std::string& className,
                   const std::vector<std::string>& ffreeGraphs) {
    return recognize(parseGraph(graphText), resolveClass(className, ffreeGraphs));
}

std::string reduceText(const std::string& name, const std::string& inputText, int p, int s, int t) {
    if (name == "colouring") return emitInstance(colouringToSandwich(parseGraph(inputText)));
    if (name == "complement") return emitInstance(complementInstance(parseInstance(inputText)));
    if (name == "pq-pad") return emitInstance(pqPadding(parseInstance(inputText), p));
    if (name == "universal-pad")
        return emitInstance(universalVertexPadding(parseInstance(inputText)));
    if (name == "pendant-pad") return emitInstance(pendantPadding(parseInstance(inputText)));
    if (name == "linebip-to-A") return emitStructureInstance(lineBipToA(parseInstance(inputText)));
    if (name == "ham-to-kt") return emitGraph(hamPathToCycleFamily(parseGraph(inputText), s, t));
    throw ParseError("unknown reduction " + name);
}

PPConstruction resolveConstruction(const std::string& builtinOrPpc) {
    if (const auto b = builtinConstruction(builtinOrPpc)) return *b;
    return parsePPC(builtinOrPpc);
}

std::string ppowerText(const std::string& construction, const std::string& structureText) {
    return emitStructure(ppPower(parseStructure(structureText), resolveConstruction(construction)));
}

std::string gadgetText(const std::string& construction, const std::string& instanceText,
                       bool asSandwich) {
    const auto con = resolveConstruction(construction);
    const auto inst = parseStructureInstance(instanceText);
    if (asSandwich) return emitInstance(gadgetToSandwich(con, inst));
    return emitStructureInstance(gadgetReduce(con, inst));
}

std::optional<std::vector<int>> siggersText(const std::string& structureText) {
    return hasSiggers(parseStructure(structureText));
}

std::string genText(int n, double pForced, double pForbidden, std::uint64_t seed) {
    return emitInstance(randomInstance(n, pForced, pForbidden, seed));
}

}  // namespace

PYBIND11_MODULE(_sandwich, m) {
    m.doc() = "graph sandwich toolkit bindings (text-format front end)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<OverlapError>(m, "OverlapError", PyExc_ValueError);
    py::register_exception<SignatureError>(m, "SignatureError", PyExc_ValueError);
    py::register_exception<UnsupportedClassError>(m, "UnsupportedClassError", PyExc_ValueError);

    m.def("solve", &solveText, py::arg("instance"), py::arg("class_name"),
          py::arg("method") = "auto", py::arg("budget") = std::uint64_t{10000000},
          py::arg("ffree_graphs") = std::vector<std::string>{},
          "Solve a sandwich instance (text format); returns {'verdict', 'edges'?}.");
    m.def("recognize", &recognizeText, py::arg("graph"), py::arg("class_name"),
          py::arg("ffree_graphs") = std::vector<std::string>{},
          "Class membership of a finite graph (text format).");
    m.def("reduce", &reduceText, py::arg("name"), py::arg("input"), py::arg("p") = 1,
          py::arg("s") = 0, py::arg("t") = 1,
          "Apply a named instance reduction; s and t are 0-based.");
    m.def("ppower", &ppowerText, py::arg("construction"), py::arg("structure"),
          "pp-power of a finite structure; construction is a builtin name or .ppc text.");
    m.def("gadget", &gadgetText, py::arg("construction"), py::arg("instance"),
          py::arg("as_sandwich") = false, "Gadget-reduce a constraint instance.");
    m.def("siggers", &siggersText, py::arg("structure"),
          "4-ary Siggers polymorphism table of a finite structure, or None.");
    m.def("gen", &genText, py::arg("n"), py::arg("p_forced"), py::arg("p_forbidden"),
          py::arg("seed") = std::uint64_t{0}, "Seeded random instance in text format.");
}
