#include "doctest.h"
#include "sandwich/core.hpp"
#include "sandwich/oracle.hpp"
#include "sandwich/poly_solvers.hpp"
#include "sandwich/recognizers.hpp"
#include "sandwich/reductions.hpp"

using namespace sandwich;

namespace {

SandwichInstance instanceFromCode(int n, int code) {
    PairSet forced, forbidden;
    for (const auto& p : allPairs(n)) {
        const int digit = code % 3;
        code /= 3;
        if (digit == 1) forced.insert(p);
        if (digit == 2) forbidden.insert(p);
    }
    return makeInstance(n, forced, forbidden);
}

void checkYes(const SandwichInstance& inst, const Certificate& cert, const ClassId& cls) {
    REQUIRE(cert.kind == Certificate::Kind::CompletionYes);
    CHECK(validCompletion(inst, cert.edges));
    CHECK(recognize(Graph(inst.n, cert.edges), cls));
}

}  // namespace

TEST_CASE("solveMultipartite examples") {
    // Closure forces 02, which is forbidden... it is not: P3 = K1,2 is complete
    // multipartite with parts {0,2} and {1}, so the answer is Yes.
    const auto p3 = makeInstance(3, {{0, 1}, {1, 2}}, {{0, 2}});
    const auto p3Cert = solveMultipartite(p3);
    checkYes(p3, p3Cert, ClassId::completeMultipartite());
    CHECK(oracleSolve(p3, ClassId::completeMultipartite()).isYes());

    const auto open = makeInstance(3, {{0, 1}, {1, 2}}, {});
    const auto openCert = solveMultipartite(open);
    checkYes(open, openCert, ClassId::completeMultipartite());

    const auto empty = makeInstance(4, {}, allPairs(4));
    const auto emptyCert = solveMultipartite(empty);
    REQUIRE(emptyCert.kind == Certificate::Kind::CompletionYes);
    CHECK(emptyCert.edges.empty());

    // A genuine No: a forced edge inside a forbidden-pair part.
    // 0~1 and 1~2 share parts via forbidden chains, then 0-2 forced.
    const auto no = makeInstance(3, {{0, 2}}, {{0, 1}, {1, 2}});
    CHECK(solveMultipartite(no).kind == Certificate::Kind::No);
}

TEST_CASE("solveSplit examples") {
    const auto twoK2 = makeInstance(4, {{0, 1}, {2, 3}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(solveSplit(twoK2).kind == Certificate::Kind::No);

    const auto easy = makeInstance(4, {{0, 1}}, {{2, 3}});
    checkYes(easy, solveSplit(easy), ClassId::split());

    const auto single = makeInstance(1, {}, {});
    const auto cert = solveSplit(single);
    REQUIRE(cert.kind == Certificate::Kind::CompletionYes);
    CHECK(cert.edges.empty());
}

TEST_CASE("solveSplit certificate splits into a clique and an independent set") {
    const auto inst = makeInstance(6, {{0, 1}, {1, 2}, {0, 2}}, {{3, 4}, {4, 5}});
    const auto cert = solveSplit(inst);
    checkYes(inst, cert, ClassId::split());
    CHECK(isSplit(Graph(inst.n, cert.edges)));
}

TEST_CASE("solveThreshold examples") {
    const auto p4 = makeInstance(4, Graph::path(4).edges(), Graph::path(4).nonEdges());
    CHECK(solveThreshold(p4).kind == Certificate::Kind::No);

    const auto star = makeInstance(4, {{0, 1}, {0, 2}, {0, 3}}, {});
    checkYes(star, solveThreshold(star), ClassId::threshold());

    CHECK(solveThreshold(makeInstance(0, {}, {})).kind == Certificate::Kind::CompletionYes);
    CHECK(solveThreshold(makeInstance(1, {}, {})).kind == Certificate::Kind::CompletionYes);
}

TEST_CASE("solvers agree with the oracle on all 729 n=4 instances") {
    for (int code = 0; code < 729; ++code) {
        const auto inst = instanceFromCode(4, code);
        CHECK(solveSplit(inst).isYes() == oracleSolve(inst, ClassId::split()).isYes());
        CHECK(solveThreshold(inst).isYes() == oracleSolve(inst, ClassId::threshold()).isYes());
        CHECK(solveMultipartite(inst).isYes() ==
              oracleSolve(inst, ClassId::completeMultipartite()).isYes());
    }
}

TEST_CASE("solvers agree with the oracle on random n=5..7 instances") {
    const double densities[][2] = {{0.45, 0.45}, {0.3, 0.6}, {0.6, 0.3}};
    for (int n = 5; n <= 7; ++n)
        for (int i = 0; i < 120; ++i) {
            const auto& d = densities[i % 3];
            const auto inst = randomInstance(n, d[0], d[1], 7700 + static_cast<std::uint64_t>(n) * 1000 + i);
            CHECK(solveSplit(inst).isYes() == oracleSolve(inst, ClassId::split()).isYes());
            CHECK(solveThreshold(inst).isYes() ==
                  oracleSolve(inst, ClassId::threshold()).isYes());
            CHECK(solveMultipartite(inst).isYes() ==
                  oracleSolve(inst, ClassId::completeMultipartite()).isYes());
        }
}

TEST_CASE("threshold verdict is tie-break insensitive") {
    for (int code = 0; code < 729; ++code) {
        const auto inst = instanceFromCode(4, code);
        CHECK(solveThreshold(inst, false).isYes() == solveThreshold(inst, true).isYes());
    }
    for (int n = 5; n <= 6; ++n)
        for (int i = 0; i < 200; ++i) {
            const auto inst = randomInstance(n, 0.35, 0.35, 31000 + static_cast<std::uint64_t>(n) * 500 + i);
            CHECK(solveThreshold(inst, false).isYes() == solveThreshold(inst, true).isYes());
        }
}

TEST_CASE("threshold verdict is complement-dual") {
    for (int code = 0; code < 729; ++code) {
        const auto inst = instanceFromCode(4, code);
        CHECK(solveThreshold(inst).isYes() == solveThreshold(complementInstance(inst)).isYes());
    }
    for (int i = 0; i < 200; ++i) {
        const auto inst = randomInstance(6, 0.3, 0.4, 55000 + i);
        CHECK(solveThreshold(inst).isYes() == solveThreshold(complementInstance(inst)).isYes());
    }
}

TEST_CASE("split verdict is complement-dual") {
    for (int code = 0; code < 729; ++code) {
        const auto inst = instanceFromCode(4, code);
        CHECK(solveSplit(inst).isYes() == solveSplit(complementInstance(inst)).isYes());
    }
}
