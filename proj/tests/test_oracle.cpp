#include "doctest.h"
#include "sandwich/core.hpp"
#include "sandwich/oracle.hpp"
#include "sandwich/recognizers.hpp"

using namespace sandwich;

namespace {

const PairSet kC4Edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};

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

}  // namespace

TEST_CASE("oracleSolve examples") {
    // C4 fully pinned: the only completion is C4, which is not split.
    const auto pinned = makeInstance(4, kC4Edges, {{0, 2}, {1, 3}});
    CHECK(oracleSolve(pinned, ClassId::split()).kind == Certificate::Kind::No);

    // Diagonals free: binary counting reaches C4 + {0,2} (a split graph) first.
    const auto open = makeInstance(4, kC4Edges, {});
    const auto cert = oracleSolve(open, ClassId::split());
    REQUIRE(cert.kind == Certificate::Kind::CompletionYes);
    PairSet expected = kC4Edges;
    expected.insert({0, 2});
    CHECK(cert.edges == expected);
    CHECK(validCompletion(open, cert.edges));
    CHECK(isSplit(Graph(4, cert.edges)));

    const auto single = makeInstance(1, {}, {});
    CHECK(oracleSolve(single, ClassId::split()).kind == Certificate::Kind::CompletionYes);
    CHECK(oracleSolve(single, ClassId::split()).edges.empty());

    // 26 undetermined pairs exceed the enumeration cap.
    CHECK_THROWS_AS(oracleSolve(makeInstance(8, {}, {{0, 1}, {0, 2}}), ClassId::split()),
                    SizeError);
}

TEST_CASE("searchSolve examples") {
    const auto c5Only = makeInstance(5, Graph::cycle(5).edges(), Graph::cycle(5).nonEdges());
    CHECK(searchSolve(c5Only, ClassId::fFree({Graph::cycle(5)})).kind == Certificate::Kind::No);

    // Ramsey: every 2-colouring of K6's pairs has a mono triangle.
    const ClassId ramsey = ClassId::fFree({Graph::complete(3), Graph::empty(3)});
    CHECK(searchSolve(makeInstance(6, {}, {}), ramsey).kind == Certificate::Kind::No);
    const auto five = searchSolve(makeInstance(5, {}, {}), ramsey);
    REQUIRE(five.kind == Certificate::Kind::CompletionYes);
    CHECK(isIsomorphicSmall(Graph(5, five.edges), Graph::cycle(5)));

    // A starved budget reports Unknown, never a wrong verdict.
    CHECK(searchSolve(makeInstance(6, {}, {}), ramsey, 3).kind == Certificate::Kind::Unknown);
}

TEST_CASE("searchSolve agrees with oracleSolve on all n=4 instances") {
    const std::vector<ClassId> classes = {ClassId::split(), ClassId::threshold(),
                                          ClassId::completeMultipartite(),
                                          ClassId::fFree({Graph::path(4)})};
    for (const auto& cls : classes)
        for (int code = 0; code < 729; ++code) {
            const auto inst = instanceFromCode(4, code);
            const auto fast = searchSolve(inst, cls);
            const auto slow = oracleSolve(inst, cls);
            CHECK(fast.isYes() == slow.isYes());
            if (fast.kind == Certificate::Kind::CompletionYes) {
                CHECK(validCompletion(inst, fast.edges));
                CHECK(recognize(Graph(inst.n, fast.edges), cls));
            }
        }
}

TEST_CASE("searchSolve agrees with oracleSolve on random n=6,7 instances") {
    const std::vector<ClassId> classes = {ClassId::split(),
                                          ClassId::fFree({Graph::cycle(4)})};
    for (const auto& cls : classes)
        for (int n = 6; n <= 7; ++n)
            for (int i = 0; i < 150; ++i) {
                const auto inst = randomInstance(n, 0.4, 0.4, 900 + static_cast<std::uint64_t>(n) * 1000 + i);
                CHECK(searchSolve(inst, cls).isYes() == oracleSolve(inst, cls).isYes());
            }
}

TEST_CASE("oracle monotonicity in the forbidden set") {
    for (int code = 0; code < 729; ++code) {
        const auto inst = instanceFromCode(4, code);
        if (oracleSolve(inst, ClassId::split()).isYes()) continue;
        // Forbidding one more pair cannot turn No into Yes.
        for (const auto& p : undeterminedPairs(inst)) {
            auto forbidden = inst.forbidden;
            forbidden.insert(p);
            CHECK(!oracleSolve(makeInstance(4, inst.forced, forbidden), ClassId::split()).isYes());
        }
    }
}

TEST_CASE("oracle determinism") {
    const auto inst = makeInstance(5, {{0, 1}}, {{2, 3}});
    CHECK(oracleSolve(inst, ClassId::split()) == oracleSolve(inst, ClassId::split()));
    CHECK(searchSolve(inst, ClassId::split()) == searchSolve(inst, ClassId::split()));
}

TEST_CASE("pqSplitSolve matches oracleSolve and the split solver") {
    // (1,1)-split is exactly split.
    for (int code = 0; code < 729; ++code) {
        const auto inst = instanceFromCode(4, code);
        CHECK(pqSplitSolve(inst, 1, 1).isYes() ==
              oracleSolve(inst, ClassId::split()).isYes());
    }
    for (int i = 0; i < 150; ++i) {
        const auto inst = randomInstance(6, 0.35, 0.35, 4000 + i);
        const auto fast = pqSplitSolve(inst, 1, 2);
        const auto slow = oracleSolve(inst, ClassId::pqSplit(1, 2));
        CHECK(fast.isYes() == slow.isYes());
        if (fast.kind == Certificate::Kind::CompletionYes) {
            CHECK(validCompletion(inst, fast.edges));
            CHECK(isPqSplitSmall(Graph(inst.n, fast.edges), 1, 2));
        }
    }
}
