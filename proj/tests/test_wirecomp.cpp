#include "rydwire/catalog.hpp"
#include "rydwire/error.hpp"
#include "rydwire/mis.hpp"
#include "rydwire/wire.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace rydwire;

namespace {

const std::vector<std::string> kWired{"C6", "5-pan", "K5exp", "K3,3exp", "S6exp", "moser-wired"};

} // namespace

TEST_CASE("wire_edge builds the wired P4") {
    const WiredGraph wg = catalog_wired("C6");
    CHECK(wg.n_qubits() == 4);
    CHECK(wg.n_atoms() == 6);
    CHECK(wg.combined() == catalog_get("C6"));
    REQUIRE(wg.wires().size() == 1);
    CHECK(wg.wires()[0].chain == std::vector<Vertex>{5, 6});
}

TEST_CASE("wire validation") {
    const WiredGraph p4(catalog_get("P4"));
    CHECK_THROWS_AS(wire_edge(p4, 1, 4, 3), ParityError);
    CHECK_THROWS_AS(wire_edge(p4, 1, 4, 0), InvalidInputError);
    CHECK_THROWS_AS(wire_edge(p4, 1, 2, 2), AdjacencyError);
    CHECK_THROWS_AS(wire_edge(p4, 1, 9, 2), InvalidInputError);
    CHECK_THROWS_AS(WiredGraph(catalog_get("P4"), {Wire{1, {4}, {5, 7}}}), InvalidInputError);
    CHECK_THROWS_AS(WiredGraph(catalog_get("P4"), {Wire{1, {1}, {5, 6}}}), InvalidInputError);
}

TEST_CASE("target_of") {
    CHECK(target_of(catalog_wired("C6")) == catalog_get("C4"));
    CHECK(target_of(catalog_wired("5-pan")) == catalog_get("3-pan-fig2"));
    CHECK(target_of(catalog_wired("K5exp")) == catalog_get("K5"));
    CHECK(target_of(catalog_wired("K3,3exp")) == catalog_get("K3,3"));
    CHECK(target_of(catalog_wired("S6exp")) == catalog_get("S6"));
    CHECK(target_of(catalog_wired("moser-wired")) == catalog_get("moser"));
    const WiredGraph bare(catalog_get("W7"));
    CHECK(target_of(bare) == catalog_get("W7"));
}

TEST_CASE("projection and frustration") {
    const WiredGraph c6 = catalog_wired("C6");
    CHECK(project_solution({1, 3, 6}, c6) == VertexSet{1, 3});
    CHECK(project_solution({2, 4, 5}, c6) == VertexSet{2, 4});
    CHECK(project_solution({5}, c6).empty());
    CHECK(project_solution({1, 3}, c6) == VertexSet{1, 3});
    CHECK_FALSE(is_frustrated({1, 3}, c6));
    CHECK(is_frustrated({1, 2, 4}, catalog_wired("5-pan")));
    CHECK(is_frustrated({2, 5}, catalog_wired("K5exp")));
    // Only wire boundary pairs count.
    CHECK_FALSE(is_frustrated({1, 2}, catalog_wired("K5exp")));
}

TEST_CASE("printed wired solutions") {
    CHECK(mis_via_wires(catalog_wired("C6")) == VertexSetFamily{{2, 4}, {1, 3}});
    CHECK(mis_via_wires(catalog_wired("5-pan")) == VertexSetFamily{{1, 4}, {2, 4}});
    CHECK(mis_via_wires(catalog_wired("K5exp")) == VertexSetFamily{{1}, {2}, {3}, {4}, {5}});
    CHECK(mis_via_wires(catalog_wired("K3,3exp")) == VertexSetFamily{{1, 2, 3}, {4, 5, 6}});
    CHECK(mis_via_wires(catalog_wired("S6exp")) == VertexSetFamily{{2, 3, 4, 5, 6, 7}});

    const auto c6 = analyze_wires(catalog_wired("C6"));
    CHECK(c6.projected == VertexSetFamily{{2, 4}, {1, 3}});
    CHECK(c6.frustrated.empty());
    const auto pan = analyze_wires(catalog_wired("5-pan"));
    CHECK(pan.projected == VertexSetFamily{{1, 4}, {2, 4}, {1, 2, 4}});
    CHECK(pan.frustrated == VertexSetFamily{{1, 2, 4}});
}

TEST_CASE("vertex splitting") {
    const WiredGraph s6 = catalog_wired("S6exp");
    CHECK(s6.n_atoms() == 13);
    for (Vertex v = 1; v <= s6.n_atoms(); ++v) CHECK(s6.combined().degree(v) <= 3);
    CHECK(split_vertex(catalog_get("S6"), SplitPlan{}).combined() == catalog_get("S6"));
    // Groups too large for the degree cap.
    CHECK_THROWS_AS(split_vertex(catalog_get("S6"), SplitPlan{1, {{2, 3, 4}, {5, 6, 7}}, 2}),
                    PlanError);
    // Overlap and missing coverage.
    CHECK_THROWS_AS(split_vertex(catalog_get("S6"), SplitPlan{1, {{2, 3}, {3, 4}, {6, 7}}, 2}),
                    PlanError);
    CHECK_THROWS_AS(split_vertex(catalog_get("S6"), SplitPlan{1, {{2, 3}, {4, 5}}, 2}), PlanError);
    CHECK_THROWS_AS(split_vertex(catalog_get("S6"), SplitPlan{1, {{2, 3}, {4, 5}, {6, 7}}, 3}),
                    ParityError);
}

TEST_CASE("wired graph file round trip") {
    for (const auto& name : kWired) {
        const WiredGraph wg = catalog_wired(name);
        std::stringstream ss;
        write_wired_graph(ss, wg);
        CHECK(read_wired_graph(ss) == wg);
    }
    std::istringstream bad("n 4\n1 2\nwire 1 3 5 6\n");
    CHECK_THROWS_AS(read_wired_graph(bad), InvalidInputError);
}

TEST_CASE("wire identity on bundled wired graphs") {
    for (const auto& name : kWired) {
        CAPTURE(name);
        const WiredGraph wg = catalog_wired(name);
        CHECK(mis_via_wires(wg) == mis_brute_force(target_of(wg)));
    }
}

TEST_CASE("wire identity on random instances") {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 150; ++trial) {
        const WiredGraph wg = testing::random_wired_graph(rng, trial >= 100);
        CAPTURE(trial);
        const auto ws = analyze_wires(wg);
        const auto direct = mis_brute_force(target_of(wg));
        REQUIRE(ws.solution == direct);
        for (const auto& s : direct) CHECK(ws.projected.count(s) == 1);
    }
}

TEST_CASE("unfrustrated MIS hold M/2 atoms on every chain") {
    std::mt19937_64 rng(99);
    std::vector<WiredGraph> cases;
    for (const auto& name : kWired) cases.push_back(catalog_wired(name));
    for (int i = 0; i < 40; ++i) cases.push_back(testing::random_wired_graph(rng, i % 2 == 1));
    for (const auto& wg : cases) {
        for (const auto& s : mis_brute_force(wg.combined())) {
            if (is_frustrated(s, wg)) continue;
            for (const auto& w : wg.wires()) {
                int on = 0;
                for (Vertex c : w.chain) on += s.contains(c);
                CHECK(on == w.length() / 2);
            }
        }
    }
}

TEST_CASE("projection is idempotent on qubit sets") {
    const WiredGraph wg = catalog_wired("K3,3exp");
    for (std::uint64_t m = 0; m < 64; ++m) {
        const auto s = VertexSet::from_mask(m);
        CHECK(project_solution(project_solution(s, wg), wg) == project_solution(s, wg));
        CHECK(project_solution(s, wg) == s);
    }
}
