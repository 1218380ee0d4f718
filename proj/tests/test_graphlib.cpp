#include "rydwire/catalog.hpp"
#include "rydwire/error.hpp"
#include "rydwire/graph.hpp"
#include "rydwire/mis.hpp"

#include <doctest.h>

#include <chrono>
#include <random>
#include <sstream>

using namespace rydwire;

namespace {

// Reference enumeration over all 2^n subsets.
VertexSetFamily exhaustive_mis(const Graph& g) {
    const int n = g.n_vertices();
    VertexSetFamily best;
    std::size_t size = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const auto s = VertexSet::from_mask(m);
        if (!is_independent(g, s)) continue;
        if (s.size() > size) {
            size = s.size();
            best.clear();
        }
        if (s.size() == size) best.insert(s);
    }
    return best;
}

} // namespace

TEST_CASE("vertex sets are sorted and unique") {
    const VertexSet s{3, 1, 3};
    CHECK(s.members() == std::vector<Vertex>{1, 3});
    CHECK(s.to_string() == "{1,3}");
    CHECK(VertexSet::from_mask(0b101).members() == std::vector<Vertex>{1, 3});
    CHECK(s.mask() == 0b101);
    CHECK(VertexSet{}.to_string() == "{}");
}

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidInputError);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), InvalidInputError);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), InvalidInputError);
    CHECK_THROWS_AS(Graph(65), CapacityError);
}

TEST_CASE("graph queries") {
    const Graph g = catalog_get("3-pan");
    CHECK(g.n_vertices() == 4);
    CHECK(g.n_edges() == 4);
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.degree(2) == 3);
    CHECK(g.neighbors(2) == std::vector<Vertex>{1, 3, 4});
    CHECK(g.with_edge(1, 3).n_edges() == 5);
    CHECK(g.without_edge(1, 2).n_edges() == 3);
    CHECK(g.with_extra_vertices(2).n_vertices() == 6);
    CHECK(g.restricted_to_prefix(2).n_edges() == 1);
}

TEST_CASE("edge list round trip") {
    for (const auto& name : catalog_names()) {
        const Graph g = catalog_get(name);
        std::stringstream ss;
        write_edge_list(ss, g);
        CHECK(read_edge_list(ss) == g);
    }
    std::istringstream in("# comment\nn 3\n1 2 # trailing\n\n2 3\n");
    CHECK(read_edge_list(in) == Graph(3, {{1, 2}, {2, 3}}));
    std::istringstream bad("n 3\n1 x\n");
    CHECK_THROWS_AS(read_edge_list(bad), InvalidInputError);
}

TEST_CASE("catalog lookups") {
    CHECK(catalog_get("K33") == catalog_get("K3,3"));
    CHECK_THROWS_AS(catalog_get("no-such-graph"), LookupError);
    CHECK(catalog_get("X101").n_edges() == 10);
    CHECK(catalog_get("W7").n_edges() == 12);
}

TEST_CASE("printed MIS families") {
    const auto t0 = std::chrono::steady_clock::now();
    CHECK(mis_brute_force(catalog_get("3-pan")) == VertexSetFamily{{1, 3}, {1, 4}});
    CHECK(mis_brute_force(catalog_get("P4")) == VertexSetFamily{{2, 4}, {1, 4}, {1, 3}});
    CHECK(mis_brute_force(catalog_get("C4")) == VertexSetFamily{{2, 4}, {1, 3}});
    CHECK(mis_brute_force(catalog_get("S4")) == VertexSetFamily{{1, 2, 4}});
    CHECK(mis_brute_force(catalog_get("3-pan-fig2")) == VertexSetFamily{{1, 4}, {2, 4}});
    CHECK(mis_brute_force(catalog_get("K5")) == VertexSetFamily{{1}, {2}, {3}, {4}, {5}});
    CHECK(mis_brute_force(catalog_get("K3,3")) == VertexSetFamily{{1, 2, 3}, {4, 5, 6}});
    CHECK(mis_brute_force(catalog_get("S6")) == VertexSetFamily{{2, 3, 4, 5, 6, 7}});
    CHECK(mis_brute_force(catalog_get("7K1")) == VertexSetFamily{{1, 2, 3, 4, 5, 6, 7}});
    CHECK(mis_brute_force(Graph(1)) == VertexSetFamily{{1}});
    CHECK(independence_number(catalog_get("moser")) == 2);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(s < 1.0);
}

TEST_CASE("oracle capacity") {
    CHECK_NOTHROW(mis_brute_force(Graph(30)));
    CHECK_THROWS_AS(mis_brute_force(Graph(31)), CapacityError);
}

TEST_CASE("branch and bound agrees with subset enumeration") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 12;
        const double p = 0.1 + 0.8 * uni(rng);
        std::vector<Edge> edges;
        for (Vertex a = 1; a <= n; ++a) {
            for (Vertex b = a + 1; b <= n; ++b) {
                if (uni(rng) < p) edges.emplace_back(a, b);
            }
        }
        const Graph g(n, edges);
        const auto fam = mis_brute_force(g);
        REQUIRE(fam == exhaustive_mis(g));
        for (const auto& s : fam) CHECK(is_independent(g, s));
    }
}

TEST_CASE("MIS family is invariant under relabeling") {
    const Graph g = catalog_get("moser");
    const std::vector<Vertex> perm{7, 6, 5, 4, 3, 2, 1};
    VertexSetFamily mapped;
    for (const auto& s : mis_brute_force(g)) {
        std::vector<Vertex> m;
        for (Vertex v : s) m.push_back(perm[static_cast<std::size_t>(v - 1)]);
        mapped.insert(VertexSet(m));
    }
    CHECK(mis_brute_force(g.relabeled(perm)) == mapped);
}
