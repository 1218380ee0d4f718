#include "rydwire/catalog.hpp"

#include "rydwire/error.hpp"

#include <algorithm>
#include <map>

namespace rydwire {
namespace {

Graph complete(int n) {
    std::vector<Edge> edges;
    for (Vertex a = 1; a <= n; ++a) {
        for (Vertex b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
    }
    return Graph(n, edges);
}

Graph star(int leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 2; v <= leaves + 1; ++v) edges.emplace_back(1, v);
    return Graph(leaves + 1, edges);
}

Graph moser_spindle() {
    // Two rhombi {1,2,3,4} and {1,5,6,7} sharing vertex 1; tips 4 and 7
    // joined.
    return Graph(7, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {1, 5}, {1, 6}, {5, 6}, {5, 7},
                     {6, 7}, {4, 7}});
}

std::string canonical(std::string_view name) {
    static const std::map<std::string, std::string, std::less<>> aliases = {
        {"K33", "K3,3"},
        {"K_{3,3}", "K3,3"},
        {"K33exp", "K3,3exp"},
        {"K5e", "K5-e"},
        {"3pan", "3-pan"},
        {"5pan", "5-pan"},
        {"Moser spindle", "moser"},
        {"moser-spindle", "moser"},
    };
    if (auto it = aliases.find(name); it != aliases.end()) return it->second;
    return std::string(name);
}

} // namespace

std::vector<std::string> catalog_names() {
    return {"P4",   "C4", "C6", "S4", "3-pan", "3-pan-fig2", "5-pan", "K5",
            "K5-e", "K3,3", "A", "S6", "W7", "X101", "moser", "7K1",
            "K5exp", "K3,3exp", "S6exp", "moser-wired"};
}

WiredGraph catalog_wired(std::string_view raw) {
    const std::string name = canonical(raw);
    if (name == "C6") return wire_edge(WiredGraph(catalog_get("P4")), 1, 4, 2);
    if (name == "5-pan") return wire_edge(WiredGraph(catalog_get("S4")), 1, 2, 2);
    if (name == "K5exp") return wire_edge(WiredGraph(catalog_get("K5-e")), 2, 5, 6);
    if (name == "K3,3exp") {
        // Wire order fixes the chain labels 7-8, 9-14, 15-20.
        WiredGraph wg(catalog_get("A"));
        wg = wire_edge(wg, 1, 4, 2);
        wg = wire_edge(wg, 4, 3, 6);
        return wire_edge(wg, 1, 6, 6);
    }
    if (name == "S6exp") {
        return split_vertex(catalog_get("S6"), SplitPlan{1, {{2, 3}, {4, 5}, {6, 7}}, 2});
    }
    if (name == "moser-wired") return wire_edge(WiredGraph(catalog_get("X101")), 4, 7, 6);
    return WiredGraph(catalog_get(name));
}

Graph catalog_get(std::string_view raw) {
    const std::string name = canonical(raw);
    if (name == "P4") return Graph(4, {{1, 2}, {2, 3}, {3, 4}});
    if (name == "C4") return Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    if (name == "C6") return Graph(6, {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 6}, {4, 6}});
    if (name == "S4") return Graph(4, {{1, 3}, {2, 3}, {3, 4}});
    if (name == "3-pan") return Graph(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}});
    if (name == "3-pan-fig2") return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
    if (name == "5-pan") return catalog_wired(name).combined();
    if (name == "K5") return complete(5);
    if (name == "K5-e") return complete(5).without_edge(2, 5);
    if (name == "K3,3") {
        std::vector<Edge> edges;
        for (Vertex a = 1; a <= 3; ++a) {
            for (Vertex b = 4; b <= 6; ++b) edges.emplace_back(a, b);
        }
        return Graph(6, edges);
    }
    // 4-cycle 2-5-3-6 with pendants 1 (at 5) and 4 (at 2).
    if (name == "A") return Graph(6, {{1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}});
    if (name == "S6") return star(6);
    if (name == "W7") {
        Graph g = star(6);
        for (Vertex v = 2; v <= 7; ++v) g = g.with_edge(v, v == 7 ? 2 : v + 1);
        return g;
    }
    if (name == "moser") return moser_spindle();
    if (name == "X101") return moser_spindle().without_edge(4, 7);
    if (name == "7K1") return Graph(7);
    if (name == "K5exp" || name == "K3,3exp" || name == "S6exp" || name == "moser-wired") {
        return catalog_wired(name).combined();
    }
    throw LookupError("unknown catalog graph '" + std::string(raw) + "'");
}

} // namespace rydwire
