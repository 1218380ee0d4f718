#include "rydwire/wire.hpp"

#include "rydwire/error.hpp"
#include "rydwire/mis.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace rydwire {
namespace {

std::string pair_str(Vertex a, Vertex b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_length(int m) {
    if (m % 2 != 0) {
        throw ParityError("wire length " + std::to_string(m) + " is odd; wires must be even");
    }
    if (m < 2) throw InvalidInputError("wire length must be at least 2");
}

} // namespace

WiredGraph::WiredGraph(Graph base, std::vector<Wire> wires)
    : base_(std::move(base)), wires_(std::move(wires)) {
    const int n = base_.n_vertices();
    int total = 0;
    for (const Wire& w : wires_) total += w.length();

    std::vector<bool> used(static_cast<std::size_t>(n + total) + 1, false);
    std::vector<Edge> edges = base_.edges();
    for (const Wire& w : wires_) {
        check_length(w.length());
        if (!base_.has_vertex(w.endpoint_a)) {
            throw InvalidInputError("wire endpoint " + std::to_string(w.endpoint_a) +
                                    " is not a qubit vertex");
        }
        if (w.endpoints_b.empty()) throw InvalidInputError("wire without far endpoint");
        std::set<Vertex> far;
        for (Vertex b : w.endpoints_b) {
            if (!base_.has_vertex(b)) {
                throw InvalidInputError("wire endpoint " + std::to_string(b) +
                                        " is not a qubit vertex");
            }
            if (b == w.endpoint_a) throw InvalidInputError("wire endpoints coincide");
            if (!far.insert(b).second) throw InvalidInputError("repeated far endpoint");
            if (base_.has_edge(w.endpoint_a, b)) {
                throw AdjacencyError("wire " + pair_str(w.endpoint_a, b) +
                                     " duplicates an existing edge");
            }
        }
        for (Vertex c : w.chain) {
            if (c <= n || c > n + total) {
                throw InvalidInputError("chain atom " + std::to_string(c) + " outside " +
                                        std::to_string(n + 1) + ".." + std::to_string(n + total));
            }
            if (used[c]) {
                throw InvalidInputError("chain atom " + std::to_string(c) + " used twice");
            }
            used[c] = true;
        }
        edges.emplace_back(w.endpoint_a, w.chain.front());
        for (std::size_t i = 0; i + 1 < w.chain.size(); ++i) {
            edges.emplace_back(w.chain[i], w.chain[i + 1]);
        }
        for (Vertex b : w.endpoints_b) edges.emplace_back(w.chain.back(), b);
    }
    combined_ = Graph(n + total, edges);
}

WiredGraph wire_edge(const WiredGraph& wg, Vertex a, Vertex b, int m) {
    check_length(m);
    if (a == b) throw InvalidInputError("cannot wire a vertex to itself");
    if (!wg.is_qubit(a) || !wg.is_qubit(b)) {
        throw InvalidInputError("wire endpoints must be qubit vertices, got " + pair_str(a, b));
    }
    if (wg.combined().has_edge(a, b)) {
        throw AdjacencyError("vertices " + pair_str(a, b) + " are already adjacent");
    }
    Wire w{a, {b}, {}};
    for (int i = 1; i <= m; ++i) w.chain.push_back(wg.n_atoms() + i);
    auto wires = wg.wires();
    wires.push_back(std::move(w));
    return WiredGraph(wg.base(), std::move(wires));
}

WiredGraph split_vertex(const Graph& target, const SplitPlan& plan, int max_physical_degree) {
    if (plan.groups.empty()) return WiredGraph(target);
    if (!target.has_vertex(plan.center)) {
        throw PlanError("split center " + std::to_string(plan.center) + " not in graph");
    }
    if (target.degree(plan.center) <= max_physical_degree) {
        throw PlanError("vertex " + std::to_string(plan.center) + " has degree " +
                        std::to_string(target.degree(plan.center)) +
                        ", no split needed at max degree " + std::to_string(max_physical_degree));
    }
    check_length(plan.chain_length);
    if (static_cast<int>(plan.groups.size()) > max_physical_degree) {
        throw PlanError("more groups than the physical degree allows");
    }
    const auto neighbors = target.neighbors(plan.center);
    std::set<Vertex> covered;
    for (const auto& group : plan.groups) {
        if (group.empty()) throw PlanError("empty split group");
        if (static_cast<int>(group.size()) + 1 > max_physical_degree) {
            throw PlanError("split group of " + std::to_string(group.size()) +
                            " exceeds physical degree");
        }
        for (Vertex v : group) {
            if (!std::binary_search(neighbors.begin(), neighbors.end(), v)) {
                throw PlanError("vertex " + std::to_string(v) + " is not a neighbour of " +
                                std::to_string(plan.center));
            }
            if (!covered.insert(v).second) {
                throw PlanError("vertex " + std::to_string(v) + " appears in two groups");
            }
        }
    }
    if (covered.size() != neighbors.size()) {
        throw PlanError("split groups do not cover every neighbour of the center");
    }

    Graph base = target;
    for (Vertex v : neighbors) base = base.without_edge(plan.center, v);

    const int n = target.n_vertices();
    const int k = static_cast<int>(plan.groups.size());
    const int m = plan.chain_length;
    std::vector<Wire> wires;
    for (int g = 0; g < k; ++g) {
        Wire w{plan.center, plan.groups[g], std::vector<Vertex>(m)};
        std::sort(w.endpoints_b.begin(), w.endpoints_b.end());
        for (int pos = 0; pos < m; ++pos) {
            // pos counts from the center; label rank counts from the far end.
            const int rank_from_far = m - 1 - pos;
            w.chain[pos] = n + rank_from_far * k + g + 1;
        }
        wires.push_back(std::move(w));
    }
    return WiredGraph(std::move(base), std::move(wires));
}

Graph target_of(const WiredGraph& wg) {
    std::set<Edge> edges(wg.base().edges().begin(), wg.base().edges().end());
    for (const Wire& w : wg.wires()) {
        for (Vertex b : w.endpoints_b) edges.emplace(w.endpoint_a, b);
    }
    return Graph(wg.n_qubits(), std::vector<Edge>(edges.begin(), edges.end()));
}

VertexSet project_solution(const VertexSet& s, const WiredGraph& wg) {
    std::vector<Vertex> kept;
    for (Vertex v : s) {
        if (!wg.combined().has_vertex(v)) {
            throw InvalidInputError("vertex " + std::to_string(v) + " not in wired graph");
        }
        if (wg.is_qubit(v)) kept.push_back(v);
    }
    return VertexSet(std::move(kept));
}

bool is_frustrated(const VertexSet& s, const WiredGraph& wg) {
    for (const Wire& w : wg.wires()) {
        if (!s.contains(w.endpoint_a)) continue;
        for (Vertex b : w.endpoints_b) {
            if (s.contains(b)) return true;
        }
    }
    return false;
}

WireSolution analyze_wires(const WiredGraph& wg) {
    WireSolution out;
    out.combined_mis = mis_brute_force(wg.combined());
    for (const VertexSet& s : out.combined_mis) {
        VertexSet p = project_solution(s, wg);
        ++out.preimage_count[p];
        out.projected.insert(p);
    }
    for (const VertexSet& p : out.projected) {
        if (is_frustrated(p, wg)) {
            out.frustrated.insert(p);
        } else {
            out.solution.insert(p);
        }
    }
    return out;
}

VertexSetFamily mis_via_wires(const WiredGraph& wg) { return analyze_wires(wg).solution; }

WiredGraph read_wired_graph(std::istream& in) {
    std::ostringstream plain;
    std::vector<Wire> wires;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line.substr(0, line.find('#'));
        std::istringstream ls(body);
        std::string head;
        if (!(ls >> head) || head != "wire") {
            plain << body << '\n';
            continue;
        }
        Wire w;
        std::string far;
        std::string colon;
        if (!(ls >> w.endpoint_a >> far >> colon) || colon != ":") {
            throw InvalidInputError("line " + std::to_string(lineno) +
                                    ": expected `wire a b : w1 ... wM`");
        }
        std::replace(far.begin(), far.end(), ',', ' ');
        std::istringstream fs(far);
        for (Vertex b = 0; fs >> b;) w.endpoints_b.push_back(b);
        for (Vertex c = 0; ls >> c;) w.chain.push_back(c);
        if (!ls.eof() || w.endpoints_b.empty() || w.chain.empty()) {
            throw InvalidInputError("line " + std::to_string(lineno) + ": malformed wire");
        }
        wires.push_back(std::move(w));
    }
    std::istringstream base_in(plain.str());
    return WiredGraph(read_edge_list(base_in), std::move(wires));
}

void write_wired_graph(std::ostream& out, const WiredGraph& wg) {
    write_edge_list(out, wg.base());
    for (const Wire& w : wg.wires()) {
        out << "wire " << w.endpoint_a << ' ';
        for (std::size_t i = 0; i < w.endpoints_b.size(); ++i) {
            out << (i ? "," : "") << w.endpoints_b[i];
        }
        out << " :";
        for (Vertex c : w.chain) out << ' ' << c;
        out << '\n';
    }
}

} // namespace rydwire
