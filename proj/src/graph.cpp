#include "rydwire/graph.hpp"

#include "rydwire/error.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace rydwire {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.front() < 1) {
        throw InvalidInputError("vertex labels are 1-based, got " +
                                std::to_string(members_.front()));
    }
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    std::vector<Vertex> members;
    members.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
        members.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    VertexSet s;
    s.members_ = std::move(members);
    return s;
}

std::uint64_t VertexSet::mask() const {
    std::uint64_t m = 0;
    for (Vertex v : members_) {
        if (v > Graph::kMaxVertices) {
            throw InvalidInputError("vertex " + std::to_string(v) + " exceeds mask width");
        }
        m |= std::uint64_t{1} << (v - 1);
    }
    return m;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i != 0) out += ",";
        out += std::to_string(members_[i]);
    }
    return out + "}";
}

std::string to_string(const VertexSetFamily& family) {
    std::string out = "{";
    bool first = true;
    for (const auto& s : family) {
        if (!first) out += ",";
        first = false;
        out += s.to_string();
    }
    return out + "}";
}

Graph::Graph(int n_vertices, const std::vector<Edge>& edges) : n_(n_vertices) {
    if (n_vertices < 0) throw InvalidInputError("negative vertex count");
    if (n_vertices > kMaxVertices) {
        throw CapacityError("vertex count " + std::to_string(n_vertices) + " exceeds " +
                            std::to_string(kMaxVertices));
    }
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges) {
        if (e.u == e.v) {
            throw InvalidInputError("self-loop at vertex " + std::to_string(e.u));
        }
        check_vertex(e.u);
        check_vertex(e.v);
        if (has_edge(e.u, e.v)) {
            throw InvalidInputError("duplicate edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "}");
        }
        adj_[e.u - 1] |= std::uint64_t{1} << (e.v - 1);
        adj_[e.v - 1] |= std::uint64_t{1} << (e.u - 1);
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
}

Graph::Graph(int n_vertices, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n_vertices, [&] {
          std::vector<Edge> out;
          for (auto [a, b] : edges) out.emplace_back(a, b);
          return out;
      }()) {}

void Graph::check_vertex(Vertex v) const {
    if (!has_vertex(v)) {
        throw InvalidInputError("vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(n_));
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    return (adj_[a - 1] >> (b - 1)) & 1U;
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return std::popcount(adj_[v - 1]);
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    return VertexSet::from_mask(neighbor_mask(v)).members();
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
    check_vertex(v);
    return adj_[v - 1];
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
    auto edges = edges_;
    edges.emplace_back(a, b);
    return Graph(n_, edges);
}

Graph Graph::without_edge(Vertex a, Vertex b) const {
    auto edges = edges_;
    auto it = std::find(edges.begin(), edges.end(), Edge(a, b));
    if (it == edges.end()) {
        throw InvalidInputError("no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    edges.erase(it);
    return Graph(n_, edges);
}

Graph Graph::with_extra_vertices(int count) const { return Graph(n_ + count, edges_); }

Graph Graph::restricted_to_prefix(int k) const {
    if (k < 0 || k > n_) throw InvalidInputError("prefix size outside graph");
    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
        if (e.v <= k) kept.push_back(e);
    }
    return Graph(k, kept);
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw InvalidInputError("relabeling size mismatch");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    for (Vertex v : perm) {
        check_vertex(v);
        if (seen[v]) throw InvalidInputError("relabeling is not a permutation");
        seen[v] = true;
    }
    std::vector<Edge> edges;
    for (const Edge& e : edges_) edges.emplace_back(perm[e.u - 1], perm[e.v - 1]);
    return Graph(n_, edges);
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) {
        if (!g.has_vertex(v)) {
            throw InvalidInputError("vertex " + std::to_string(v) + " not in graph of " +
                                    std::to_string(g.n_vertices()) + " vertices");
        }
    }
    const std::uint64_t m = s.mask();
    for (Vertex v : s) {
        if (g.neighbor_mask(v) & m) return false;
    }
    return true;
}

Graph read_edge_list(std::istream& in) {
    int n = -1;
    std::vector<Edge> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "n") {
            if (n >= 0 || !(ls >> n)) {
                throw InvalidInputError("line " + std::to_string(lineno) + ": bad header");
            }
            continue;
        }
        if (n < 0) {
            throw InvalidInputError("line " + std::to_string(lineno) +
                                    ": edge before `n <N>` header");
        }
        Vertex a = 0;
        Vertex b = 0;
        std::istringstream es(line);
        std::string rest;
        if (!(es >> a >> b) || (es >> rest)) {
            throw InvalidInputError("line " + std::to_string(lineno) + ": expected `u v`");
        }
        edges.emplace_back(a, b);
    }
    if (n < 0) throw InvalidInputError("missing `n <N>` header");
    return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.n_vertices() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

} // namespace rydwire
