#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rydwire {

// Vertex labels are 1-based everywhere in the public API.
using Vertex = int;

// Unordered pair stored with first < second.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

// Sorted, duplicate-free set of vertex labels.
class VertexSet {
  public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    // Bit (v-1) set for each member v.
    static VertexSet from_mask(std::uint64_t mask);
    std::uint64_t mask() const;

    const std::vector<Vertex>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    std::string to_string() const;

    auto operator<=>(const VertexSet&) const = default;

  private:
    std::vector<Vertex> members_;
};

using VertexSetFamily = std::set<VertexSet>;

std::string to_string(const VertexSetFamily& family);

// Simple undirected graph on vertices 1..n. Adjacency is kept as bitmasks,
// which caps n at 64.
class Graph {
  public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n_vertices, const std::vector<Edge>& edges = {});
    Graph(int n_vertices, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    int n_vertices() const { return n_; }
    std::size_t n_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }
    bool has_edge(Vertex a, Vertex b) const;
    int degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    // Bit (w-1) set for every neighbor w of v.
    std::uint64_t neighbor_mask(Vertex v) const;

    Graph with_edge(Vertex a, Vertex b) const;
    Graph without_edge(Vertex a, Vertex b) const;
    Graph with_extra_vertices(int count) const;
    // Subgraph induced on vertices 1..k.
    Graph restricted_to_prefix(int k) const;
    // perm[i] is the new label of old vertex i+1.
    Graph relabeled(const std::vector<Vertex>& perm) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
};

bool is_independent(const Graph& g, const VertexSet& s);

// Edge-list exchange format: header `n <N>` followed by one `u v` line per
// edge. Blank lines and `#` comments are ignored.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace rydwire
