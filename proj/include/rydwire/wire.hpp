#pragma once

#include "rydwire/graph.hpp"

#include <iosfwd>
#include <map>
#include <vector>

namespace rydwire {

// A chain of an even number of auxiliary atoms joining qubit endpoint_a to
// the qubit(s) on the far side:
//
//   endpoint_a - chain[0] - ... - chain[M-1] - {endpoints_b}
//
// An ordinary wire has exactly one far endpoint and stands in for the edge
// (endpoint_a, endpoint_b). A vertex-splitting wire fans out: its last chain
// atom touches every vertex of a neighbour group of the split vertex.
struct Wire {
    Vertex endpoint_a = 0;
    std::vector<Vertex> endpoints_b;
    std::vector<Vertex> chain;

    int length() const { return static_cast<int>(chain.size()); }
    bool operator==(const Wire&) const = default;
};

// Initial graph G0 on qubit vertices 1..N plus wires whose chain atoms take
// the labels N+1..N+sum(M). combined() is the physical graph G0+w.
class WiredGraph {
  public:
    WiredGraph() = default;
    explicit WiredGraph(Graph base, std::vector<Wire> wires = {});

    const Graph& base() const { return base_; }
    const std::vector<Wire>& wires() const { return wires_; }
    const Graph& combined() const { return combined_; }

    int n_qubits() const { return base_.n_vertices(); }
    int n_atoms() const { return combined_.n_vertices(); }
    bool is_qubit(Vertex v) const { return v >= 1 && v <= n_qubits(); }

    bool operator==(const WiredGraph& other) const {
        return base_ == other.base_ && wires_ == other.wires_;
    }

  private:
    Graph base_;
    std::vector<Wire> wires_;
    Graph combined_;
};

// Adds a wire of m fresh atoms between qubits a and b. Fresh labels follow
// the existing atoms, in chain order starting next to a.
WiredGraph wire_edge(const WiredGraph& wg, Vertex a, Vertex b, int m);

inline constexpr int kDefaultMaxPhysicalDegree = 3;

// Replaces the edges between `center` and its neighbours by one fan-out
// wire per group. Chain atoms are numbered position-major from the far end:
// first the atom touching each group (in group order), then the next atom
// towards the center, and so on.
struct SplitPlan {
    Vertex center = 0;
    std::vector<std::vector<Vertex>> groups;
    int chain_length = 2;
};

WiredGraph split_vertex(const Graph& target, const SplitPlan& plan,
                        int max_physical_degree = kDefaultMaxPhysicalDegree);

// G_T: the base graph plus an edge (a, b) for every far endpoint b of every
// wire.
Graph target_of(const WiredGraph& wg);

// Restriction of a configuration of G0+w to the qubit atoms.
VertexSet project_solution(const VertexSet& s, const WiredGraph& wg);

// True iff some wire has both boundary atoms excited, i.e. f(n_A, n_B) = 1.
bool is_frustrated(const VertexSet& s, const WiredGraph& wg);

struct WireSolution {
    VertexSetFamily combined_mis;           // M(G0+w)
    VertexSetFamily projected;              // projected family, with frustrated members
    VertexSetFamily frustrated;             // frustrated subset of `projected`
    VertexSetFamily solution;               // projected minus frustrated
    std::map<VertexSet, int> preimage_count;
};

// Full bookkeeping behind mis_via_wires.
WireSolution analyze_wires(const WiredGraph& wg);

// M(G_T) recovered from the oracle solution of G0+w by projection and
// frustration removal.
VertexSetFamily mis_via_wires(const WiredGraph& wg);

// Edge-list format with extra `wire a b : w1 ... wM` lines. The header
// counts qubit vertices only and edge lines list base edges. A fan-out wire
// writes its far endpoints comma-separated: `wire 1 2,3 : 11 8`.
WiredGraph read_wired_graph(std::istream& in);
void write_wired_graph(std::ostream& out, const WiredGraph& wg);

} // namespace rydwire
