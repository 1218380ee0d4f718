#pragma once

#include "rydwire/wire.hpp"

#include <random>

namespace rydwire::testing {

// Random G0 with 4-8 qubits and 1-3 even wires between non-adjacent qubit
// pairs. With `fan_out`, some wires end on two qubits.
inline WiredGraph random_wired_graph(std::mt19937_64& rng, bool fan_out = false) {
    std::uniform_int_distribution<int> nq_dist(4, 8);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (;;) {
        const int nq = nq_dist(rng);
        std::vector<Edge> edges;
        for (Vertex a = 1; a <= nq; ++a) {
            for (Vertex b = a + 1; b <= nq; ++b) {
                if (uni(rng) < 0.4) edges.emplace_back(a, b);
            }
        }
        const Graph base(nq, edges);
        std::vector<std::pair<Vertex, Vertex>> free_pairs;
        for (Vertex a = 1; a <= nq; ++a) {
            for (Vertex b = 1; b <= nq; ++b) {
                if (a != b && !base.has_edge(a, b)) free_pairs.emplace_back(a, b);
            }
        }
        if (free_pairs.empty()) continue;
        const int n_wires = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<Wire> wires;
        Vertex next = nq + 1;
        for (int w = 0; w < n_wires; ++w) {
            const auto [a, b] = free_pairs[std::uniform_int_distribution<std::size_t>(
                0, free_pairs.size() - 1)(rng)];
            Wire wire{a, {b}, {}};
            if (fan_out && uni(rng) < 0.3) {
                for (const auto& [a2, b2] : free_pairs) {
                    if (a2 == a && b2 != b) {
                        wire.endpoints_b.push_back(b2);
                        break;
                    }
                }
            }
            const int m = 2 * std::uniform_int_distribution<int>(1, 3)(rng);
            for (int k = 0; k < m; ++k) wire.chain.push_back(next++);
            wires.push_back(wire);
        }
        return WiredGraph(base, wires);
    }
}

} // namespace rydwire::testing
