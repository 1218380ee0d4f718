#pragma once

#include "rydwire/graph.hpp"

#include <array>
#include <iosfwd>
#include <numbers>
#include <string>
#include <vector>

namespace rydwire {

// Lengths in um, times in us, frequencies in rad/us (hbar = 1).
using Vec3 = std::array<double, 3>;

enum class AtomRole { qubit, wire };

// Two-photon Rabi frequency of the experiments, 2pi x 0.88 MHz.
inline constexpr double kTableRabi = 2.0 * std::numbers::pi * 0.88;
inline constexpr double kTableBlockadeRadius = 9.8;

// Atom positions with a precomputed distance matrix. Atom k (1-based) is
// vertex k of the induced graph.
class AtomArray {
  public:
    AtomArray() = default;
    AtomArray(std::vector<Vec3> positions, std::vector<AtomRole> roles);

    std::size_t size() const { return positions_.size(); }
    const std::vector<Vec3>& positions() const { return positions_; }
    const std::vector<AtomRole>& roles() const { return roles_; }
    // 0-based indices.
    double distance(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }
    const std::vector<double>& distance_matrix() const { return dist_; }

    // atom_map[k] is the graph vertex carried by file atom k+1; the result
    // lists atoms in vertex order.
    AtomArray reordered(const std::vector<Vertex>& atom_map) const;
    AtomArray displaced(const std::vector<Vec3>& offsets) const;

  private:
    std::vector<Vec3> positions_;
    std::vector<AtomRole> roles_;
    std::vector<double> dist_;
};

struct BlockadeParams {
    double c6_over_hbar = 0.0;  // rad/us * um^6
    double rabi_0 = 0.0;        // rad/us
    double r_b = 0.0;           // um

    static BlockadeParams from_c6(double c6_over_hbar, double rabi_0);
    // C6/hbar chosen so that the blockade radius equals r_b at rabi_0.
    static BlockadeParams from_radius(double r_b, double rabi_0);
};

// (C6 / hbar / Omega)^(1/6).
double blockade_radius(double c6_over_hbar, double rabi_0);

// Unit-disk graph: edge iff distance < r_b.
Graph induced_graph(const AtomArray& arr, double r_b);

struct PairDistance {
    Edge pair;
    double distance = 0.0;
};

struct ValidationReport {
    std::vector<PairDistance> matched;
    std::vector<PairDistance> missing;   // intended edge at distance >= r_b
    std::vector<PairDistance> spurious;  // non-edge at distance < r_b
    std::vector<PairDistance> marginal;  // within relative 1e-9 of r_b
    // (r_b - d) / r_b over intended edges and (d - r_b) / r_b over non-edges.
    double min_edge_margin = 0.0;
    double min_nonedge_margin = 0.0;

    bool ok() const { return missing.empty() && spurious.empty() && marginal.empty(); }
};

inline constexpr double kMarginalRelTol = 1e-9;

ValidationReport validate_embedding(const AtomArray& arr, const Graph& expected, double r_b);

std::string to_string(AtomRole role);

// One `role x y z` line per atom; role is `qubit` or `wire`.
AtomArray read_array(std::istream& in);
void write_array(std::ostream& out, const AtomArray& arr);

} // namespace rydwire
