#pragma once

#include "rydwire/geometry.hpp"
#include "rydwire/graph.hpp"
#include "rydwire/schedule.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace rydwire {

using cplx = std::complex<double>;

// Dense state storage is capped here.
inline constexpr int kMaxStateAtoms = 24;

// Graph-mode blockade energy, 2pi x 50 MHz.
inline constexpr double kDefaultInteractionU = kTwoPi * 50.0;

enum class InteractionMode { graph, physical };

// Interaction part of the Rydberg Hamiltonian.
//
// graph mode:    U n_j n_k on every edge of `graph`.
// physical mode: C6/hbar * d_jk^-6 n_j n_k on every atom pair of `array`,
//                including pairs beyond the blockade radius.
struct HamiltonianSpec {
    InteractionMode mode = InteractionMode::graph;
    Graph graph;
    double interaction_u = 0.0;
    AtomArray array;
    double c6_over_hbar = 0.0;

    static HamiltonianSpec graph_mode(Graph g, double u);
    static HamiltonianSpec physical_mode(AtomArray arr, double c6_over_hbar);

    int n_atoms() const;
    // Row-major n x n coupling matrix (rad/us), zero diagonal.
    std::vector<double> pair_couplings() const;
    double max_coupling() const;
};

// Basis index convention: atom 1 is the most significant bit, bit value 1
// is the Rydberg state.
inline std::uint64_t atom_bit(int n_atoms, Vertex atom) {
    return std::uint64_t{1} << (n_atoms - atom);
}

// Matrix-free Rydberg Hamiltonian
//
//   H = sum_{j<k} V_jk n_j n_k - (delta/2) sum_j sigma^z_j + (Omega/2) sum_j sigma^x_j
//
// with hbar = 1. The interaction energy of every basis state is
// precomputed once.
class RydbergHamiltonian {
  public:
    explicit RydbergHamiltonian(const HamiltonianSpec& spec);

    int n_atoms() const { return n_; }
    std::size_t dim() const { return interaction_.size(); }
    const std::vector<double>& interaction_energies() const { return interaction_; }
    double max_coupling() const { return max_coupling_; }

    double diagonal(std::uint64_t index, double delta) const;
    // out = H in. `in` and `out` must not alias.
    void apply(std::span<const cplx> in, std::span<cplx> out, double omega, double delta) const;
    void apply(std::span<const double> in, std::span<double> out, double omega,
               double delta) const;

  private:
    int n_;
    std::vector<double> interaction_;
    double max_coupling_ = 0.0;
};

} // namespace rydwire
