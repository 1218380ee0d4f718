#pragma once

#include "rydwire/hamiltonian.hpp"
#include "rydwire/state.hpp"

#include <cstdint>
#include <vector>

namespace rydwire {

inline constexpr int kGroundStateMaxAtoms = 14;

struct GroundState {
    double energy = 0.0;
    StateVector state;
    // Basis configurations spanning the ground manifold. At Omega = 0 these
    // are the exactly degenerate minimum-energy configurations and `state`
    // is their equal-weight superposition; otherwise the configurations
    // carrying at least kManifoldWeight of the Lanczos eigenvector.
    std::vector<std::uint64_t> manifold;
};

inline constexpr double kManifoldWeight = 1e-3;

// Lowest eigenpair of H(omega, delta). Diagonal scan at omega = 0, Lanczos
// with full reorthogonalization otherwise.
GroundState exact_ground_state(const RydbergHamiltonian& h, double omega, double delta);

} // namespace rydwire
