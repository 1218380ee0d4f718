#pragma once

#include "rydwire/evolve.hpp"
#include "rydwire/histogram.hpp"
#include "rydwire/noise.hpp"

#include <cstdint>

namespace rydwire {

// Monte-Carlo average over noise realizations. Each trajectory draws
//   - a global Rabi scale 1 + N(0, intensity_fluct),
//   - static atom displacements N(0, sigma_r) in x, y and N(0, sigma_z) in z
//     (physical mode only),
//   - a white laser-frequency process added to delta, one Gaussian phase
//     increment per step,
//   - sigma^z kicks on each atom, probability (1 - exp(-gamma_m dt)) / 2 per
//     step,
// and contributes its exact final probabilities to the average. Trajectory
// k is seeded from (seed, k) alone, so results do not depend on the order
// in which trajectories are run.
Histogram trajectory_sample(const StateVector& psi0, const HamiltonianSpec& spec,
                            const Protocol& p, const NoiseParams& params, int n_traj,
                            std::uint64_t seed, double dt = kDefaultTimeStep);

} // namespace rydwire
