#pragma once

#include "rydwire/evolve.hpp"
#include "rydwire/histogram.hpp"
#include "rydwire/noise.hpp"

#include <Eigen/Dense>

#include <functional>

namespace rydwire {

using DensityMatrix = Eigen::MatrixXcd;

inline constexpr int kLindbladMaxAtoms = 7;
inline constexpr double kTraceDriftLimit = 1e-8;

DensityMatrix pure_density(const StateVector& psi);
// Populations of rho as an exact histogram.
Histogram diagonal_histogram(const DensityMatrix& rho, int n_atoms);
// Smallest eigenvalue of the Hermitian part.
double min_eigenvalue(const DensityMatrix& rho);

struct LindbladOptions {
    double dt = kDefaultTimeStep;
    std::function<void(double, const DensityMatrix&)> observer;
    int observe_every = 0;
};

// Master equation with per-atom jump operators sqrt(gamma_m / 2) sigma^z.
// Only gamma_m is used from `params`. Each step is split as half a step of
// exact dephasing (rho_ab *= exp(-gamma_m hamming(a, b) t)), one unitary
// split step, and another half step of dephasing.
DensityMatrix lindblad_evolve(const DensityMatrix& rho0, const RydbergHamiltonian& h,
                              const Protocol& p, const NoiseParams& params,
                              const LindbladOptions& options = {});

} // namespace rydwire
