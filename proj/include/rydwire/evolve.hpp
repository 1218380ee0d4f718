#pragma once

#include "rydwire/hamiltonian.hpp"
#include "rydwire/schedule.hpp"
#include "rydwire/state.hpp"

#include <functional>
#include <span>
#include <vector>

namespace rydwire {

inline constexpr double kDefaultTimeStep = 1e-3;  // 1 ns
inline constexpr double kNormDriftLimit = 1e-6;

// One symmetric split step of length dt,
//
//   exp(-i D dt/2) exp(-i (Omega/2) sum sigma^x dt) exp(-i D dt/2),
//
// with the diagonal D = interaction - (delta/2) sum sigma^z. Both factors
// are applied exactly, so each step is unitary; drive values are sampled by
// the caller (at the step midpoint for second-order accuracy).
class SplitStepPropagator {
  public:
    SplitStepPropagator(const RydbergHamiltonian& h, double dt);

    double dt() const { return dt_; }
    const RydbergHamiltonian& hamiltonian() const { return *h_; }

    void step(std::span<cplx> psi, double omega, double delta) const;

  private:
    void diagonal_range(cplx* psi, std::size_t begin, std::size_t end,
                        const std::vector<cplx>& count_phase) const;

    const RydbergHamiltonian* h_;
    double dt_;
    std::vector<cplx> half_interaction_phase_;
};

// Applies sigma^z to one atom (1-based).
void apply_sigma_z(std::span<cplx> psi, int n_atoms, Vertex atom);

struct EvolveOptions {
    double dt = kDefaultTimeStep;
    // Called with (t, state) every `observe_every` steps and at the end.
    std::function<void(double, const StateVector&)> observer;
    int observe_every = 0;
};

// Number of steps used for a protocol at nominal step dt; the step is
// shrunk so the grid ends exactly at the protocol duration.
std::size_t step_count(const Protocol& p, double dt);

// Rejects step sizes that do not resolve the fastest rate in the problem.
void check_step_size(const RydbergHamiltonian& h, const Protocol& p, double dt);

// Time-ordered integration of i d|psi>/dt = H(t)|psi> over the protocol.
// Throws AccuracyError if the norm drifts by more than kNormDriftLimit.
StateVector evolve(const StateVector& psi0, const RydbergHamiltonian& h, const Protocol& p,
                   const EvolveOptions& options = {});

inline StateVector evolve(const StateVector& psi0, const RydbergHamiltonian& h,
                          const Protocol& p, double dt) {
    EvolveOptions o;
    o.dt = dt;
    return evolve(psi0, h, p, o);
}

// Largest change of any basis-state probability between runs at dt and
// dt/2.
double step_halving_deviation(const StateVector& psi0, const RydbergHamiltonian& h,
                              const Protocol& p, double dt);

} // namespace rydwire
