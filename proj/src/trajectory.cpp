#include "rydwire/trajectory.hpp"

#include "rydwire/error.hpp"

#include <cmath>
#include <memory>
#include <optional>
#include <random>

namespace rydwire {
namespace {

std::mt19937_64 trajectory_rng(std::uint64_t seed, int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
}

} // namespace

Histogram trajectory_sample(const StateVector& psi0, const HamiltonianSpec& spec,
                            const Protocol& p, const NoiseParams& params, int n_traj,
                            std::uint64_t seed, double dt) {
    if (n_traj < 1) throw InvalidInputError("need at least one trajectory");
    params.validate();
    const int n = spec.n_atoms();
    if (psi0.n_atoms() != n) throw InvalidInputError("state and Hamiltonian atom counts differ");
    if (std::abs(psi0.norm() - 1.0) > 1e-9) throw InvalidInputError("initial state not normalized");

    const bool move_atoms = spec.mode == InteractionMode::physical &&
                            (params.sigma_r > 0.0 || params.sigma_z > 0.0);
    const RydbergHamiltonian nominal(spec);
    check_step_size(nominal, p, dt);

    const std::size_t steps = step_count(p, dt);
    const double h_dt = steps ? p.duration() / static_cast<double>(steps) : 0.0;
    const double phase_sd = std::sqrt(params.phase_step_variance(h_dt));
    const double kick_p = 0.5 * (1.0 - std::exp(-params.gamma_m * h_dt));

    std::optional<SplitStepPropagator> nominal_prop;
    if (steps) nominal_prop.emplace(nominal, h_dt);

    std::vector<double> avg(psi0.dim(), 0.0);
    for (int traj = 0; traj < n_traj; ++traj) {
        auto rng = trajectory_rng(seed, traj);
        std::normal_distribution<double> gauss(0.0, 1.0);

        const double scale =
            params.intensity_fluct > 0.0 ? 1.0 + params.intensity_fluct * gauss(rng) : 1.0;

        std::unique_ptr<RydbergHamiltonian> moved_h;
        std::unique_ptr<SplitStepPropagator> moved_prop;
        if (move_atoms && steps) {
            std::vector<Vec3> offsets(static_cast<std::size_t>(n));
            for (auto& o : offsets) {
                o = {params.sigma_r * gauss(rng), params.sigma_r * gauss(rng),
                     params.sigma_z * gauss(rng)};
            }
            HamiltonianSpec s = spec;
            s.array = spec.array.displaced(offsets);
            moved_h = std::make_unique<RydbergHamiltonian>(s);
            moved_prop = std::make_unique<SplitStepPropagator>(*moved_h, h_dt);
        }
        const SplitStepPropagator* prop = moved_prop ? moved_prop.get() : &*nominal_prop;

        // Steps at which each atom next receives a sigma^z kick.
        std::vector<std::size_t> next_kick(static_cast<std::size_t>(n), steps);
        std::optional<std::geometric_distribution<std::size_t>> gap;
        if (kick_p > 0.0) {
            gap.emplace(kick_p);
            for (auto& s : next_kick) s = (*gap)(rng);
        }

        StateVector psi = psi0;
        for (std::size_t k = 0; k < steps; ++k) {
            DriveSample d = p.at((static_cast<double>(k) + 0.5) * h_dt);
            d.omega *= scale;
            if (phase_sd > 0.0) d.delta += phase_sd * gauss(rng) / h_dt;
            prop->step(psi.amplitudes(), d.omega, d.delta);
            if (gap) {
                for (int a = 0; a < n; ++a) {
                    auto& s = next_kick[static_cast<std::size_t>(a)];
                    while (s == k) {
                        apply_sigma_z(psi.amplitudes(), n, a + 1);
                        s = k + 1 + (*gap)(rng);
                    }
                }
            }
        }
        const double drift = std::abs(psi.norm() - 1.0);
        if (drift > kNormDriftLimit) {
            throw AccuracyError("trajectory norm drifted by " + std::to_string(drift));
        }
        for (std::size_t i = 0; i < avg.size(); ++i) avg[i] += std::norm(psi[i]);
    }
    for (double& x : avg) x /= static_cast<double>(n_traj);
    Histogram h = Histogram::from_dense(n, avg, kExactCutoff);
    h.trajectories = static_cast<std::uint64_t>(n_traj);
    return h;
}

} // namespace rydwire
