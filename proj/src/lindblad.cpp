#include "rydwire/lindblad.hpp"

#include "rydwire/error.hpp"

#include <bit>
#include <cmath>

namespace rydwire {
namespace {

void validate_density(const DensityMatrix& rho, std::size_t dim) {
    if (static_cast<std::size_t>(rho.rows()) != dim || rho.rows() != rho.cols()) {
        throw InvalidInputError("density matrix size does not match the register");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw InvalidInputError("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-9) {
        throw InvalidInputError("density matrix trace is not 1");
    }
    if (min_eigenvalue(rho) < -1e-9) throw InvalidInputError("density matrix is not positive");
}

// Column-wise unitary step: rho <- U rho U^dagger.
void unitary_step(DensityMatrix& rho, const SplitStepPropagator& prop, double omega,
                  double delta) {
    const auto dim = static_cast<std::size_t>(rho.rows());
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
        prop.step(std::span<cplx>(rho.col(c).data(), dim), omega, delta);
    }
    rho.adjointInPlace();
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
        prop.step(std::span<cplx>(rho.col(c).data(), dim), omega, delta);
    }
    rho.adjointInPlace();
}

} // namespace

DensityMatrix pure_density(const StateVector& psi) {
    const auto a = psi.amplitudes();
    Eigen::Map<const Eigen::VectorXcd> v(a.data(), static_cast<Eigen::Index>(a.size()));
    return v * v.adjoint();
}

Histogram diagonal_histogram(const DensityMatrix& rho, int n_atoms) {
    std::vector<double> p(static_cast<std::size_t>(rho.rows()));
    for (Eigen::Index i = 0; i < rho.rows(); ++i) p[static_cast<std::size_t>(i)] = rho(i, i).real();
    return Histogram::from_dense(n_atoms, p, kExactCutoff);
}

double min_eigenvalue(const DensityMatrix& rho) {
    const DensityMatrix herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

DensityMatrix lindblad_evolve(const DensityMatrix& rho0, const RydbergHamiltonian& h,
                              const Protocol& p, const NoiseParams& params,
                              const LindbladOptions& options) {
    if (h.n_atoms() > kLindbladMaxAtoms) {
        throw CapacityError("density-matrix evolution limited to " +
                            std::to_string(kLindbladMaxAtoms) + " atoms");
    }
    params.validate();
    validate_density(rho0, h.dim());
    check_step_size(h, p, options.dt);

    DensityMatrix rho = rho0;
    const std::size_t steps = step_count(p, options.dt);
    if (steps == 0) return rho;
    const double dt = p.duration() / static_cast<double>(steps);
    const SplitStepPropagator prop(h, dt);

    // Half-step dephasing factor per Hamming distance.
    const int n = h.n_atoms();
    std::vector<double> half_decay(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) half_decay[k] = std::exp(-params.gamma_m * k * 0.5 * dt);
    const bool dephase = params.gamma_m > 0.0;
    const auto dephase_half = [&] {
        for (Eigen::Index c = 0; c < rho.cols(); ++c) {
            for (Eigen::Index r = 0; r < rho.rows(); ++r) {
                rho(r, c) *= half_decay[static_cast<std::size_t>(
                    std::popcount(static_cast<std::uint64_t>(r ^ c)))];
            }
        }
    };

    for (std::size_t k = 0; k < steps; ++k) {
        const DriveSample d = p.at((static_cast<double>(k) + 0.5) * dt);
        if (dephase) dephase_half();
        unitary_step(rho, prop, d.omega, d.delta);
        if (dephase) dephase_half();
        if (options.observer && options.observe_every > 0 &&
            (k + 1) % static_cast<std::size_t>(options.observe_every) == 0 && k + 1 != steps) {
            options.observer(static_cast<double>(k + 1) * dt, rho);
        }
    }
    if (options.observer) options.observer(p.duration(), rho);
    const double drift = std::abs(rho.trace().real() - 1.0);
    if (drift > kTraceDriftLimit) {
        throw AccuracyError("trace drifted by " + std::to_string(drift) + "; reduce dt");
    }
    return rho;
}

} // namespace rydwire
