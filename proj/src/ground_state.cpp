#include "rydwire/ground_state.hpp"

#include "rydwire/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace rydwire {
namespace {

constexpr int kMaxKrylov = 400;
constexpr double kResidualTol = 1e-11;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

GroundState diagonal_ground_state(const RydbergHamiltonian& h, double delta) {
    double emin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < h.dim(); ++i) emin = std::min(emin, h.diagonal(i, delta));
    const double tol = 1e-9 * std::max(1.0, std::abs(emin));
    GroundState gs{emin, StateVector(h.n_atoms()), {}};
    gs.state[0] = 0.0;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        if (h.diagonal(i, delta) - emin <= tol) gs.manifold.push_back(i);
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(gs.manifold.size()));
    for (auto i : gs.manifold) gs.state[i] = amp;
    return gs;
}

GroundState lanczos_ground_state(const RydbergHamiltonian& h, double omega, double delta) {
    const std::size_t dim = h.dim();
    const int kmax = static_cast<int>(std::min<std::size_t>(dim, kMaxKrylov));

    std::vector<std::vector<double>> basis;
    std::vector<double> alpha;
    std::vector<double> beta;

    std::vector<double> v(dim);
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (auto& x : v) x = uni(rng);
    const double n0 = std::sqrt(dot(v, v));
    for (auto& x : v) x /= n0;

    std::vector<double> w(dim);
    double energy = 0.0;
    Eigen::VectorXd ritz;
    for (int k = 0; k < kmax; ++k) {
        basis.push_back(v);
        h.apply(std::span<const double>(basis.back()), std::span<double>(w), omega, delta);
        const double a = dot(w, basis.back());
        alpha.push_back(a);
        // Two passes of Gram-Schmidt against the whole basis.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis) {
                const double c = dot(w, q);
                for (std::size_t i = 0; i < dim; ++i) w[i] -= c * q[i];
            }
        }
        const double b = std::sqrt(dot(w, w));

        const int m = k + 1;
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            t(i, i) = alpha[i];
            if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        energy = es.eigenvalues()(0);
        ritz = es.eigenvectors().col(0);
        const double residual = b * std::abs(ritz(m - 1));
        if (residual < kResidualTol * std::max(1.0, std::abs(energy)) || b < 1e-14 ||
            m == kmax) {
            break;
        }
        beta.push_back(b);
        for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / b;
    }

    std::vector<cplx> amp(dim, 0.0);
    for (std::size_t k = 0; k < basis.size() && k < static_cast<std::size_t>(ritz.size()); ++k) {
        for (std::size_t i = 0; i < dim; ++i) amp[i] += ritz(static_cast<Eigen::Index>(k)) * basis[k][i];
    }
    GroundState gs{energy, StateVector(h.n_atoms(), std::move(amp)), {}};
    gs.state.normalize();
    // Fix the global sign so the largest component is positive.
    std::size_t imax = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        if (std::norm(gs.state[i]) > std::norm(gs.state[imax])) imax = i;
    }
    if (gs.state[imax].real() < 0) {
        for (auto& x : gs.state.amplitudes()) x = -x;
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if (gs.state.probability(i) >= kManifoldWeight) gs.manifold.push_back(i);
    }
    return gs;
}

} // namespace

GroundState exact_ground_state(const RydbergHamiltonian& h, double omega, double delta) {
    if (h.n_atoms() > kGroundStateMaxAtoms) {
        throw CapacityError("ground state search limited to " +
                            std::to_string(kGroundStateMaxAtoms) + " atoms");
    }
    if (omega == 0.0) return diagonal_ground_state(h, delta);
    return lanczos_ground_state(h, omega, delta);
}

} // namespace rydwire
