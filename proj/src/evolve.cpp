#include "rydwire/evolve.hpp"

#include "rydwire/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace rydwire {
namespace {

// Bits below this are rotated block by block while the block sits in cache.
constexpr int kBlockBits = 11;
// High bits are processed this many at a time per memory pass.
constexpr int kHighGroupBits = 4;
constexpr std::size_t kRowChunk = 256;

// (a, b) <- [[c, -is], [-is, c]] (a, b) over `len` consecutive pairs.
inline void rotate_rows(cplx* a, cplx* b, std::size_t len, double c, double s) {
    auto* pa = reinterpret_cast<double*>(a);
    auto* pb = reinterpret_cast<double*>(b);
    for (std::size_t j = 0; j < 2 * len; j += 2) {
        const double ar = pa[j];
        const double ai = pa[j + 1];
        const double br = pb[j];
        const double bi = pb[j + 1];
        pa[j] = c * ar + s * bi;
        pa[j + 1] = c * ai - s * br;
        pb[j] = c * br + s * ai;
        pb[j + 1] = c * bi - s * ar;
    }
}

} // namespace

SplitStepPropagator::SplitStepPropagator(const RydbergHamiltonian& h, double dt)
    : h_(&h), dt_(dt) {
    if (!(dt > 0.0)) throw DomainError("time step must be positive");
    const auto& e = h.interaction_energies();
    half_interaction_phase_.resize(e.size());
    const double tau = 0.5 * dt;
    for (std::size_t i = 0; i < e.size(); ++i) {
        half_interaction_phase_[i] = std::polar(1.0, -e[i] * tau);
    }
}

void SplitStepPropagator::diagonal_range(cplx* psi, std::size_t begin, std::size_t end,
                                         const std::vector<cplx>& count_phase) const {
    const cplx* ph = half_interaction_phase_.data();
    for (std::size_t i = begin; i < end; ++i) {
        const cplx f = count_phase[static_cast<std::size_t>(std::popcount(i))];
        const double fr = f.real() * ph[i].real() - f.imag() * ph[i].imag();
        const double fi = f.real() * ph[i].imag() + f.imag() * ph[i].real();
        const double pr = psi[i].real();
        const double pi = psi[i].imag();
        psi[i] = cplx(pr * fr - pi * fi, pr * fi + pi * fr);
    }
}

void SplitStepPropagator::step(std::span<cplx> psi, double omega, double delta) const {
    const int n = h_->n_atoms();
    const std::size_t dim = h_->dim();
    if (psi.size() != dim) throw InvalidInputError("state size does not match propagator");

    // Detuning part of exp(-i D dt/2) depends only on the excitation count.
    const double tau = 0.5 * dt_;
    std::vector<cplx> count_phase(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        count_phase[k] = std::polar(1.0, -(-delta * k + 0.5 * delta * n) * tau);
    }
    const double c = std::cos(0.5 * omega * dt_);
    const double s = std::sin(0.5 * omega * dt_);
    cplx* p = psi.data();

    const int low_bits = std::min(n, kBlockBits);
    const std::size_t block = std::size_t{1} << low_bits;
    const bool single_pass = low_bits == n;
    for (std::size_t base = 0; base < dim; base += block) {
        diagonal_range(p, base, base + block, count_phase);
        for (int b = 0; b < low_bits; ++b) {
            const std::size_t stride = std::size_t{1} << b;
            for (std::size_t off = base; off < base + block; off += 2 * stride) {
                rotate_rows(p + off, p + off + stride, stride, c, s);
            }
        }
        if (single_pass) diagonal_range(p, base, base + block, count_phase);
    }
    if (single_pass) return;

    for (int g0 = low_bits; g0 < n; g0 += kHighGroupBits) {
        const int k = std::min(kHighGroupBits, n - g0);
        const bool last = g0 + k == n;
        const std::size_t row = std::size_t{1} << g0;
        const std::size_t len = std::min(row, kRowChunk);
        const std::size_t n_hi = std::size_t{1} << (n - g0 - k);
        const std::size_t sub = std::size_t{1} << k;
        for (std::size_t hi = 0; hi < n_hi; ++hi) {
            for (std::size_t l0 = 0; l0 < row; l0 += len) {
                const std::size_t base = (hi << (g0 + k)) | l0;
                for (int t = 0; t < k; ++t) {
                    const std::size_t tb = std::size_t{1} << t;
                    for (std::size_t m = 0; m < sub; ++m) {
                        if (m & tb) continue;
                        rotate_rows(p + base + (m << g0), p + base + ((m | tb) << g0), len, c, s);
                    }
                }
                if (last) {
                    for (std::size_t m = 0; m < sub; ++m) {
                        const std::size_t start = base + (m << g0);
                        diagonal_range(p, start, start + len, count_phase);
                    }
                }
            }
        }
    }
}

void apply_sigma_z(std::span<cplx> psi, int n_atoms, Vertex atom) {
    if (atom < 1 || atom > n_atoms) throw InvalidInputError("atom outside register");
    const std::uint64_t bit = atom_bit(n_atoms, atom);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (!(i & bit)) psi[i] = -psi[i];
    }
}

std::size_t step_count(const Protocol& p, double dt) {
    if (!(dt > 0.0)) throw DomainError("time step must be positive");
    const double ratio = p.duration() / dt;
    return static_cast<std::size_t>(std::max(0.0, std::ceil(ratio - 1e-9)));
}

void check_step_size(const RydbergHamiltonian& h, const Protocol& p, double dt) {
    const double rate = std::max({p.max_rabi(), p.max_abs_detuning(), h.max_coupling()});
    if (rate * dt > 1.0) {
        throw AccuracyError("time step " + std::to_string(dt) +
                            " us does not resolve the fastest rate " + std::to_string(rate) +
                            " rad/us; use dt <= " + std::to_string(1.0 / rate));
    }
}

StateVector evolve(const StateVector& psi0, const RydbergHamiltonian& h, const Protocol& p,
                   const EvolveOptions& options) {
    if (psi0.n_atoms() != h.n_atoms()) {
        throw InvalidInputError("state and Hamiltonian atom counts differ");
    }
    if (std::abs(psi0.norm() - 1.0) > 1e-9) throw InvalidInputError("initial state not normalized");
    check_step_size(h, p, options.dt);

    StateVector psi = psi0;
    const std::size_t steps = step_count(p, options.dt);
    if (steps == 0) return psi;
    const double dt = p.duration() / static_cast<double>(steps);
    const SplitStepPropagator prop(h, dt);
    for (std::size_t k = 0; k < steps; ++k) {
        const DriveSample d = p.at((static_cast<double>(k) + 0.5) * dt);
        prop.step(psi.amplitudes(), d.omega, d.delta);
        if (options.observer && options.observe_every > 0 &&
            (k + 1) % static_cast<std::size_t>(options.observe_every) == 0 && k + 1 != steps) {
            options.observer(static_cast<double>(k + 1) * dt, psi);
        }
    }
    if (options.observer) options.observer(p.duration(), psi);
    const double drift = std::abs(psi.norm() - 1.0);
    if (drift > kNormDriftLimit) {
        throw AccuracyError("norm drifted by " + std::to_string(drift) + "; reduce dt");
    }
    return psi;
}

double step_halving_deviation(const StateVector& psi0, const RydbergHamiltonian& h,
                              const Protocol& p, double dt) {
    const auto coarse = evolve(psi0, h, p, dt).probabilities();
    const auto fine = evolve(psi0, h, p, 0.5 * dt).probabilities();
    double worst = 0.0;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        worst = std::max(worst, std::abs(coarse[i] - fine[i]));
    }
    return worst;
}

} // namespace rydwire
