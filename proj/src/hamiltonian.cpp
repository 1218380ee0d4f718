#include "rydwire/hamiltonian.hpp"

#include "rydwire/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace rydwire {

HamiltonianSpec HamiltonianSpec::graph_mode(Graph g, double u) {
    if (!(u > 0.0)) throw ConfigError("interaction U must be positive");
    HamiltonianSpec s;
    s.mode = InteractionMode::graph;
    s.graph = std::move(g);
    s.interaction_u = u;
    return s;
}

HamiltonianSpec HamiltonianSpec::physical_mode(AtomArray arr, double c6_over_hbar) {
    if (!(c6_over_hbar > 0.0)) throw ConfigError("C6 must be positive");
    HamiltonianSpec s;
    s.mode = InteractionMode::physical;
    s.array = std::move(arr);
    s.c6_over_hbar = c6_over_hbar;
    return s;
}

int HamiltonianSpec::n_atoms() const {
    return mode == InteractionMode::graph ? graph.n_vertices() : static_cast<int>(array.size());
}

std::vector<double> HamiltonianSpec::pair_couplings() const {
    const auto n = static_cast<std::size_t>(n_atoms());
    std::vector<double> v(n * n, 0.0);
    if (mode == InteractionMode::graph) {
        for (const Edge& e : graph.edges()) {
            v[(e.u - 1) * n + (e.v - 1)] = interaction_u;
            v[(e.v - 1) * n + (e.u - 1)] = interaction_u;
        }
        return v;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) v[i * n + j] = c6_over_hbar / std::pow(array.distance(i, j), 6);
        }
    }
    return v;
}

double HamiltonianSpec::max_coupling() const {
    const auto v = pair_couplings();
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

RydbergHamiltonian::RydbergHamiltonian(const HamiltonianSpec& spec) : n_(spec.n_atoms()) {
    if (n_ < 1 || n_ > kMaxStateAtoms) {
        throw CapacityError("state vector simulation supports 1.." +
                            std::to_string(kMaxStateAtoms) + " atoms, got " + std::to_string(n_));
    }
    const auto n = static_cast<std::size_t>(n_);
    const auto coupling = spec.pair_couplings();
    max_coupling_ = *std::max_element(coupling.begin(), coupling.end());

    // Atom j (0-based) sits at bit n-1-j. E[i] = E[i - low] + sum of the
    // low atom's couplings to the remaining excited atoms.
    const std::size_t dim = std::size_t{1} << n_;
    interaction_.assign(dim, 0.0);
    for (std::size_t i = 1; i < dim; ++i) {
        const std::size_t low = i & (~i + 1);
        const std::size_t rest = i ^ low;
        const std::size_t atom_low = n - 1 - static_cast<std::size_t>(std::countr_zero(low));
        double e = interaction_[rest];
        for (std::size_t r = rest; r != 0; r &= r - 1) {
            const std::size_t atom = n - 1 - static_cast<std::size_t>(std::countr_zero(r));
            e += coupling[atom_low * n + atom];
        }
        interaction_[i] = e;
    }
}

double RydbergHamiltonian::diagonal(std::uint64_t index, double delta) const {
    const int excited = std::popcount(index);
    return interaction_[index] - delta * excited + 0.5 * delta * n_;
}

namespace {

template <typename T>
void apply_impl(const RydbergHamiltonian& h, std::span<const T> in, std::span<T> out,
                double omega, double delta) {
    if (in.size() != h.dim() || out.size() != h.dim()) {
        throw InvalidInputError("vector size does not match Hamiltonian dimension");
    }
    const double half = 0.5 * omega;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        T acc = h.diagonal(i, delta) * in[i];
        for (int b = 0; b < h.n_atoms(); ++b) acc += half * in[i ^ (std::size_t{1} << b)];
        out[i] = acc;
    }
}

} // namespace

void RydbergHamiltonian::apply(std::span<const cplx> in, std::span<cplx> out, double omega,
                               double delta) const {
    apply_impl(*this, in, out, omega, delta);
}

void RydbergHamiltonian::apply(std::span<const double> in, std::span<double> out, double omega,
                               double delta) const {
    apply_impl(*this, in, out, omega, delta);
}

} // namespace rydwire
