#include "rydwire/state.hpp"

#include "rydwire/error.hpp"

#include <cmath>

namespace rydwire {

StateVector::StateVector(int n_atoms) : n_(n_atoms) {
    if (n_atoms < 1 || n_atoms > kMaxStateAtoms) {
        throw CapacityError("state vector supports 1.." + std::to_string(kMaxStateAtoms) +
                            " atoms, got " + std::to_string(n_atoms));
    }
    amp_.assign(std::size_t{1} << n_atoms, cplx{0.0, 0.0});
    amp_[0] = 1.0;
}

StateVector::StateVector(int n_atoms, std::vector<cplx> amplitudes)
    : n_(n_atoms), amp_(std::move(amplitudes)) {
    if (n_atoms < 1 || n_atoms > kMaxStateAtoms) {
        throw CapacityError("state vector supports 1.." + std::to_string(kMaxStateAtoms) +
                            " atoms");
    }
    if (amp_.size() != (std::size_t{1} << n_atoms)) {
        throw InvalidInputError("amplitude count is not 2^" + std::to_string(n_atoms));
    }
}

StateVector StateVector::basis(int n_atoms, std::uint64_t index) {
    StateVector s(n_atoms);
    if (index >= s.dim()) throw InvalidInputError("basis index out of range");
    s.amp_[0] = 0.0;
    s.amp_[index] = 1.0;
    return s;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const cplx& a : amp_) acc += std::norm(a);
    return std::sqrt(acc);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amp_.size());
    for (std::size_t i = 0; i < amp_.size(); ++i) p[i] = std::norm(amp_[i]);
    return p;
}

cplx StateVector::inner(const StateVector& other) const {
    if (other.dim() != dim()) throw InvalidInputError("state dimensions differ");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < amp_.size(); ++i) acc += std::conj(amp_[i]) * other.amp_[i];
    return acc;
}

void StateVector::normalize() {
    const double n = norm();
    if (!(n > 0.0)) throw InvalidInputError("cannot normalize the zero vector");
    for (cplx& a : amp_) a /= n;
}

std::string bitstring(std::uint64_t index, int n_atoms) {
    std::string s(static_cast<std::size_t>(n_atoms), '0');
    for (int k = 0; k < n_atoms; ++k) {
        if (index & atom_bit(n_atoms, k + 1)) s[k] = '1';
    }
    return s;
}

std::uint64_t parse_bitstring(std::string_view bits) {
    if (bits.empty() || bits.size() > 64) throw InvalidInputError("bad bitstring length");
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InvalidInputError("bitstring '" + std::string(bits) + "' has non-binary digit");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return index;
}

VertexSet excited_atoms(std::uint64_t index, int n_atoms) {
    std::vector<Vertex> atoms;
    for (Vertex v = 1; v <= n_atoms; ++v) {
        if (index & atom_bit(n_atoms, v)) atoms.push_back(v);
    }
    return VertexSet(std::move(atoms));
}

std::uint64_t index_of(const VertexSet& excited, int n_atoms) {
    std::uint64_t index = 0;
    for (Vertex v : excited) {
        if (v < 1 || v > n_atoms) throw InvalidInputError("atom outside register");
        index |= atom_bit(n_atoms, v);
    }
    return index;
}

} // namespace rydwire
