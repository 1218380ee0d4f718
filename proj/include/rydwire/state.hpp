#pragma once

#include "rydwire/hamiltonian.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rydwire {

// Dense amplitudes over the 2^N bare-atom basis. Atom 1 is the most
// significant bit; 0 = ground, 1 = Rydberg.
class StateVector {
  public:
    StateVector() = default;
    // |00...0>
    explicit StateVector(int n_atoms);
    StateVector(int n_atoms, std::vector<cplx> amplitudes);

    static StateVector basis(int n_atoms, std::uint64_t index);

    int n_atoms() const { return n_; }
    std::size_t dim() const { return amp_.size(); }

    std::span<cplx> amplitudes() { return amp_; }
    std::span<const cplx> amplitudes() const { return amp_; }
    cplx& operator[](std::size_t i) { return amp_[i]; }
    const cplx& operator[](std::size_t i) const { return amp_[i]; }

    double norm() const;
    double probability(std::uint64_t index) const { return std::norm(amp_[index]); }
    std::vector<double> probabilities() const;
    // <this|other>
    cplx inner(const StateVector& other) const;
    void normalize();

  private:
    int n_ = 0;
    std::vector<cplx> amp_;
};

// "1010" for index 0b1010 with 4 atoms; character k is atom k+1.
std::string bitstring(std::uint64_t index, int n_atoms);
std::uint64_t parse_bitstring(std::string_view bits);

// Vertex set of the excited atoms of a basis index.
VertexSet excited_atoms(std::uint64_t index, int n_atoms);
std::uint64_t index_of(const VertexSet& excited, int n_atoms);

} // namespace rydwire
