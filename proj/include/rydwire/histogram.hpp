#pragma once

#include "rydwire/state.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rydwire {

// Outcome distribution over N-atom bitstrings, keyed by basis index (atom 1
// = most significant bit). Exact distributions have shots == 0; sampled
// ones store count / shots.
class Histogram {
  public:
    Histogram() = default;
    explicit Histogram(int n_atoms, std::uint64_t shots = 0);

    // Entries at or below `cutoff` are dropped.
    static Histogram from_dense(int n_atoms, std::span<const double> probabilities,
                                double cutoff = 0.0);
    static Histogram from_counts(int n_atoms, const std::map<std::uint64_t, std::uint64_t>& counts);

    int n_atoms() const { return n_; }
    std::uint64_t shots() const { return shots_; }
    bool exact() const { return shots_ == 0; }

    const std::map<std::uint64_t, double>& entries() const { return entries_; }
    double probability(std::uint64_t index) const;
    double probability(const std::string& bits) const { return probability(parse_bitstring(bits)); }
    double total() const;
    void add(std::uint64_t index, double p);

    // Dense 2^N vector.
    std::vector<double> dense() const;
    // Entries sorted by decreasing probability, ties by index.
    std::vector<std::pair<std::uint64_t, double>> ranked() const;

    // Metadata carried to output files.
    bool spam_corrected = false;
    bool clamped = false;
    std::uint64_t trajectories = 0;

  private:
    int n_ = 0;
    std::uint64_t shots_ = 0;
    std::map<std::uint64_t, double> entries_;
};

// Entries below this are not stored for exact state-vector histograms.
inline constexpr double kExactCutoff = 1e-16;

// shots == 0: exact |amplitude|^2. Otherwise a multinomial sample of the
// given size, reproducible per seed.
Histogram measure(const StateVector& psi, std::uint64_t shots, std::uint64_t seed);
// Multinomial sample from a normalized distribution.
Histogram sample(const Histogram& distribution, std::uint64_t shots, std::uint64_t seed);

double total_variation(const Histogram& a, const Histogram& b);

// Ordered key/value pairs written as file headers.
using Metadata = std::vector<std::pair<std::string, std::string>>;

// `bitstring,probability` rows preceded by `# key: value` header lines.
void write_histogram_csv(std::ostream& out, const Histogram& h, const Metadata& meta);
void write_histogram_json(std::ostream& out, const Histogram& h, const Metadata& meta);
Histogram read_histogram_csv(std::istream& in);

} // namespace rydwire
