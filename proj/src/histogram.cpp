#include "rydwire/histogram.hpp"

#include "rydwire/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace rydwire {

Histogram::Histogram(int n_atoms, std::uint64_t shots) : n_(n_atoms), shots_(shots) {
    if (n_atoms < 1 || n_atoms > 64) throw InvalidInputError("histogram atom count out of range");
}

Histogram Histogram::from_dense(int n_atoms, std::span<const double> probabilities,
                                double cutoff) {
    Histogram h(n_atoms);
    if (probabilities.size() != (std::size_t{1} << n_atoms)) {
        throw InvalidInputError("dense distribution size is not 2^" + std::to_string(n_atoms));
    }
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] > cutoff) h.entries_.emplace_hint(h.entries_.end(), i, probabilities[i]);
    }
    return h;
}

Histogram Histogram::from_counts(int n_atoms, const std::map<std::uint64_t, std::uint64_t>& counts) {
    std::uint64_t shots = 0;
    for (const auto& [k, c] : counts) shots += c;
    if (shots == 0) throw InvalidInputError("histogram without counts");
    Histogram h(n_atoms, shots);
    for (const auto& [k, c] : counts) {
        if (n_atoms < 64 && k >> n_atoms) throw InvalidInputError("outcome outside register");
        h.entries_[k] = static_cast<double>(c) / static_cast<double>(shots);
    }
    return h;
}

double Histogram::probability(std::uint64_t index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? 0.0 : it->second;
}

double Histogram::total() const {
    double acc = 0.0;
    for (const auto& [k, p] : entries_) acc += p;
    return acc;
}

void Histogram::add(std::uint64_t index, double p) {
    if (n_ < 64 && index >> n_) throw InvalidInputError("outcome outside register");
    entries_[index] += p;
}

std::vector<double> Histogram::dense() const {
    if (n_ > kMaxStateAtoms) throw CapacityError("histogram too wide for dense form");
    std::vector<double> d(std::size_t{1} << n_, 0.0);
    for (const auto& [k, p] : entries_) d[k] = p;
    return d;
}

std::vector<std::pair<std::uint64_t, double>> Histogram::ranked() const {
    std::vector<std::pair<std::uint64_t, double>> out(entries_.begin(), entries_.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return out;
}

Histogram measure(const StateVector& psi, std::uint64_t shots, std::uint64_t seed) {
    const auto p = psi.probabilities();
    Histogram exact = Histogram::from_dense(psi.n_atoms(), p, kExactCutoff);
    if (shots == 0) return exact;
    return sample(exact, shots, seed);
}

Histogram sample(const Histogram& distribution, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw InvalidInputError("sample needs at least one shot");
    std::vector<std::uint64_t> keys;
    std::vector<double> cdf;
    double acc = 0.0;
    for (const auto& [k, p] : distribution.entries()) {
        if (p <= 0.0) continue;
        acc += p;
        keys.push_back(k);
        cdf.push_back(acc);
    }
    if (keys.empty()) throw InvalidInputError("cannot sample an empty distribution");
    std::mt19937_64 rng(seed);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        // 53-bit uniform in [0, acc).
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) --it;
        ++counts[keys[static_cast<std::size_t>(it - cdf.begin())]];
    }
    return Histogram::from_counts(distribution.n_atoms(), counts);
}

double total_variation(const Histogram& a, const Histogram& b) {
    if (a.n_atoms() != b.n_atoms()) throw InvalidInputError("histogram widths differ");
    double acc = 0.0;
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    while (ia != a.entries().end() || ib != b.entries().end()) {
        if (ib == b.entries().end() || (ia != a.entries().end() && ia->first < ib->first)) {
            acc += std::abs(ia->second);
            ++ia;
        } else if (ia == a.entries().end() || ib->first < ia->first) {
            acc += std::abs(ib->second);
            ++ib;
        } else {
            acc += std::abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return 0.5 * acc;
}

namespace {

Metadata with_standard_fields(const Histogram& h, const Metadata& meta) {
    Metadata all = meta;
    all.emplace_back("n_atoms", std::to_string(h.n_atoms()));
    all.emplace_back("shots", std::to_string(h.shots()));
    all.emplace_back("bit_order", "atom 1 = leftmost (most significant) bit; 1 = Rydberg");
    all.emplace_back("spam_corrected", h.spam_corrected ? "true" : "false");
    if (h.clamped) all.emplace_back("warning", "negative corrected probabilities clamped to 0");
    if (h.trajectories) all.emplace_back("trajectories", std::to_string(h.trajectories));
    return all;
}

} // namespace

void write_histogram_csv(std::ostream& out, const Histogram& h, const Metadata& meta) {
    for (const auto& [k, v] : with_standard_fields(h, meta)) out << "# " << k << ": " << v << '\n';
    out << "bitstring,probability\n";
    out << std::setprecision(17);
    for (const auto& [k, p] : h.entries()) out << bitstring(k, h.n_atoms()) << ',' << p << '\n';
}

void write_histogram_json(std::ostream& out, const Histogram& h, const Metadata& meta) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : with_standard_fields(h, meta)) m[k] = v;
    j["metadata"] = m;
    j["spam_corrected"] = h.spam_corrected;
    j["clamped"] = h.clamped;
    nlohmann::ordered_json probs = nlohmann::ordered_json::object();
    for (const auto& [k, p] : h.entries()) probs[bitstring(k, h.n_atoms())] = p;
    j["probabilities"] = probs;
    out << j.dump(2) << '\n';
}

Histogram read_histogram_csv(std::istream& in) {
    std::string line;
    std::vector<std::pair<std::string, double>> rows;
    std::uint64_t shots = 0;
    bool corrected = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("# shots: ", 0) == 0) shots = std::stoull(line.substr(9));
            if (line == "# spam_corrected: true") corrected = true;
            continue;
        }
        if (line == "bitstring,probability") continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw InvalidInputError("bad histogram row '" + line + "'");
        rows.emplace_back(line.substr(0, comma), std::stod(line.substr(comma + 1)));
    }
    if (rows.empty()) throw InvalidInputError("histogram file has no rows");
    Histogram h(static_cast<int>(rows.front().first.size()), shots);
    for (const auto& [bits, p] : rows) {
        if (static_cast<int>(bits.size()) != h.n_atoms()) {
            throw InvalidInputError("inconsistent bitstring width");
        }
        h.add(parse_bitstring(bits), p);
    }
    h.spam_corrected = corrected;
    return h;
}

} // namespace rydwire
