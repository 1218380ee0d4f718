#pragma once

#include "rydwire/geometry.hpp"
#include "rydwire/hamiltonian.hpp"
#include "rydwire/noise.hpp"
#include "rydwire/schedule.hpp"
#include "rydwire/spam.hpp"
#include "rydwire/wire.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rydwire {

inline constexpr int kConfigFormat = 1;
inline constexpr double kDefaultThreshold = 0.1;

enum class SourceKind { catalog, graph_file, array_file };

struct ScheduleConfig {
    double t_f_us = 4.0;
    double delta_i_mhz = -3.0;
    double delta_f_mhz = 3.0;
    double omega_0_mhz = 0.88;
    // MHz values are multiplied by 2pi when set.
    bool angular = true;

    AnnealSchedule build() const;
};

struct NoiseConfig {
    NoiseParams params = NoiseParams::table_defaults();
    int trajectories = 100;
};

struct SpamConfig {
    SpamModel model = SpamModel::appendix();
    bool correct = true;
};

// One experiment, read from a YAML document:
//
//   format: 1
//   name: C6
//   figure: 2
//   source: {catalog: C6}            # or {graph_file: x.txt} or {array_file: y.txt}
//   array: ../arrays/fig2c-C6.txt    # optional, required for physical mode
//   atom_map: [1, 2, 3, 4, 5, 6]     # optional, file atom k -> graph vertex
//   mode: graph                      # or physical
//   interaction_u_mhz: 50
//   blockade_radius_um: 9.8
//   schedule: {t_f_us: 4, delta_i_mhz: -3, delta_f_mhz: 3, omega_0_mhz: 0.88, angular: true}
//   dt_us: 0.001
//   shots: 0                         # 0 = exact distribution
//   repetitions: 734
//   seed: 1
//   threshold: 0.1
//   noise: {gamma_m_khz: 10, phase_psd_780: 1e4, phase_psd_480: 1e3,
//           intensity_fluct: 0.02, sigma_r_um: 0.1, sigma_z_um: 0.6, trajectories: 100}
//   spam: {p0_given_1: 0.18, p1_given_0: 0.03, correct: true}
//   expected: [[2, 4], [1, 3]]
//   output: out/C6
//
// `noise: table` selects the default noise levels. Relative input paths
// resolve against the config file's directory; `output` against the working
// directory.
struct ExperimentConfig {
    std::string name;
    std::string figure;
    SourceKind source_kind = SourceKind::catalog;
    std::string source;
    std::string array_file;
    std::vector<Vertex> atom_map;
    InteractionMode mode = InteractionMode::graph;
    double interaction_u_mhz = 50.0;
    double blockade_radius_um = kTableBlockadeRadius;
    ScheduleConfig schedule;
    double dt_us = 1e-3;
    std::uint64_t shots = 0;
    std::uint64_t repetitions = 0;
    std::uint64_t seed = 1;
    double threshold = kDefaultThreshold;
    std::optional<NoiseConfig> noise;
    std::optional<SpamConfig> spam;
    std::optional<VertexSetFamily> expected;
    std::string output;
    std::filesystem::path base_dir;

    // Throws ConfigError on inconsistent fields.
    void validate() const;
    double interaction_u() const;
    std::filesystem::path resolve(const std::string& path) const;
};

ExperimentConfig parse_config(const std::string& yaml_text,
                              const std::filesystem::path& base_dir = ".");
ExperimentConfig load_config(const std::filesystem::path& file);

// Wired graph read from an array whose qubit atoms come first: the qubit
// subgraph is the base, and every connected run of wire atoms must be a
// path whose ends touch qubits. The end touching a single qubit (the lower
// label if both do) becomes endpoint_a.
WiredGraph infer_wired_graph(const AtomArray& arr, double r_b);

// Resolved system behind a config.
struct System {
    WiredGraph wired;
    std::optional<AtomArray> array;  // reordered into vertex order
    HamiltonianSpec spec;
};

System build_system(const ExperimentConfig& cfg);

} // namespace rydwire
