#include "rydwire/config.hpp"

#include "rydwire/catalog.hpp"
#include "rydwire/error.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rydwire {
namespace {

template <typename T>
T get(const YAML::Node& node, const char* key, T fallback) {
    const YAML::Node v = node[key];
    if (!v) return fallback;
    try {
        return v.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError(std::string("config field '") + key + "' has the wrong type");
    }
}

void check_keys(const YAML::Node& node, const std::vector<std::string>& allowed,
                const std::string& where) {
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError("unknown key '" + key + "' in " + where);
        }
    }
}

NoiseConfig parse_noise(const YAML::Node& n) {
    NoiseConfig c;
    if (n.IsScalar()) {
        const auto s = n.as<std::string>();
        if (s == "table" || s == "default") return c;
        if (s == "none") {
            c.params = NoiseParams::none();
            return c;
        }
        throw ConfigError("noise must be a map, 'table' or 'none'");
    }
    check_keys(n,
               {"gamma_m_khz", "phase_psd_780", "phase_psd_480", "intensity_fluct", "sigma_r_um",
                "sigma_z_um", "trajectories"},
               "noise");
    auto& p = c.params;
    p.gamma_m = kTwoPi * 1e-3 * get(n, "gamma_m_khz", p.gamma_m / (kTwoPi * 1e-3));
    p.phase_psd_780 = get(n, "phase_psd_780", p.phase_psd_780);
    p.phase_psd_480 = get(n, "phase_psd_480", p.phase_psd_480);
    p.intensity_fluct = get(n, "intensity_fluct", p.intensity_fluct);
    p.sigma_r = get(n, "sigma_r_um", p.sigma_r);
    p.sigma_z = get(n, "sigma_z_um", p.sigma_z);
    c.trajectories = get(n, "trajectories", c.trajectories);
    return c;
}

SpamConfig parse_spam(const YAML::Node& n) {
    SpamConfig c;
    if (n.IsScalar()) {
        const auto s = n.as<std::string>();
        if (s == "appendix" || s == "default") return c;
        if (s == "caption") {
            c.model = SpamModel::caption();
            return c;
        }
        throw ConfigError("spam must be a map, 'appendix' or 'caption'");
    }
    check_keys(n, {"p0_given_1", "p1_given_0", "correct"}, "spam");
    c.model.p0_given_1 = get(n, "p0_given_1", c.model.p0_given_1);
    c.model.p1_given_0 = get(n, "p1_given_0", c.model.p1_given_0);
    c.correct = get(n, "correct", c.correct);
    return c;
}

} // namespace

AnnealSchedule ScheduleConfig::build() const {
    return AnnealSchedule::from_mhz(t_f_us, delta_i_mhz, delta_f_mhz, omega_0_mhz, angular);
}

double ExperimentConfig::interaction_u() const {
    return interaction_u_mhz * (schedule.angular ? kTwoPi : 1.0);
}

std::filesystem::path ExperimentConfig::resolve(const std::string& path) const {
    std::filesystem::path p(path);
    return p.is_absolute() ? p : base_dir / p;
}

void ExperimentConfig::validate() const {
    if (source.empty()) throw ConfigError("config needs a source");
    if (!(dt_us > 0.0)) throw ConfigError("dt_us must be positive");
    if (!(threshold > 0.0 && threshold <= 1.0)) throw ConfigError("threshold must lie in (0, 1]");
    if (!(interaction_u_mhz > 0.0)) throw ConfigError("interaction_u_mhz must be positive");
    if (!(blockade_radius_um > 0.0)) throw ConfigError("blockade_radius_um must be positive");
    if (mode == InteractionMode::physical && array_file.empty() &&
        source_kind != SourceKind::array_file) {
        throw ConfigError("physical mode needs atom positions (array or source.array_file)");
    }
    if (noise) {
        noise->params.validate();
        if (noise->trajectories < 1) throw ConfigError("noise.trajectories must be >= 1");
    }
    if (spam) spam->model.validate();
    // Schedule constructor enforces the sign conventions.
    try {
        (void)schedule.build();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("schedule: ") + e.what());
    }
}

ExperimentConfig parse_config(const std::string& yaml_text, const std::filesystem::path& base_dir) {
    YAML::Node root;
    try {
        root = YAML::Load(yaml_text);
    } catch (const YAML::Exception& e) {
        throw ConfigError(std::string("config is not valid YAML: ") + e.what());
    }
    if (!root.IsMap()) throw ConfigError("config must be a YAML map");
    check_keys(root,
               {"format", "name", "figure", "source", "array", "atom_map", "mode",
                "interaction_u_mhz", "blockade_radius_um", "schedule", "dt_us", "shots",
                "repetitions", "seed", "threshold", "noise", "spam", "expected", "output"},
               "config");
    const int format = get(root, "format", 0);
    if (format != kConfigFormat) {
        throw ConfigError("unsupported config format " + std::to_string(format) + " (expected " +
                          std::to_string(kConfigFormat) + ")");
    }

    ExperimentConfig c;
    c.base_dir = base_dir;
    const YAML::Node src = root["source"];
    if (!src || !src.IsMap() || src.size() != 1) {
        throw ConfigError("source must name exactly one of catalog, graph_file, array_file");
    }
    const auto kind = src.begin()->first.as<std::string>();
    c.source = src.begin()->second.as<std::string>();
    if (kind == "catalog") {
        c.source_kind = SourceKind::catalog;
    } else if (kind == "graph_file") {
        c.source_kind = SourceKind::graph_file;
    } else if (kind == "array_file") {
        c.source_kind = SourceKind::array_file;
    } else {
        throw ConfigError("unknown source kind '" + kind + "'");
    }

    c.name = get<std::string>(root, "name", c.source);
    c.figure = get<std::string>(root, "figure", "");
    c.array_file = get<std::string>(root, "array", "");
    c.atom_map = get(root, "atom_map", std::vector<Vertex>{});
    const auto mode = get<std::string>(root, "mode", "graph");
    if (mode == "graph") {
        c.mode = InteractionMode::graph;
    } else if (mode == "physical") {
        c.mode = InteractionMode::physical;
    } else {
        throw ConfigError("mode must be 'graph' or 'physical'");
    }
    c.interaction_u_mhz = get(root, "interaction_u_mhz", c.interaction_u_mhz);
    c.blockade_radius_um = get(root, "blockade_radius_um", c.blockade_radius_um);
    if (const YAML::Node s = root["schedule"]) {
        check_keys(s, {"t_f_us", "delta_i_mhz", "delta_f_mhz", "omega_0_mhz", "angular"},
                   "schedule");
        auto& sc = c.schedule;
        sc.t_f_us = get(s, "t_f_us", sc.t_f_us);
        sc.delta_i_mhz = get(s, "delta_i_mhz", sc.delta_i_mhz);
        sc.delta_f_mhz = get(s, "delta_f_mhz", sc.delta_f_mhz);
        sc.omega_0_mhz = get(s, "omega_0_mhz", sc.omega_0_mhz);
        sc.angular = get(s, "angular", sc.angular);
    }
    c.dt_us = get(root, "dt_us", c.dt_us);
    c.shots = get(root, "shots", c.shots);
    c.repetitions = get(root, "repetitions", c.repetitions);
    c.seed = get(root, "seed", c.seed);
    c.threshold = get(root, "threshold", c.threshold);
    if (const YAML::Node n = root["noise"]) {
        auto nc = parse_noise(n);
        if (!nc.params.is_zero()) c.noise = nc;
    }
    if (const YAML::Node s = root["spam"]) c.spam = parse_spam(s);
    if (const YAML::Node e = root["expected"]) {
        VertexSetFamily fam;
        try {
            for (const auto& set : e) fam.insert(VertexSet(set.as<std::vector<Vertex>>()));
        } catch (const YAML::Exception&) {
            throw ConfigError("expected must be a list of vertex lists");
        }
        c.expected = fam;
    }
    c.output = get<std::string>(root, "output", "");
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open config '" + file.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_config(ss.str(), file.parent_path().empty() ? "." : file.parent_path());
    } catch (const ConfigError& e) {
        throw ConfigError(file.string() + ": " + e.what());
    }
}

WiredGraph infer_wired_graph(const AtomArray& arr, double r_b) {
    const Graph g = induced_graph(arr, r_b);
    const int n = g.n_vertices();
    int nq = 0;
    while (nq < n && arr.roles()[static_cast<std::size_t>(nq)] == AtomRole::qubit) ++nq;
    for (int k = nq; k < n; ++k) {
        if (arr.roles()[static_cast<std::size_t>(k)] != AtomRole::wire) {
            throw InvalidInputError("qubit atoms must precede wire atoms in the array");
        }
    }
    if (nq == 0) throw InvalidInputError("array has no qubit atoms");

    std::vector<Edge> base_edges;
    for (const Edge& e : g.edges()) {
        if (e.u <= nq && e.v <= nq) base_edges.push_back(e);
    }
    const auto wire_neighbors = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex u : g.neighbors(v)) {
            if (u > nq) out.push_back(u);
        }
        return out;
    };
    const auto qubit_neighbors = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex u : g.neighbors(v)) {
            if (u <= nq) out.push_back(u);
        }
        return out;
    };

    std::vector<Wire> wires;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (Vertex start = nq + 1; start <= n; ++start) {
        if (seen[start]) continue;
        // Walk to one end of the run, then collect it in order.
        Vertex end = start;
        Vertex prev = 0;
        for (;;) {
            const auto wn = wire_neighbors(end);
            if (wn.size() > 2) {
                throw InvalidInputError("wire atom " + std::to_string(end) +
                                        " has more than two wire neighbours");
            }
            Vertex next = 0;
            for (Vertex u : wn) {
                if (u != prev) next = u;
            }
            if (next == 0 || next == start) break;
            prev = end;
            end = next;
        }
        std::vector<Vertex> chain{end};
        seen[end] = true;
        prev = 0;
        for (Vertex cur = end;;) {
            Vertex next = 0;
            for (Vertex u : wire_neighbors(cur)) {
                if (u != prev && !seen[u]) next = u;
            }
            if (next == 0) break;
            seen[next] = true;
            chain.push_back(next);
            prev = cur;
            cur = next;
        }
        for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
            if (!qubit_neighbors(chain[i]).empty()) {
                throw InvalidInputError("interior wire atom " + std::to_string(chain[i]) +
                                        " touches a qubit");
            }
        }
        auto qa = qubit_neighbors(chain.front());
        auto qb = qubit_neighbors(chain.back());
        if (chain.size() == 1) {
            if (qa.size() < 2) throw InvalidInputError("dangling wire atom " + std::to_string(end));
            qb.assign(qa.begin() + 1, qa.end());
            qa.resize(1);
        }
        if (qa.empty() || qb.empty()) {
            throw InvalidInputError("wire through atom " + std::to_string(end) +
                                    " does not end on qubits");
        }
        const bool flip = qa.size() != 1 || (qb.size() == 1 && qb.front() < qa.front());
        if (flip) {
            std::swap(qa, qb);
            std::reverse(chain.begin(), chain.end());
        }
        if (qa.size() != 1) throw InvalidInputError("wire fans out at both ends");
        wires.push_back(Wire{qa.front(), qb, chain});
    }
    WiredGraph wg(Graph(nq, base_edges), wires);
    if (!(wg.combined() == g)) {
        throw InvalidInputError("array couplings are not expressible as qubits joined by wires");
    }
    return wg;
}

System build_system(const ExperimentConfig& cfg) {
    System s;
    std::optional<AtomArray> raw;
    switch (cfg.source_kind) {
    case SourceKind::catalog:
        s.wired = catalog_wired(cfg.source);
        break;
    case SourceKind::graph_file: {
        std::ifstream in(cfg.resolve(cfg.source));
        if (!in) throw ConfigError("cannot open graph file '" + cfg.source + "'");
        s.wired = read_wired_graph(in);
        break;
    }
    case SourceKind::array_file: {
        std::ifstream in(cfg.resolve(cfg.source));
        if (!in) throw ConfigError("cannot open array file '" + cfg.source + "'");
        raw = read_array(in);
        break;
    }
    }
    if (!cfg.array_file.empty()) {
        std::ifstream in(cfg.resolve(cfg.array_file));
        if (!in) throw ConfigError("cannot open array file '" + cfg.array_file + "'");
        raw = read_array(in);
    }
    if (raw) {
        s.array = cfg.atom_map.empty() ? *raw : raw->reordered(cfg.atom_map);
        if (cfg.source_kind == SourceKind::array_file) {
            s.wired = infer_wired_graph(*s.array, cfg.blockade_radius_um);
        }
        if (static_cast<int>(s.array->size()) != s.wired.n_atoms()) {
            throw ConfigError("array has " + std::to_string(s.array->size()) +
                              " atoms but the wired graph has " +
                              std::to_string(s.wired.n_atoms()));
        }
    }
    if (cfg.mode == InteractionMode::graph) {
        s.spec = HamiltonianSpec::graph_mode(s.wired.combined(), cfg.interaction_u());
    } else {
        const double omega_0 = cfg.schedule.build().omega_0();
        const auto bp = BlockadeParams::from_radius(cfg.blockade_radius_um, omega_0);
        s.spec = HamiltonianSpec::physical_mode(*s.array, bp.c6_over_hbar);
    }
    return s;
}

} // namespace rydwire
