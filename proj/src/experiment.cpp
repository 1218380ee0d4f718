#include "rydwire/experiment.hpp"

#include "rydwire/error.hpp"
#include "rydwire/evolve.hpp"
#include "rydwire/mis.hpp"
#include "rydwire/trajectory.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace rydwire {
namespace {

using ojson = nlohmann::ordered_json;

ojson family_json(const VertexSetFamily& fam) {
    ojson a = ojson::array();
    for (const auto& s : fam) a.push_back(std::vector<Vertex>(s.begin(), s.end()));
    return a;
}

Metadata histogram_metadata(const ExperimentConfig& cfg, const std::string& what) {
    const auto& s = cfg.schedule;
    std::ostringstream sched;
    sched << "t_f=" << s.t_f_us << "us delta_i=" << s.delta_i_mhz << "MHz delta_f="
          << s.delta_f_mhz << "MHz omega_0=" << s.omega_0_mhz << "MHz"
          << (s.angular ? " (x2pi)" : "");
    return {{"experiment", cfg.name},
            {"histogram", what},
            {"graph", cfg.source},
            {"mode", cfg.mode == InteractionMode::graph ? "graph" : "physical"},
            {"schedule", sched.str()},
            {"seed", std::to_string(cfg.seed)}};
}

void write_file(const std::filesystem::path& p, const auto& writer) {
    std::ofstream out(p);
    if (!out) throw Error("cannot write '" + p.string() + "'");
    writer(out);
}

} // namespace

Histogram project_histogram(const Histogram& h, const WiredGraph& wg) {
    if (h.n_atoms() != wg.n_atoms()) {
        throw InvalidInputError("histogram width " + std::to_string(h.n_atoms()) +
                                " does not match " + std::to_string(wg.n_atoms()) + " atoms");
    }
    const int shift = wg.n_atoms() - wg.n_qubits();
    Histogram out(wg.n_qubits(), h.shots());
    for (const auto& [k, p] : h.entries()) out.add(k >> shift, p);
    out.spam_corrected = h.spam_corrected;
    out.clamped = h.clamped;
    out.trajectories = h.trajectories;
    return out;
}

std::string to_string(OutcomeClass c) {
    switch (c) {
    case OutcomeClass::mis: return "mis";
    case OutcomeClass::frustrated: return "frustrated";
    case OutcomeClass::other: return "other";
    }
    return "other";
}

std::vector<ClassifiedOutcome> classify_outcomes(const Histogram& projected,
                                                 const WiredGraph& wg,
                                                 const VertexSetFamily& oracle, double threshold) {
    const auto ranked = projected.ranked();
    const double peak = ranked.empty() ? 0.0 : ranked.front().second;
    std::vector<ClassifiedOutcome> out;
    out.reserve(ranked.size());
    for (const auto& [k, p] : ranked) {
        ClassifiedOutcome c;
        c.set = excited_atoms(k, projected.n_atoms());
        c.probability = p;
        if (oracle.count(c.set)) {
            c.cls = OutcomeClass::mis;
        } else if (is_frustrated(c.set, wg)) {
            c.cls = OutcomeClass::frustrated;
        }
        c.candidate = peak > 0.0 && p >= threshold * peak;
        out.push_back(std::move(c));
    }
    return out;
}

VertexSetFamily extract_mis(const Histogram& projected, const WiredGraph& wg, double threshold) {
    if (projected.n_atoms() != wg.n_qubits()) {
        throw InvalidInputError("projected histogram does not match the qubit count");
    }
    const auto ranked = projected.ranked();
    const double peak = ranked.empty() ? 0.0 : ranked.front().second;
    if (!(peak > 0.0)) throw ExtractionFailedError("histogram is empty", "no outcomes");

    std::ostringstream diag;
    diag << std::setprecision(4);
    std::vector<VertexSet> cands;
    for (const auto& [k, p] : ranked) {
        if (p < threshold * peak) break;
        cands.push_back(excited_atoms(k, projected.n_atoms()));
    }
    const double register_size = std::ldexp(1.0, wg.n_qubits());
    if (static_cast<double>(ranked.size()) == register_size &&
        peak < kFlatPeakRatio * ranked.back().second) {
        diag << "every outcome present, peak " << peak << " below " << kFlatPeakRatio
             << " x the rarest " << ranked.back().second;
        throw ExtractionFailedError("no dominant structure in the histogram", diag.str());
    }

    std::vector<VertexSet> survivors;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const auto& s = cands[i];
        diag << s.to_string() << " p=" << ranked[i].second;
        if (!is_independent(wg.base(), s)) {
            diag << " rejected: not independent\n";
        } else if (is_frustrated(s, wg)) {
            diag << " rejected: frustrated\n";
        } else {
            diag << " kept\n";
            survivors.push_back(s);
        }
    }
    if (survivors.empty()) {
        throw ExtractionFailedError("no candidate survived the independence and frustration filters",
                                    diag.str());
    }
    std::size_t best = 0;
    for (const auto& s : survivors) best = std::max(best, s.size());
    VertexSetFamily out;
    for (const auto& s : survivors) {
        if (s.size() == best) out.insert(s);
    }
    return out;
}

double mis_probability(const Histogram& projected, const VertexSetFamily& oracle) {
    double acc = 0.0;
    for (const auto& s : oracle) acc += projected.probability(index_of(s, projected.n_atoms()));
    return acc;
}

ExperimentConfig apply_overrides(ExperimentConfig cfg, const RunOverrides& o) {
    if (o.shots) cfg.shots = *o.shots;
    if (o.seed) cfg.seed = *o.seed;
    if (o.dt_us) cfg.dt_us = *o.dt_us;
    if (o.noise && !cfg.noise) cfg.noise = NoiseConfig{};
    if (o.spam && !cfg.spam) cfg.spam = SpamConfig{};
    cfg.validate();
    return cfg;
}

MisReport run_experiment(const ExperimentConfig& cfg, const EvolveOptions& hooks) {
    cfg.validate();
    const System sys = build_system(cfg);

    MisReport r;
    r.name = cfg.name;
    r.figure = cfg.figure;
    r.threshold = cfg.threshold;
    r.expected = cfg.expected;
    if (sys.array) r.geometry = validate_embedding(*sys.array, sys.wired.combined(), cfg.blockade_radius_um);
    r.oracle = mis_brute_force(target_of(sys.wired));

    const AnnealSchedule schedule = cfg.schedule.build();
    const StateVector psi0(sys.wired.n_atoms());
    Histogram dist;
    if (cfg.noise) {
        dist = trajectory_sample(psi0, sys.spec, schedule, cfg.noise->params,
                                 cfg.noise->trajectories, cfg.seed, cfg.dt_us);
    } else {
        const RydbergHamiltonian h(sys.spec);
        EvolveOptions o = hooks;
        o.dt = cfg.dt_us;
        dist = measure(evolve(psi0, h, schedule, o), 0, cfg.seed);
    }
    if (cfg.spam) dist = spam_apply(dist, cfg.spam->model);
    if (cfg.shots > 0) {
        const auto traj = dist.trajectories;
        // Separate stream from the trajectory noise.
        dist = sample(dist, cfg.shots, cfg.seed ^ 0x9e3779b97f4a7c15ULL);
        dist.trajectories = traj;
    }
    if (cfg.spam && cfg.spam->correct) {
        r.mis_probability_uncorrected =
            mis_probability(project_histogram(dist, sys.wired), r.oracle);
        dist = spam_correct(dist, cfg.spam->model);
    }

    r.raw = dist;
    r.projected = project_histogram(dist, sys.wired);
    r.outcomes = classify_outcomes(r.projected, sys.wired, r.oracle, cfg.threshold);
    r.mis_probability = mis_probability(r.projected, r.oracle);
    for (const auto& o : r.outcomes) {
        if (o.candidate && o.cls != OutcomeClass::other) ++r.dominant;
    }
    try {
        r.extracted = extract_mis(r.projected, sys.wired, cfg.threshold);
    } catch (const ExtractionFailedError& e) {
        r.extraction_error = std::string(e.what()) + "\n" + e.diagnostics();
    }
    r.match = r.extraction_error.empty() && r.extracted == r.oracle;
    r.expected_match = !r.expected || *r.expected == r.extracted;
    return r;
}

void write_report_json(std::ostream& out, const MisReport& r, const ExperimentConfig& cfg) {
    ojson j;
    j["name"] = r.name;
    j["figure"] = r.figure;
    j["source"] = cfg.source;
    j["mode"] = cfg.mode == InteractionMode::graph ? "graph" : "physical";
    j["schedule"] = {{"t_f_us", cfg.schedule.t_f_us},
                     {"delta_i_mhz", cfg.schedule.delta_i_mhz},
                     {"delta_f_mhz", cfg.schedule.delta_f_mhz},
                     {"omega_0_mhz", cfg.schedule.omega_0_mhz},
                     {"angular", cfg.schedule.angular}};
    j["dt_us"] = cfg.dt_us;
    j["shots"] = cfg.shots;
    j["seed"] = cfg.seed;
    j["threshold"] = r.threshold;
    j["noise"] = cfg.noise.has_value();
    if (cfg.noise) j["trajectories"] = cfg.noise->trajectories;
    j["spam_corrected"] = r.raw.spam_corrected;
    j["spam_clamped"] = r.raw.clamped;
    j["bit_order"] = "atom 1 = leftmost (most significant) bit; 1 = Rydberg";
    j["oracle"] = family_json(r.oracle);
    j["extracted"] = family_json(r.extracted);
    if (r.expected) j["expected"] = family_json(*r.expected);
    j["match"] = r.match;
    j["expected_match"] = r.expected_match;
    if (!r.extraction_error.empty()) j["extraction_error"] = r.extraction_error;
    j["mis_probability"] = r.mis_probability;
    if (r.mis_probability_uncorrected) j["mis_probability_uncorrected"] = *r.mis_probability_uncorrected;
    j["dominant_outcomes"] = r.dominant;
    ojson outs = ojson::array();
    for (const auto& o : r.outcomes) {
        outs.push_back({{"set", std::vector<Vertex>(o.set.begin(), o.set.end())},
                        {"bitstring", bitstring(index_of(o.set, r.projected.n_atoms()),
                                                r.projected.n_atoms())},
                        {"probability", o.probability},
                        {"class", to_string(o.cls)},
                        {"candidate", o.candidate}});
    }
    j["outcomes"] = outs;
    if (r.geometry) {
        const auto pairs = [](const std::vector<PairDistance>& v) {
            ojson a = ojson::array();
            for (const auto& p : v) a.push_back({p.pair.u, p.pair.v, p.distance});
            return a;
        };
        j["geometry"] = {{"ok", r.geometry->ok()},
                         {"missing", pairs(r.geometry->missing)},
                         {"spurious", pairs(r.geometry->spurious)},
                         {"marginal", pairs(r.geometry->marginal)},
                         {"min_edge_margin", r.geometry->min_edge_margin},
                         {"min_nonedge_margin", r.geometry->min_nonedge_margin}};
    }
    out << j.dump(2) << '\n';
}

void write_artifacts(const MisReport& r, const ExperimentConfig& cfg,
                     const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const Metadata full = histogram_metadata(cfg, "full register");
    Metadata proj = histogram_metadata(cfg, "qubit atoms (wire atoms traced out)");
    write_file(dir / "histogram.csv", [&](std::ostream& o) { write_histogram_csv(o, r.raw, full); });
    write_file(dir / "histogram.json", [&](std::ostream& o) { write_histogram_json(o, r.raw, full); });
    write_file(dir / "projected.csv",
               [&](std::ostream& o) { write_histogram_csv(o, r.projected, proj); });
    write_file(dir / "report.json", [&](std::ostream& o) { write_report_json(o, r, cfg); });

    // Bars ordered by excitation number, then bitstring.
    write_file(dir / "projected.dat", [&](std::ostream& o) {
        const int n = r.projected.n_atoms();
        std::vector<std::uint64_t> keys;
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) keys.push_back(k);
        std::stable_sort(keys.begin(), keys.end(), [&](auto a, auto b) {
            const int ca = std::popcount(a);
            const int cb = std::popcount(b);
            if (ca != cb) return ca < cb;
            return bitstring(a, n) < bitstring(b, n);
        });
        o << "# " << r.name << ": x bitstring n_e probability class\n";
        o << std::setprecision(10);
        for (std::size_t x = 0; x < keys.size(); ++x) {
            const auto set = excited_atoms(keys[x], n);
            std::string cls = "other";
            for (const auto& c : r.outcomes) {
                if (c.set == set) cls = to_string(c.cls);
            }
            o << x << ' ' << bitstring(keys[x], n) << ' ' << std::popcount(keys[x]) << ' '
              << r.projected.probability(keys[x]) << ' ' << cls << '\n';
        }
    });
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("RYDWIRE_DATA")) return env;
    return RYDWIRE_DATA_DIR;
}

std::vector<ExperimentConfig> bundled_experiments(const std::string& figure,
                                                  const std::filesystem::path& data_dir) {
    const auto dir = data_dir / "experiments";
    if (!std::filesystem::is_directory(dir)) {
        throw ConfigError("no bundled experiments under '" + dir.string() + "'");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() == ".yaml") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<ExperimentConfig> out;
    for (const auto& f : files) {
        auto cfg = load_config(f);
        if (cfg.figure == figure) out.push_back(std::move(cfg));
    }
    if (out.empty()) throw LookupError("no bundled experiments for figure " + figure);
    return out;
}

void print_comparison(std::ostream& out, const std::vector<MisReport>& reports) {
    out << std::left << std::setw(10) << "graph" << std::setw(28) << "extracted" << std::setw(28)
        << "expected" << std::setw(10) << "dominant" << std::setw(10) << "P(MIS)" << "match\n";
    for (const auto& r : reports) {
        out << std::left << std::setw(10) << r.name << std::setw(28) << to_string(r.extracted)
            << std::setw(28) << (r.expected ? to_string(*r.expected) : to_string(r.oracle))
            << std::setw(10) << r.dominant << std::setw(10) << std::fixed << std::setprecision(4)
            << r.mis_probability << std::defaultfloat << (r.ok() ? "yes" : "NO") << '\n';
    }
}

} // namespace rydwire
