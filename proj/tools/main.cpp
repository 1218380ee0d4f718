#include "rydwire/catalog.hpp"
#include "rydwire/error.hpp"
#include "rydwire/experiment.hpp"
#include "rydwire/geometry.hpp"
#include "rydwire/mis.hpp"
#include "rydwire/wire.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace fs = std::filesystem;
using namespace rydwire;

namespace {

constexpr int kExitMatch = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

// Catalog name, or a file in the (wired) edge-list format.
WiredGraph load_graph(const std::string& arg) {
    if (fs::is_regular_file(arg)) {
        std::ifstream in(arg);
        return read_wired_graph(in);
    }
    return catalog_wired(arg);
}

void print_report(const MisReport& r) {
    std::cout << r.name << ": extracted " << to_string(r.extracted) << ", oracle "
              << to_string(r.oracle);
    if (r.expected) std::cout << ", expected " << to_string(*r.expected);
    std::cout << "\n  P(MIS) = " << r.mis_probability;
    if (r.mis_probability_uncorrected) {
        std::cout << " (before SPAM correction " << *r.mis_probability_uncorrected << ")";
    }
    std::cout << ", dominant outcomes " << r.dominant << '\n';
    for (const auto& o : r.outcomes) {
        if (!o.candidate) continue;
        std::cout << "  " << std::left << std::setw(16) << o.set.to_string() << std::setw(12)
                  << o.probability << to_string(o.cls) << '\n';
    }
    if (r.raw.clamped) std::cout << "  warning: negative corrected probabilities clamped\n";
    if (r.geometry && !r.geometry->ok()) {
        std::cout << "  warning: array does not realize the wired graph ("
                  << r.geometry->missing.size() << " missing, " << r.geometry->spurious.size()
                  << " spurious, " << r.geometry->marginal.size() << " marginal)\n";
    }
    if (!r.extraction_error.empty()) std::cout << "  extraction failed: " << r.extraction_error << '\n';
    std::cout << "  match: " << (r.ok() ? "yes" : "NO") << '\n';
}

fs::path output_dir(const ExperimentConfig& cfg, const std::string& out, bool batch) {
    if (!out.empty()) return batch ? fs::path(out) / cfg.name : fs::path(out);
    if (!cfg.output.empty()) return cfg.output;
    return fs::path("out") / cfg.name;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rydberg quantum-wire MIS simulator"};
    app.require_subcommand(1);

    RunOverrides ov;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    double dt = 0.0;
    std::string out;
    std::string data = default_data_dir().string();
    const auto add_run_flags = [&](CLI::App* sub) {
        sub->add_option("--shots", shots, "Measurement shots (0 = exact distribution)");
        sub->add_option("--seed", seed, "Random seed");
        sub->add_option("--dt", dt, "Time step in us");
        sub->add_flag("--noise", ov.noise, "Enable default noise levels if the config has none");
        sub->add_flag("--spam", ov.spam, "Apply and correct default SPAM errors if the config has none");
        sub->add_option("--out", out, "Output directory");
    };

    std::string config;
    auto* run = app.add_subcommand("run", "Run one experiment config");
    run->add_option("config", config, "YAML config")->required()->check(CLI::ExistingFile);
    add_run_flags(run);

    std::string figure;
    auto* repro = app.add_subcommand("reproduce", "Run the bundled experiments of a figure");
    repro->add_option("figure", figure, "Figure number: 2, 3 or 4")->required();
    repro->add_option("--data", data, "Data directory holding experiments/ and arrays/");
    add_run_flags(repro);

    std::string graph_arg;
    auto* oracle = app.add_subcommand("oracle", "Brute-force MIS of a graph");
    oracle->add_option("graph", graph_arg, "Catalog name or edge-list file")->required();

    std::string array_arg;
    double r_b = kTableBlockadeRadius;
    std::vector<Vertex> atom_map;
    auto* geom = app.add_subcommand("validate-geometry", "Check an array against a graph");
    geom->add_option("array", array_arg, "Array file")->required()->check(CLI::ExistingFile);
    geom->add_option("graph", graph_arg, "Catalog name or edge-list file")->required();
    geom->add_option("--rb", r_b, "Blockade radius in um");
    geom->add_option("--atom-map", atom_map, "Graph vertex carried by each file atom")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    const auto collect = [&](CLI::App* sub) {
        if (sub->count("--shots")) ov.shots = shots;
        if (sub->count("--seed")) ov.seed = seed;
        if (sub->count("--dt")) ov.dt_us = dt;
    };

    try {
        if (*run) {
            collect(run);
            const auto cfg = apply_overrides(load_config(config), ov);
            const auto r = run_experiment(cfg);
            write_artifacts(r, cfg, output_dir(cfg, out, false));
            print_report(r);
            return r.ok() ? kExitMatch : kExitMismatch;
        }
        if (*repro) {
            collect(repro);
            std::vector<MisReport> reports;
            for (auto cfg : bundled_experiments(figure, data)) {
                cfg = apply_overrides(std::move(cfg), ov);
                auto r = run_experiment(cfg);
                write_artifacts(r, cfg, output_dir(cfg, out, true));
                print_report(r);
                reports.push_back(std::move(r));
            }
            std::cout << '\n';
            print_comparison(std::cout, reports);
            for (const auto& r : reports) {
                if (!r.ok()) return kExitMismatch;
            }
            return kExitMatch;
        }
        if (*oracle) {
            const WiredGraph wg = load_graph(graph_arg);
            if (wg.wires().empty()) {
                const auto fam = mis_brute_force(wg.base());
                std::cout << "M(G) = " << to_string(fam) << "  (size " << independence_number(wg.base())
                          << ")\n";
                return kExitMatch;
            }
            const auto ws = analyze_wires(wg);
            const auto direct = mis_brute_force(target_of(wg));
            std::cout << "M(G0+w) projected = " << to_string(ws.projected) << '\n'
                      << "frustrated        = " << to_string(ws.frustrated) << '\n'
                      << "M(G_T) via wires  = " << to_string(ws.solution) << '\n'
                      << "M(G_T) direct     = " << to_string(direct) << '\n';
            return ws.solution == direct ? kExitMatch : kExitMismatch;
        }
        if (*geom) {
            std::ifstream in(array_arg);
            AtomArray arr = read_array(in);
            if (!atom_map.empty()) arr = arr.reordered(atom_map);
            const WiredGraph wg = load_graph(graph_arg);
            const auto rep = validate_embedding(arr, wg.combined(), r_b);
            std::cout << std::setprecision(4) << "matched " << rep.matched.size() << ", missing "
                      << rep.missing.size() << ", spurious " << rep.spurious.size()
                      << ", marginal " << rep.marginal.size() << '\n';
            for (const auto& p : rep.missing) {
                std::cout << "  missing  " << p.pair.u << '-' << p.pair.v << "  d = " << p.distance << '\n';
            }
            for (const auto& p : rep.spurious) {
                std::cout << "  spurious " << p.pair.u << '-' << p.pair.v << "  d = " << p.distance << '\n';
            }
            for (const auto& p : rep.marginal) {
                std::cout << "  marginal " << p.pair.u << '-' << p.pair.v << "  d = " << p.distance << '\n';
            }
            std::cout << "edge margin " << rep.min_edge_margin << ", non-edge margin "
                      << rep.min_nonedge_margin << '\n';
            return rep.ok() ? kExitMatch : kExitMismatch;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
