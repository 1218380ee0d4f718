#pragma once

#include "rydwire/config.hpp"
#include "rydwire/evolve.hpp"
#include "rydwire/geometry.hpp"
#include "rydwire/histogram.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rydwire {

// Marginal over wire atoms: qubit atoms 1..n_q keep their bits.
Histogram project_histogram(const Histogram& h, const WiredGraph& wg);

enum class OutcomeClass { mis, frustrated, other };
std::string to_string(OutcomeClass c);

struct ClassifiedOutcome {
    VertexSet set;
    double probability = 0.0;
    OutcomeClass cls = OutcomeClass::other;
    bool candidate = false;  // passed the threshold
};

// Every outcome of a projected histogram, by decreasing probability.
// Outcomes in `oracle` are MIS; outcomes with an excited wire boundary pair
// are frustrated.
std::vector<ClassifiedOutcome> classify_outcomes(const Histogram& projected,
                                                 const WiredGraph& wg,
                                                 const VertexSetFamily& oracle, double threshold);

// Keeps outcomes at or above threshold x the top peak, drops sets that are
// not independent in the base graph and frustrated sets, and returns the
// largest survivors. Throws ExtractionFailedError when nothing survives or
// when the histogram is flat: every outcome present and the peak below
// kFlatPeakRatio x the rarest one.
inline constexpr double kFlatPeakRatio = 2.0;

VertexSetFamily extract_mis(const Histogram& projected, const WiredGraph& wg,
                            double threshold = kDefaultThreshold);

struct MisReport {
    std::string name;
    std::string figure;
    Histogram raw;        // full register, after SPAM handling
    Histogram projected;  // qubit atoms only
    std::vector<ClassifiedOutcome> outcomes;
    VertexSetFamily extracted;
    VertexSetFamily oracle;  // brute-force M(G_T)
    std::optional<VertexSetFamily> expected;
    bool match = false;           // extracted == oracle
    bool expected_match = true;   // oracle == expected, when given
    std::string extraction_error;
    double mis_probability = 0.0;
    // Before SPAM correction, when correction was applied.
    std::optional<double> mis_probability_uncorrected;
    int dominant = 0;  // candidates classified MIS or frustrated
    double threshold = kDefaultThreshold;
    std::optional<ValidationReport> geometry;

    bool ok() const { return match && expected_match; }
};

double mis_probability(const Histogram& projected, const VertexSetFamily& oracle);

// Overrides applied on top of a config, as given on the command line.
struct RunOverrides {
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    bool noise = false;
    bool spam = false;
    std::optional<double> dt_us;
};

ExperimentConfig apply_overrides(ExperimentConfig cfg, const RunOverrides& o);

// Builds, evolves, measures, applies SPAM, projects and extracts. The
// observer in `hooks` sees the state during noiseless runs.
MisReport run_experiment(const ExperimentConfig& cfg, const EvolveOptions& hooks = {});

// histogram.csv/json (full register), projected.csv, projected.dat
// (gnuplot bar data) and report.json inside `dir`.
void write_artifacts(const MisReport& r, const ExperimentConfig& cfg,
                     const std::filesystem::path& dir);
void write_report_json(std::ostream& out, const MisReport& r, const ExperimentConfig& cfg);

// Bundled experiment configs whose `figure` field matches.
std::vector<ExperimentConfig> bundled_experiments(const std::string& figure,
                                                  const std::filesystem::path& data_dir);
std::filesystem::path default_data_dir();

// One line per report: name, extracted, oracle, expected, match.
void print_comparison(std::ostream& out, const std::vector<MisReport>& reports);

} // namespace rydwire
