#pragma once

#include "rydwire/histogram.hpp"

#include <array>
#include <vector>

namespace rydwire {

// Independent per-atom readout error. In (1, 0) ordering
//
//   M = [[1 - P(0|1), P(1|0)],
//        [P(0|1),     1 - P(1|0)]]
//
// maps true populations to measured ones.
struct SpamModel {
    double p0_given_1 = 0.0;
    double p1_given_0 = 0.0;

    // P(0|1) = 0.18, P(1|0) = 0.03.
    static SpamModel appendix() { return {0.18, 0.03}; }
    // The transposed assignment, P(0|1) = 0.03, P(1|0) = 0.18.
    static SpamModel caption() { return {0.03, 0.18}; }
    static SpamModel identity() { return {}; }

    // Throws ConfigError unless both probabilities lie in [0, 1].
    void validate() const;
    double determinant() const { return 1.0 - p0_given_1 - p1_given_0; }
    // Row-major (1, 0) ordered entries.
    std::array<double, 4> matrix() const;
};

// M^{(x)N} applied to the probability vector.
Histogram spam_apply(const Histogram& h, const SpamModel& m);

struct SpamCorrection {
    Histogram corrected;
    // (M^-1)^{(x)N} S before clamping, dense.
    std::vector<double> raw;
    bool clamped = false;
};

// Entries above -kClampTolerance are rounding noise and zeroed silently;
// anything more negative is clamped and flagged.
inline constexpr double kClampTolerance = 1e-12;

// (M^-1)^{(x)N} applied, negatives clamped to zero and the result
// renormalized. Throws InversionError for singular M.
SpamCorrection spam_correct_detailed(const Histogram& h, const SpamModel& m);
Histogram spam_correct(const Histogram& h, const SpamModel& m);

} // namespace rydwire
