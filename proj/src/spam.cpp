#include "rydwire/spam.hpp"

#include "rydwire/error.hpp"

#include <cmath>

namespace rydwire {
namespace {

// Applies the 2x2 (1, 0)-ordered matrix `a` to every atom of a dense
// distribution indexed with atom 1 as the most significant bit.
void apply_tensor(std::vector<double>& v, int n, const std::array<double, 4>& a) {
    for (int b = 0; b < n; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i & bit) continue;
            const double zero = v[i];
            const double one = v[i | bit];
            v[i | bit] = a[0] * one + a[1] * zero;
            v[i] = a[2] * one + a[3] * zero;
        }
    }
}

} // namespace

void SpamModel::validate() const {
    if (!(p0_given_1 >= 0.0 && p0_given_1 <= 1.0 && p1_given_0 >= 0.0 && p1_given_0 <= 1.0)) {
        throw ConfigError("SPAM probabilities must lie in [0, 1]");
    }
}

std::array<double, 4> SpamModel::matrix() const {
    return {1.0 - p0_given_1, p1_given_0, p0_given_1, 1.0 - p1_given_0};
}

Histogram spam_apply(const Histogram& h, const SpamModel& m) {
    m.validate();
    auto v = h.dense();
    apply_tensor(v, h.n_atoms(), m.matrix());
    Histogram out = Histogram::from_dense(h.n_atoms(), v);
    // Sampled histograms keep their shot count.
    Histogram result(h.n_atoms(), h.shots());
    for (const auto& [k, p] : out.entries()) result.add(k, p);
    result.trajectories = h.trajectories;
    return result;
}

SpamCorrection spam_correct_detailed(const Histogram& h, const SpamModel& m) {
    m.validate();
    const double det = m.determinant();
    if (std::abs(det) < 1e-12) throw InversionError("SPAM matrix is singular (P(0|1) + P(1|0) = 1)");
    const auto a = m.matrix();
    const std::array<double, 4> inv{a[3] / det, -a[1] / det, -a[2] / det, a[0] / det};

    SpamCorrection c;
    c.raw = h.dense();
    const double total_in = h.total();
    apply_tensor(c.raw, h.n_atoms(), inv);

    std::vector<double> v = c.raw;
    double total = 0.0;
    for (double& x : v) {
        if (x < -kClampTolerance) c.clamped = true;
        if (x < 0.0) x = 0.0;
        total += x;
    }
    if (!(total > 0.0)) throw InversionError("corrected distribution vanishes after clamping");
    if (c.clamped) {
        for (double& x : v) x *= total_in / total;
    }
    Histogram out = Histogram::from_dense(h.n_atoms(), v);
    c.corrected = Histogram(h.n_atoms(), h.shots());
    for (const auto& [k, p] : out.entries()) c.corrected.add(k, p);
    c.corrected.spam_corrected = true;
    c.corrected.clamped = c.clamped;
    c.corrected.trajectories = h.trajectories;
    return c;
}

Histogram spam_correct(const Histogram& h, const SpamModel& m) {
    return spam_correct_detailed(h, m).corrected;
}

} // namespace rydwire
