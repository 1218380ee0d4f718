#pragma once

#include "rydwire/schedule.hpp"

namespace rydwire {

// Classical and open-system noise levels. Frequencies in rad/us, phase
// noise PSDs in Hz^2/Hz, lengths in um.
struct NoiseParams {
    double gamma_m = 0.0;          // dephasing rate of L = sqrt(gamma_m / 2) sigma^z
    double phase_psd_780 = 0.0;
    double phase_psd_480 = 0.0;
    double intensity_fluct = 0.0;  // relative sd of the global Rabi frequency
    double sigma_r = 0.0;          // in-plane position sd
    double sigma_z = 0.0;          // axial position sd

    // gamma_m = 2pi x 10 kHz, PSDs 1e4 / 1e3, 2% intensity, 0.1 / 0.6 um.
    static NoiseParams table_defaults();
    static NoiseParams none() { return {}; }
    static NoiseParams dephasing_only(double gamma_m);

    // Throws ConfigError on negative entries.
    void validate() const;
    bool is_zero() const;

    // Variance (rad^2) of the laser phase increment accumulated over a step
    // of dt microseconds: 2 pi^2 (S_780 + S_480) dt.
    double phase_step_variance(double dt_us) const;
};

} // namespace rydwire
