#include "rydwire/noise.hpp"

#include "rydwire/error.hpp"

#include <numbers>

namespace rydwire {

NoiseParams NoiseParams::table_defaults() {
    NoiseParams p;
    p.gamma_m = kTwoPi * 0.01;
    p.phase_psd_780 = 1e4;
    p.phase_psd_480 = 1e3;
    p.intensity_fluct = 0.02;
    p.sigma_r = 0.1;
    p.sigma_z = 0.6;
    return p;
}

NoiseParams NoiseParams::dephasing_only(double gamma_m) {
    NoiseParams p;
    p.gamma_m = gamma_m;
    return p;
}

void NoiseParams::validate() const {
    const auto check = [](double v, const char* name) {
        if (!(v >= 0.0)) throw ConfigError(std::string("noise parameter ") + name + " must be >= 0");
    };
    check(gamma_m, "gamma_m");
    check(phase_psd_780, "phase_psd_780");
    check(phase_psd_480, "phase_psd_480");
    check(intensity_fluct, "intensity_fluct");
    check(sigma_r, "sigma_r");
    check(sigma_z, "sigma_z");
}

bool NoiseParams::is_zero() const {
    return gamma_m == 0.0 && phase_psd_780 == 0.0 && phase_psd_480 == 0.0 &&
           intensity_fluct == 0.0 && sigma_r == 0.0 && sigma_z == 0.0;
}

double NoiseParams::phase_step_variance(double dt_us) const {
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    return 2.0 * pi2 * (phase_psd_780 + phase_psd_480) * dt_us * 1e-6;
}

} // namespace rydwire
