#include "rydwire/schedule.hpp"

#include "rydwire/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rydwire {

AnnealSchedule::AnnealSchedule(double t_f, double delta_i, double delta_f, double omega_0)
    : t_f_(t_f), delta_i_(delta_i), delta_f_(delta_f), omega_0_(omega_0) {
    if (!(t_f > 0.0)) throw DomainError("t_f must be positive");
    if (!(delta_i < 0.0)) throw DomainError("initial detuning must be negative");
    if (!(delta_f > 0.0)) throw DomainError("final detuning must be positive");
    if (!(omega_0 > 0.0)) throw DomainError("Rabi frequency must be positive");
}

AnnealSchedule AnnealSchedule::from_mhz(double t_f, double delta_i_mhz, double delta_f_mhz,
                                        double omega_0_mhz, bool angular) {
    const double k = angular ? kTwoPi : 1.0;
    return {t_f, k * delta_i_mhz, k * delta_f_mhz, k * omega_0_mhz};
}

DriveSample AnnealSchedule::at(double t) const {
    const double t1 = t_f_ / 10.0;
    const double t2 = 9.0 * t_f_ / 10.0;
    if (t <= t1) return {omega_0_ * (t / t1), delta_i_};
    if (t < t2) return {omega_0_, delta_i_ + (delta_f_ - delta_i_) * (t - t1) / (t2 - t1)};
    return {omega_0_ * std::max(0.0, (t_f_ - t) / (t_f_ - t2)), delta_f_};
}

double AnnealSchedule::max_abs_detuning() const {
    return std::max(std::abs(delta_i_), std::abs(delta_f_));
}

DriveSample schedule_eval(const AnnealSchedule& s, double t) {
    if (!(t >= 0.0 && t <= s.t_f())) {
        throw DomainError("time " + std::to_string(t) + " outside [0, " + std::to_string(s.t_f()) +
                          "]");
    }
    return s.at(t);
}

ConstantDrive::ConstantDrive(double duration, double omega, double delta)
    : duration_(duration), omega_(omega), delta_(delta) {
    if (!(duration >= 0.0)) throw DomainError("duration must be non-negative");
}

double ConstantDrive::max_abs_detuning() const { return std::abs(delta_); }
double ConstantDrive::max_rabi() const { return std::abs(omega_); }

} // namespace rydwire
