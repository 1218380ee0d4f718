#pragma once

#include <numbers>

namespace rydwire {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Instantaneous drive: Rabi frequency and detuning, rad/us.
struct DriveSample {
    double omega = 0.0;
    double delta = 0.0;
};

// Time-dependent global drive over [0, duration()].
class Protocol {
  public:
    virtual ~Protocol() = default;
    virtual double duration() const = 0;
    virtual DriveSample at(double t) const = 0;
    // Upper bound of |delta(t)| and Omega(t), used for step-size checks.
    virtual double max_abs_detuning() const = 0;
    virtual double max_rabi() const = 0;
};

// Three-region quasi-adiabatic sweep:
//   [0, t_f/10]         Omega ramps 0 -> omega_0, delta = delta_i
//   [t_f/10, 9 t_f/10]  Omega = omega_0, delta ramps delta_i -> delta_f
//   [9 t_f/10, t_f]     Omega ramps omega_0 -> 0, delta = delta_f
class AnnealSchedule final : public Protocol {
  public:
    AnnealSchedule(double t_f, double delta_i, double delta_f, double omega_0);

    // Frequencies given in MHz; `angular` multiplies them by 2pi.
    static AnnealSchedule from_mhz(double t_f, double delta_i_mhz, double delta_f_mhz,
                                   double omega_0_mhz, bool angular = true);

    double t_f() const { return t_f_; }
    double delta_i() const { return delta_i_; }
    double delta_f() const { return delta_f_; }
    double omega_0() const { return omega_0_; }

    double duration() const override { return t_f_; }
    DriveSample at(double t) const override;
    double max_abs_detuning() const override;
    double max_rabi() const override { return omega_0_; }

    AnnealSchedule with_t_f(double t_f) const { return {t_f, delta_i_, delta_f_, omega_0_}; }

  private:
    double t_f_;
    double delta_i_;
    double delta_f_;
    double omega_0_;
};

// Throws DomainError outside [0, t_f].
DriveSample schedule_eval(const AnnealSchedule& s, double t);

// Constant drive held for a fixed duration.
class ConstantDrive final : public Protocol {
  public:
    ConstantDrive(double duration, double omega, double delta);

    double duration() const override { return duration_; }
    DriveSample at(double) const override { return {omega_, delta_}; }
    double max_abs_detuning() const override;
    double max_rabi() const override;

  private:
    double duration_;
    double omega_;
    double delta_;
};

} // namespace rydwire
