#pragma once

#include <array>

#include "json.hpp"

namespace feather {

constexpr double kPi = 3.14159265358979323846;

/// Four-segment periodic root-pitch waveform.
///
/// One period: rise over t_up (upstroke), hold t_hold_up at the top, fall over
/// t_down (downstroke), hold t_hold_down at the bottom. Phase zero is the
/// bottom of the stroke.
struct StrokeController {
  double t_up_s = 0.25;
  double t_down_s = 0.25;
  double t_hold_up_s = 0.5;
  double t_hold_down_s = 0.5;
  /// Peak-to-peak root pitch excursion.
  double amplitude_rad = kPi / 3.0;

  double period() const { return t_up_s + t_hold_up_s + t_down_s + t_hold_down_s; }
  void validate() const;

  /// Symmetric stroke used as the reference controller (0.25/0.25/0.5/0.5 s).
  static StrokeController baseline(double amplitude_rad = kPi / 3.0);
};

/// Log-ratio parameterization at fixed period:
/// (ln t_up/t_down, ln t_hold_up/t_hold_down, ln t_hold/t_move).
struct LogRatioParams {
  double log_up_down = 0.0;
  double log_holds = 0.0;
  double log_hold_move = 0.0;
  double period_s = 1.5;

  std::array<double, 3> as_array() const { return {log_up_down, log_holds, log_hold_move}; }
  static LogRatioParams from_array(const std::array<double, 3>& x, double period_s);
};

StrokeController to_controller(const LogRatioParams& params, double amplitude_rad);
LogRatioParams to_ratios(const StrokeController& controller);

/// Root pitch angle at time t >= 0, in [-A/2, +A/2].
double angle_at(const StrokeController& controller, double t);

void to_json(nlohmann::json& j, const StrokeController& c);
void from_json(const nlohmann::json& j, StrokeController& c);
void to_json(nlohmann::json& j, const LogRatioParams& p);

}  // namespace feather
