#pragma once

#include <optional>
#include <string>

#include "feather/hydro.hpp"
#include "json.hpp"

namespace feather {

/// Thrust ratio that may be unbounded when the trace never pushes downward
/// (negative integral at or below epsilon).
struct ThrustRatio {
  double value = 0.0;
  bool unbounded = false;
  /// Positive integral carried along for unbounded results.
  double positive_integral_Ns = 0.0;

  /// Unbounded ratios rank above every finite ratio.
  friend bool operator<(const ThrustRatio& a, const ThrustRatio& b) {
    if (a.unbounded != b.unbounded) return b.unbounded;
    if (a.unbounded) return a.positive_integral_Ns < b.positive_integral_Ns;
    return a.value < b.value;
  }
};

struct ThrustMetrics {
  ThrustRatio thrust_ratio;
  double average_thrust_N = 0.0;
  double positive_integral_Ns = 0.0;
  double negative_integral_Ns = 0.0;
};

constexpr double kDefaultTrEpsilonNs = 1e-9;

/// Mean of the samples in the whole post-transient cycles.
double average_thrust(const ThrustTrace& trace);

/// Rectangle-rule integral of positive samples over that of |negative|
/// samples, on the same window as average_thrust. Zero samples count toward
/// neither side.
ThrustRatio thrust_ratio(const ThrustTrace& trace, double epsilon_Ns = kDefaultTrEpsilonNs);

ThrustMetrics compute_metrics(const ThrustTrace& trace, double epsilon_Ns = kDefaultTrEpsilonNs);

/// average_thrust(full) / average_thrust(reference): the design ratio of a
/// flapped feather against its spine-only or root-only counterpart.
double normalized_design_ratio(const ThrustTrace& full, const ThrustTrace& reference);

/// `{design_id, controller, TR, avg_thrust_N, pos_int, neg_int, unbounded}`.
/// TR is null when unbounded.
nlohmann::json metrics_record(const std::string& design_id, const StrokeController& controller,
                              const ThrustMetrics& metrics);

}  // namespace feather
