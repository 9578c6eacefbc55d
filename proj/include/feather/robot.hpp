#pragma once

#include <iosfwd>
#include <vector>

#include "feather/controller.hpp"
#include "feather/geometry.hpp"
#include "feather/hydro.hpp"
#include "json.hpp"

namespace feather {

/// Rail-mounted robot body. Drag and friction values are modelling defaults,
/// not measurements.
struct RobotBody {
  double mass_kg = 0.5;
  double body_drag_coefficient = 1.0;
  double frontal_area_m2 = 0.003;
  double rail_friction_N = 0.05;

  void validate() const;
};

struct SwimConfig {
  double distance_m = 0.30;
  /// Runs slower than distance / time_cap never finish.
  double time_cap_s = 150.0;
  /// Trajectory samples are kept every this many integration steps.
  int sample_every = 50;
  int feathers = 2;

  void validate() const;
};

struct SwimTrace {
  std::vector<double> times_s;
  std::vector<double> position_m;
  std::vector<double> velocity_m_s;
  bool finished = false;
  double elapsed_s = 0.0;
  double distance_reached_m = 0.0;
  /// distance / elapsed when finished, otherwise distance reached / time cap.
  double average_velocity_m_s = 0.0;
};

/// Integrates m dv/dt = n T(t) - 1/2 rho Cd A v|v| - friction sign(v) along
/// the rail. Each step the feather simulation sees the body velocity as an
/// oncoming flow along its thrust axis.
SwimTrace swim(const RobotBody& body, const FeatherMesh& feather_mesh, const StrokeController& controller,
               const FluidConfig& fluid, const SimConfig& sim, const SwimConfig& config);

/// Writes `t_s,position_m,velocity_m_s` rows with a header.
void write_csv(std::ostream& os, const SwimTrace& trace);

nlohmann::json summary_json(const SwimTrace& trace);

void to_json(nlohmann::json& j, const RobotBody& b);
void from_json(const nlohmann::json& j, RobotBody& b);
void to_json(nlohmann::json& j, const SwimConfig& s);
void from_json(const nlohmann::json& j, SwimConfig& s);

}  // namespace feather
