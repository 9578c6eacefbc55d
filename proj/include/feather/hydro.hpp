#pragma once

#include <Eigen/Core>
#include <Eigen/Cholesky>
#include <iosfwd>
#include <string>
#include <vector>

#include "feather/controller.hpp"
#include "feather/geometry.hpp"
#include "json.hpp"

namespace feather {

struct FluidConfig {
  double fluid_density_kg_m3 = 1000.0;
  double drag_coefficient = 1.28;
  double added_mass_coefficient = 1.0;
  double gravity_m_s2 = 9.81;

  void validate() const;
};

struct SimConfig {
  double dt_s = 2e-4;
  int cycles = 3;
  int transient_cycles = 1;
  /// Any joint speed above this aborts the run as unstable.
  double max_joint_speed_rad_s = 2000.0;

  void validate() const;
};

/// Root thrust samples. Sample k covers the step ((k) dt, (k+1) dt] and is
/// stamped at its end time.
struct ThrustTrace {
  std::vector<double> times_s;
  std::vector<double> thrust_N;
  double period_s = 0.0;
  double dt_s = 0.0;
  /// Index of the first sample of each cycle, plus a final end sentinel.
  std::vector<std::size_t> cycle_boundaries;
  int transient_cycles = 0;

  std::size_t size() const { return thrust_N.size(); }
  int cycles() const { return cycle_boundaries.empty() ? 0 : static_cast<int>(cycle_boundaries.size()) - 1; }
  /// Half-open sample range of the whole post-transient cycles.
  std::pair<std::size_t, std::size_t> metrics_window() const;
  int cycle_of(std::size_t sample) const;

  /// Builds a trace from uniformly spaced samples; cycles are derived from
  /// period and dt.
  static ThrustTrace from_samples(std::vector<double> thrust, double dt_s, double period_s, int transient_cycles);
};

/// Writes `t_s,thrust_N,cycle_index` rows with a header.
void write_csv(std::ostream& os, const ThrustTrace& trace);

/// Lumped kinematic state of one plate element, relative to still fluid.
struct ElementKinematics {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Vector3d normal = Eigen::Vector3d::UnitZ();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
  double normal_acceleration = 0.0;
  double area_m2 = 0.0;
  double volume_m3 = 0.0;
  double mass_kg = 0.0;
};

/// Gravity, buoyancy, quasi-steady normal drag and added-mass reaction.
struct ExternalForce {
  Eigen::Vector3d gravity = Eigen::Vector3d::Zero();
  Eigen::Vector3d buoyancy = Eigen::Vector3d::Zero();
  Eigen::Vector3d hydrodynamic = Eigen::Vector3d::Zero();
  Eigen::Vector3d added_mass = Eigen::Vector3d::Zero();

  Eigen::Vector3d total() const { return gravity + buoyancy + hydrodynamic + added_mass; }
};

ExternalForce external_force(const ElementKinematics& state, const FluidConfig& fluid);

struct SimOptions {
  /// Gravity and buoyancy act along the thrust axis (+z). Disabled for
  /// rail-mounted swimming where the thrust axis is horizontal.
  bool hydrostatics = true;
  double max_joint_speed_rad_s = 2000.0;
};

/// Fixed-step simulator for a feather mesh with prescribed root pitch.
///
/// Joint coordinates advance with semi-implicit Euler: velocities first, then
/// positions with the new velocities. Joint springs, dampers, hard-stop
/// penalties, quasi-steady drag and added mass enter the velocity update
/// linearly implicitly, which keeps the stiff stop penalty and the light
/// plates stable at millisecond-scale steps.
class FeatherSimulator {
 public:
  FeatherSimulator(FeatherMesh mesh, FluidConfig fluid, SimOptions options = {});

  /// Puts the feather at rest, flat, with the given root angle.
  void reset(double root_angle_rad);

  /// Advances one step while driving the root to `next_root_angle_rad`.
  /// Returns the upward root reaction (thrust) over the step.
  double step(double dt, double next_root_angle_rad);

  /// Fluid velocity relative to the feather base frame (robot swimming).
  void set_ambient_flow(const Eigen::Vector3d& flow) { ambient_flow_ = flow; }

  const FeatherMesh& mesh() const { return mesh_; }
  long steps_taken() const { return steps_; }
  const Eigen::VectorXd& joint_angles() const { return q_; }
  const Eigen::VectorXd& joint_speeds() const { return u_; }

  /// Angles of the one-way hinges, in mesh joint order.
  std::vector<double> fold_angles() const;
  double kinetic_energy() const;
  /// Kinetic energy of the plates and of the entrained fluid plus elastic,
  /// stop-penalty and hydrostatic potential energy.
  double mechanical_energy() const;
  /// Current element centroid positions (world frame).
  std::vector<Eigen::Vector3d> element_positions() const;

 private:
  using Vec6 = Eigen::Matrix<double, 6, 1>;
  using Mat6 = Eigen::Matrix<double, 6, 6>;

  struct Kinematics {
    std::vector<Eigen::Matrix3d> rot;
    std::vector<Eigen::Vector3d> pos, centroid, normal, axis, anchor, centroid_vel;
    std::vector<Vec6> S, V;
    std::vector<Mat6> I;
  };

  void compute_kinematics(const Eigen::VectorXd& q, const Eigen::VectorXd& u, Kinematics& k) const;
  Kinematics current_kinematics() const;
  void compute_joint_torques();
  // Forward/backward Newton-Euler pass over the current kinematics. Leaves
  // per-body spatial forces in F_ (accumulated toward the root when
  // `accumulate` is set).
  void newton_euler(const Eigen::VectorXd& qdd, bool accumulate);

  FeatherMesh mesh_;
  FluidConfig fluid_;
  SimOptions options_;
  Eigen::Vector3d ambient_flow_ = Eigen::Vector3d::Zero();

  int n_ = 0;
  std::vector<int> parent_;
  std::vector<std::vector<int>> ancestors_;  // self first, then up to the root
  std::vector<Eigen::Matrix3d> inertia_rest_;
  std::vector<double> added_mass_;

  Eigen::VectorXd q_, u_;
  long steps_ = 0;

  // Workspace, refreshed each step.
  Kinematics kin_;
  std::vector<Vec6> A_, F_, f_ext_;
  std::vector<Mat6> Ic_;
  std::vector<Eigen::VectorXd> jn_;  // per element: normal-velocity Jacobian over ancestors_
  std::vector<double> drag_rate_;
  Eigen::VectorXd tau_, bias_, k_eff_, c_eff_, qdd_, rhs_, du_;
  Eigen::MatrixXd H_;
  Eigen::LDLT<Eigen::MatrixXd> ldlt_;
};

/// Runs `sim.cycles` stroke periods from rest and records the root thrust.
ThrustTrace simulate(const FeatherMesh& mesh, const StrokeController& controller, const FluidConfig& fluid,
                     const SimConfig& sim, const SimOptions& options = {});

/// One-way hinge angles of a running simulation (empty for plain feathers).
std::vector<double> fold_state(const FeatherSimulator& simulator);

void to_json(nlohmann::json& j, const FluidConfig& f);
void from_json(const nlohmann::json& j, FluidConfig& f);
void to_json(nlohmann::json& j, const SimConfig& s);
void from_json(const nlohmann::json& j, SimConfig& s);

}  // namespace feather
