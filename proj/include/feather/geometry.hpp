#pragma once

#include <Eigen/Core>
#include "json.hpp"
#include <string>
#include <vector>

namespace feather {

enum class FeatherKind { Plain, ChordwiseFlaps, SpanwiseFlaps };

std::string to_string(FeatherKind kind);
FeatherKind kind_from_string(const std::string& name);

/// Rectangular feather outline plus the sheet material it is cut from.
///
/// Span runs along +x from the actuated root, chord along y, and the sheet
/// normal is +z in the rest configuration.
struct FeatherGeometry {
  FeatherKind kind = FeatherKind::Plain;
  double length_m = 0.115;
  double width_m = 0.075;
  double spine_width_m = 0.01;   // ChordwiseFlaps only
  double root_length_m = 0.0;    // SpanwiseFlaps only
  double thickness_m = 0.0004;
  double material_density_kg_m3 = 905.0;

  /// Throws InvariantError when the geometry is not buildable.
  void validate() const;

  double sheet_area() const { return length_m * width_m; }
  double sheet_mass() const { return material_density_kg_m3 * sheet_area() * thickness_m; }
};

/// Width ratio WR = w / w_spine and length ratio LR = l / l_root.
struct RatioDescriptor {
  double width_ratio = 1.0;
  double length_ratio = 1.0;
};

RatioDescriptor ratio_of(const FeatherGeometry& geometry);

/// Joint stiffness and damping model for a polypropylene strip.
///
/// Two-way joints get the Euler-Bernoulli equivalent k = E (b t^3 / 12) / L of
/// the strip they replace. One-way hinges are nearly free in the folding
/// direction and hit a stiff penalty past the coplanar stop.
struct JointModel {
  double youngs_modulus_pa = 1.5e9;
  /// Stiffness-proportional damping c = beta * k (seconds).
  double damping_time_s = 2e-3;
  /// Free-direction stiffness of a one-way hinge as a fraction of the strip stiffness.
  double free_stiffness_fraction = 0.01;
  /// Hard-stop penalty stiffness as a multiple of the strip stiffness.
  double stop_stiffness_factor = 1e3;
  /// Damping time applied to the penalty spring while the stop is engaged.
  double stop_damping_time_s = 2e-3;
  /// Upper limit of the folding direction.
  double fold_limit_rad = 120.0 * 3.14159265358979323846 / 180.0;

  void validate() const;
};

/// Rigid rectangular plate. Pose is given in the rest configuration, where the
/// plate lies in the z = 0 plane with its normal along +z.
struct PlateElement {
  Eigen::Vector3d center_rest = Eigen::Vector3d::Zero();
  double size_x_m = 0.0;
  double size_y_m = 0.0;
  double thickness_m = 0.0;
  double area_m2 = 0.0;
  double volume_m3 = 0.0;
  double mass_kg = 0.0;
};

enum class JointKind { Root, Flexible, OneWay };

std::string to_string(JointKind kind);

/// Revolute joint attaching `child` to `parent` (-1 for the actuated base).
///
/// Positive angles of one-way hinges fold the child toward -z of its parent.
struct Joint {
  JointKind kind = JointKind::Flexible;
  int parent = -1;
  int child = 0;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitY();
  Eigen::Vector3d anchor_rest = Eigen::Vector3d::Zero();
  double stiffness_Nm_rad = 0.0;
  double damping_Nms_rad = 0.0;
  double lower_limit_rad = 0.0;
  double upper_limit_rad = 0.0;
  double stop_stiffness_Nm_rad = 0.0;
  double stop_damping_Nms_rad = 0.0;

  bool one_way() const { return kind == JointKind::OneWay; }
};

/// Plate-element chain/tree. Joint j always has child element j, and parents
/// precede children, so index order is a valid topological order.
struct FeatherMesh {
  FeatherGeometry geometry;
  std::vector<PlateElement> elements;
  std::vector<Joint> joints;
  int root_joint_index = 0;

  double total_area() const;
  double total_mass() const;
  double total_volume() const;
  std::vector<int> one_way_joints() const;
};

constexpr int kDefaultSpanwiseElements = 8;

/// Discretizes `geometry` into `spanwise_elements` stations.
///
/// Plain: a single chain joined by flexible joints. ChordwiseFlaps: a spine
/// chain with one flap panel per station and side, each on a one-way hinge
/// along the spine edge. SpanwiseFlaps: a chain whose joint closest to
/// l_root is a one-way hinge.
FeatherMesh build_mesh(const FeatherGeometry& geometry, int spanwise_elements = kDefaultSpanwiseElements,
                       const JointModel& joint_model = {});

/// Spanwise position of the one-way hinge (SpanwiseFlaps meshes only).
double spanwise_hinge_position(const FeatherMesh& mesh);

nlohmann::json to_json(const FeatherMesh& mesh);
void to_json(nlohmann::json& j, const FeatherGeometry& geometry);
void from_json(const nlohmann::json& j, FeatherGeometry& geometry);
void to_json(nlohmann::json& j, const JointModel& model);
void from_json(const nlohmann::json& j, JointModel& model);

}  // namespace feather
