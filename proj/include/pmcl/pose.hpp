#pragma once

#include <Eigen/Geometry>

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace pmcl {

/// Rigid transform from the object frame to the camera frame.
struct Pose {
  Eigen::Vector3d translation{0.0, 0.0, 0.0};
  Eigen::Quaterniond rotation{1.0, 0.0, 0.0, 0.0};  // (w, x, y, z)

  void validate() const {
    if (std::abs(rotation.norm() - 1.0) > 1e-9)
      throw std::invalid_argument("pose quaternion must be unit length");
  }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return rotation * p + translation; }

  /// The object z-axis expressed in the camera frame.
  Eigen::Vector3d z_axis() const { return rotation * Eigen::Vector3d::UnitZ(); }
};

inline nlohmann::json pose_to_json(const Pose& pose) {
  return nlohmann::json{
      {"translation", {pose.translation.x(), pose.translation.y(), pose.translation.z()}},
      {"quaternion",
       {pose.rotation.w(), pose.rotation.x(), pose.rotation.y(), pose.rotation.z()}}};
}

inline Pose pose_from_json(const nlohmann::json& j) {
  Pose pose;
  const auto& t = j.at("translation");
  const auto& q = j.at("quaternion");
  if (t.size() != 3 || q.size() != 4)
    throw std::invalid_argument("pose json: translation needs 3 values, quaternion needs 4 (w,x,y,z)");
  pose.translation = Eigen::Vector3d(t[0].get<double>(), t[1].get<double>(), t[2].get<double>());
  pose.rotation = Eigen::Quaterniond(q[0].get<double>(), q[1].get<double>(), q[2].get<double>(),
                                     q[3].get<double>());
  pose.rotation.normalize();
  return pose;
}

}  // namespace pmcl
