#include "orbitcam/camera.hpp"

#include <cmath>

#include "orbitcam/angles.hpp"

namespace orbitcam {

double Intrinsics::focal_px() const {
    return 0.5 * width_px / std::tan(0.5 * deg2rad(hfov_deg));
}

Eigen::Vector3d CameraPose::forward() const {
    const double cy = std::cos(deg2rad(yaw_deg));
    const double sy = std::sin(deg2rad(yaw_deg));
    const double cp = std::cos(deg2rad(pitch_deg));
    const double sp = std::sin(deg2rad(pitch_deg));
    return {cy * cp, sy * cp, sp};
}

Eigen::Vector3d CameraPose::right() const {
    // Horizontal regardless of pitch (zero roll).
    const double cy = std::cos(deg2rad(yaw_deg));
    const double sy = std::sin(deg2rad(yaw_deg));
    return {sy, -cy, 0.0};
}

Eigen::Vector3d CameraPose::up() const { return right().cross(forward()); }

std::pair<double, double> aim_at(const Eigen::Vector3d& camera_position,
                                 const Eigen::Vector3d& target_point,
                                 double fallback_yaw_deg) {
    const Eigen::Vector3d d = target_point - camera_position;
    const double horizontal = std::hypot(d.x(), d.y());
    if (horizontal == 0.0) {
        return {fallback_yaw_deg, d.z() >= 0.0 ? 90.0 : -90.0};
    }
    const double yaw = rad2deg(std::atan2(d.y(), d.x()));
    const double pitch = rad2deg(std::atan2(d.z(), horizontal));
    return {yaw, pitch};
}

std::optional<PixelPoint> project(const Eigen::Vector3d& point, const CameraPose& pose,
                                  const Intrinsics& intrinsics) {
    const Eigen::Vector3d v = point - pose.position;
    const double depth = v.dot(pose.forward());
    if (depth <= 0.0) return std::nullopt;
    const double f = intrinsics.focal_px();
    PixelPoint px;
    px.u = 0.5 * intrinsics.width_px + f * v.dot(pose.right()) / depth;
    px.v = 0.5 * intrinsics.height_px - f * v.dot(pose.up()) / depth;
    return px;
}

std::optional<Eigen::Vector2d> screen_error(const SkeletonFrame& frame,
                                            const CameraPose& pose,
                                            const Intrinsics& intrinsics) {
    const auto px = project(frame.centroid(), pose, intrinsics);
    if (!px) return std::nullopt;
    return Eigen::Vector2d(px->u - 0.5 * intrinsics.width_px,
                           px->v - 0.5 * intrinsics.height_px);
}

}  // namespace orbitcam
