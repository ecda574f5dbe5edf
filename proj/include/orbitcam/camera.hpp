#pragma once

#include <Eigen/Core>
#include <optional>

#include "orbitcam/skeleton.hpp"

namespace orbitcam {

struct Intrinsics {
    int width_px = 1280;
    int height_px = 720;
    double hfov_deg = 66.0;

    // Focal length in pixels (square pixels; vfov follows from aspect).
    double focal_px() const;
};

// Position plus yaw/pitch orientation, z-up world. Yaw is measured from +x
// about z; pitch is positive looking up. Zero roll.
struct CameraPose {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
    double yaw_deg = 0.0;
    double pitch_deg = 0.0;

    Eigen::Vector3d forward() const;
    Eigen::Vector3d right() const;
    Eigen::Vector3d up() const;
};

// Yaw/pitch placing target on the optical axis. For a target straight
// above/below the camera the yaw is kept at fallback_yaw_deg and pitch
// saturates at +-90.
std::pair<double, double> aim_at(const Eigen::Vector3d& camera_position,
                                 const Eigen::Vector3d& target_point,
                                 double fallback_yaw_deg = 0.0);

struct PixelPoint {
    double u = 0.0;
    double v = 0.0;
};

// Pinhole projection with the principal point at (W/2, H/2). Returns
// nullopt for points at or behind the camera plane.
std::optional<PixelPoint> project(const Eigen::Vector3d& point, const CameraPose& pose,
                                  const Intrinsics& intrinsics);

// Pixel offset of the projected joint centroid (the detection-mask proxy)
// from the image center. nullopt when the centroid is behind the camera.
std::optional<Eigen::Vector2d> screen_error(const SkeletonFrame& frame,
                                            const CameraPose& pose,
                                            const Intrinsics& intrinsics);

}  // namespace orbitcam
