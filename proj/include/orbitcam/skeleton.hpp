#pragma once

#include <Eigen/Core>
#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace orbitcam {

// The 13-joint body representation. The set is closed: every pose carries
// exactly these joints, in this order.
enum class JointId : int {
    head = 0,
    spine_shoulder,
    spine_base,
    l_shoulder,
    r_shoulder,
    l_elbow,
    r_elbow,
    l_hand,
    r_hand,
    l_knee,
    r_knee,
    l_foot,
    r_foot,
};

inline constexpr int kJointCount = 13;

const std::array<std::string_view, kJointCount>& joint_names();
std::string_view joint_name(JointId id);
std::optional<JointId> joint_from_name(std::string_view name);

// One timestamped pose. Positions are meters in the world frame
// (x,y horizontal ground plane, z up).
struct SkeletonFrame {
    double t = 0.0;
    std::array<Eigen::Vector3d, kJointCount> joints{};

    Eigen::Vector3d& operator[](JointId id) { return joints[static_cast<int>(id)]; }
    const Eigen::Vector3d& operator[](JointId id) const { return joints[static_cast<int>(id)]; }

    // Unweighted mean of the 13 joints.
    Eigen::Vector3d centroid() const;

    bool all_finite() const;
};

// An ordered sequence of poses. Timestamps must be strictly increasing;
// spacing becomes uniform after resample().
struct MotionClip {
    std::vector<SkeletonFrame> frames;
    double rate_hz = 0.0;

    double start_time() const { return frames.front().t; }
    double end_time() const { return frames.back().t; }
    double duration() const { return end_time() - start_time(); }

    // Linear interpolation at time t. Throws std::out_of_range outside
    // [start_time, end_time] (with a small slack for roundoff).
    SkeletonFrame sample(double t) const;

    // Throws std::invalid_argument on any structural violation
    // (< 2 frames, non-increasing timestamps, non-finite values).
    void validate() const;
};

// Linear-interpolation resample to a uniform grid at (approximately)
// target_hz. First and last timestamps are preserved exactly; the actual
// spacing is duration/(n-1) with n chosen nearest to the target rate.
MotionClip resample(const MotionClip& clip, double target_hz);

}  // namespace orbitcam
