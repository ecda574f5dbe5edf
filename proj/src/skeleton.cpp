#include "orbitcam/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orbitcam {

const std::array<std::string_view, kJointCount>& joint_names() {
    static const std::array<std::string_view, kJointCount> names = {
        "head",    "spine_shoulder", "spine_base", "l_shoulder", "r_shoulder",
        "l_elbow", "r_elbow",        "l_hand",     "r_hand",     "l_knee",
        "r_knee",  "l_foot",         "r_foot",
    };
    return names;
}

std::string_view joint_name(JointId id) { return joint_names()[static_cast<int>(id)]; }

std::optional<JointId> joint_from_name(std::string_view name) {
    const auto& names = joint_names();
    for (int i = 0; i < kJointCount; ++i) {
        if (names[i] == name) return static_cast<JointId>(i);
    }
    return std::nullopt;
}

Eigen::Vector3d SkeletonFrame::centroid() const {
    Eigen::Vector3d sum = Eigen::Vector3d::Zero();
    for (const auto& p : joints) sum += p;
    return sum / static_cast<double>(kJointCount);
}

bool SkeletonFrame::all_finite() const {
    if (!std::isfinite(t)) return false;
    for (const auto& p : joints) {
        if (!p.allFinite()) return false;
    }
    return true;
}

SkeletonFrame MotionClip::sample(double t) const {
    if (frames.empty()) throw std::invalid_argument("cannot sample an empty clip");
    const double slack = 1e-9;
    if (t < start_time() - slack || t > end_time() + slack) {
        throw std::out_of_range("sample time " + std::to_string(t) + " outside clip range [" +
                                std::to_string(start_time()) + ", " +
                                std::to_string(end_time()) + "]");
    }
    t = std::clamp(t, start_time(), end_time());
    if (frames.size() == 1) return frames.front();

    // First frame with timestamp > t; interpolate against its predecessor.
    auto it = std::upper_bound(frames.begin(), frames.end(), t,
                               [](double v, const SkeletonFrame& f) { return v < f.t; });
    if (it == frames.begin()) return frames.front();
    if (it == frames.end()) return frames.back();
    const SkeletonFrame& a = *(it - 1);
    const SkeletonFrame& b = *it;
    const double w = (t - a.t) / (b.t - a.t);

    SkeletonFrame out;
    out.t = t;
    for (int i = 0; i < kJointCount; ++i) {
        out.joints[i] = (1.0 - w) * a.joints[i] + w * b.joints[i];
    }
    return out;
}

void MotionClip::validate() const {
    if (frames.size() < 2) throw std::invalid_argument("motion clip needs at least 2 frames");
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (!frames[i].all_finite()) {
            throw std::invalid_argument("non-finite value in frame " + std::to_string(i));
        }
        if (i > 0 && frames[i].t <= frames[i - 1].t) {
            throw std::invalid_argument("non-increasing timestamp at frame " +
                                        std::to_string(i));
        }
    }
}

MotionClip resample(const MotionClip& clip, double target_hz) {
    clip.validate();
    if (target_hz <= 0.0) throw std::invalid_argument("target rate must be positive");

    const double t0 = clip.start_time();
    const double t1 = clip.end_time();
    const double span = t1 - t0;
    const auto n = static_cast<std::size_t>(std::lround(span * target_hz)) + 1;
    const std::size_t count = std::max<std::size_t>(n, 2);
    const double dt = span / static_cast<double>(count - 1);

    MotionClip out;
    out.frames.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = (i + 1 == count) ? t1 : t0 + dt * static_cast<double>(i);
        SkeletonFrame f = clip.sample(t);
        f.t = t;
        out.frames.push_back(std::move(f));
    }
    out.rate_hz = 1.0 / dt;
    return out;
}

}  // namespace orbitcam
