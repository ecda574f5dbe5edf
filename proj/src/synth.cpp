#include "orbitcam/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orbitcam/angles.hpp"

namespace orbitcam {

std::optional<SynthKind> synth_kind_from_name(std::string_view name) {
    if (name == "straight_walk") return SynthKind::straight_walk;
    if (name == "circle_walk") return SynthKind::circle_walk;
    if (name == "in_place_wave") return SynthKind::in_place_wave;
    if (name == "static_tpose") return SynthKind::static_tpose;
    return std::nullopt;
}

std::string_view synth_kind_name(SynthKind kind) {
    switch (kind) {
        case SynthKind::straight_walk: return "straight_walk";
        case SynthKind::circle_walk: return "circle_walk";
        case SynthKind::in_place_wave: return "in_place_wave";
        case SynthKind::static_tpose: return "static_tpose";
    }
    return "?";
}

SkeletonFrame tpose(double t) {
    SkeletonFrame f;
    f.t = t;
    f[JointId::head] = {0.0, 0.0, 1.70};
    f[JointId::spine_shoulder] = {0.0, 0.0, 1.45};
    f[JointId::spine_base] = {0.0, 0.0, 0.95};
    f[JointId::l_shoulder] = {0.20, 0.0, 1.45};
    f[JointId::r_shoulder] = {-0.20, 0.0, 1.45};
    f[JointId::l_elbow] = {0.50, 0.0, 1.45};
    f[JointId::r_elbow] = {-0.50, 0.0, 1.45};
    f[JointId::l_hand] = {0.80, 0.0, 1.45};
    f[JointId::r_hand] = {-0.80, 0.0, 1.45};
    f[JointId::l_knee] = {0.10, 0.0, 0.50};
    f[JointId::r_knee] = {-0.10, 0.0, 0.50};
    f[JointId::l_foot] = {0.10, 0.0, 0.05};
    f[JointId::r_foot] = {-0.10, 0.0, 0.05};
    return f;
}

namespace {

SkeletonFrame rotate_about_z(const SkeletonFrame& frame, double angle_deg) {
    const double c = std::cos(deg2rad(angle_deg));
    const double s = std::sin(deg2rad(angle_deg));
    SkeletonFrame out = frame;
    for (auto& p : out.joints) {
        const double x = p.x();
        const double y = p.y();
        p.x() = c * x - s * y;
        p.y() = s * x + c * y;
    }
    return out;
}

SkeletonFrame translate(const SkeletonFrame& frame, const Eigen::Vector3d& offset) {
    SkeletonFrame out = frame;
    for (auto& p : out.joints) p += offset;
    return out;
}

SkeletonFrame pose_at(SynthKind kind, const SynthParams& params, double t) {
    switch (kind) {
        case SynthKind::static_tpose:
            return tpose(t);
        case SynthKind::straight_walk: {
            const Eigen::Vector3d step(params.speed * t * std::cos(deg2rad(params.heading_deg)),
                                       params.speed * t * std::sin(deg2rad(params.heading_deg)),
                                       0.0);
            SkeletonFrame f = translate(rotate_about_z(tpose(), params.heading_deg - 90.0), step);
            f.t = t;
            return f;
        }
        case SynthKind::circle_walk: {
            // Walks the circle counterclockwise, facing the tangent.
            const double psi = 360.0 * t / params.period;
            const Eigen::Vector3d center(params.circle_radius * std::cos(deg2rad(psi)),
                                         params.circle_radius * std::sin(deg2rad(psi)), 0.0);
            SkeletonFrame f = translate(rotate_about_z(tpose(), psi), center);
            f.t = t;
            return f;
        }
        case SynthKind::in_place_wave: {
            SkeletonFrame f = tpose(t);
            const double w = params.wave_amplitude * std::sin(2.0 * kPi * params.wave_hz * t);
            f[JointId::l_hand].y() += w;
            f[JointId::l_elbow].y() += 0.5 * w;
            return f;
        }
    }
    throw std::invalid_argument("unknown synth kind");
}

}  // namespace

MotionClip synth_clip(SynthKind kind, const SynthParams& params, double duration_s,
                      double rate_hz) {
    if (duration_s <= 0.0) throw std::invalid_argument("duration must be positive");
    if (rate_hz <= 0.0) throw std::invalid_argument("rate must be positive");

    const auto n = static_cast<std::size_t>(std::floor(duration_s * rate_hz)) + 1;
    const std::size_t count = std::max<std::size_t>(n, 2);

    MotionClip clip;
    clip.rate_hz = rate_hz;
    clip.frames.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        clip.frames.push_back(pose_at(kind, params, static_cast<double>(i) / rate_hz));
    }
    return clip;
}

}  // namespace orbitcam
