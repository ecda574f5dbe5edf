#pragma once

#include <optional>
#include <string_view>

#include "orbitcam/skeleton.hpp"

namespace orbitcam {

enum class SynthKind { straight_walk, circle_walk, in_place_wave, static_tpose };

std::optional<SynthKind> synth_kind_from_name(std::string_view name);
std::string_view synth_kind_name(SynthKind kind);

struct SynthParams {
    double speed = 1.0;           // m/s, straight_walk
    double heading_deg = 0.0;     // walk direction, straight_walk
    double circle_radius = 2.0;   // m, circle_walk
    double period = 8.0;          // s per revolution, circle_walk
    double wave_hz = 0.5;         // arm oscillation, in_place_wave
    double wave_amplitude = 0.4;  // m, in_place_wave
};

// Canonical standing T-pose: feet on the ground plane, arms spanning the
// x axis, facing +y, centroid on the z axis.
SkeletonFrame tpose(double t = 0.0);

// Deterministic analytic test clips; no randomness involved.
MotionClip synth_clip(SynthKind kind, const SynthParams& params, double duration_s,
                      double rate_hz);

}  // namespace orbitcam
