#pragma once

#include "orbitcam/viewpoint.hpp"

namespace orbitcam {

// The azimuth arc reachable within one command cycle, made of the
// deceleration and acceleration flight distances. Always satisfies
// 0 <= s_dec <= s_acc <= v_max * cycle_s.
struct ActionRegion {
    double center_azimuth_deg = 0.0;
    double half_width_deg = 0.0;
    double s_dec = 0.0;     // m
    double s_acc = 0.0;     // m
    double v_max = 0.0;     // m/s
    double cycle_s = 0.0;   // command cycle T, s
    double radius = 0.0;    // orbit radius, m

    bool contains(double azimuth_deg, double tol_deg = 1e-9) const;
};

// s_dec = s_acc = v_max * T / 2; the arc spans (s_dec + s_acc)/radius
// radians on each side of the current azimuth, clamped to 180 degrees.
ActionRegion action_region(double current_azimuth_deg, double v_max, double cycle_s,
                           double radius);

// Discrete hill-climb on the sampled map, one sample per step toward the
// higher-valued neighbor, never leaving the region. Terminates at a sample
// whose in-region neighbors are not strictly greater, or at the region
// boundary. start_azimuth_deg must lie inside the region.
double local_search(const QualityMap& map, const ActionRegion& region,
                    double start_azimuth_deg);

// Exponential waypoint smoothing on the shortest arc:
//   P_t = P_{t-1} + alpha * wrap180(D_t - P_{t-1}),
// normalized to [0, 360). alpha in [0, 1]; 0 holds the previous waypoint,
// 1 jumps to the target.
double smooth(double prev_azimuth_deg, double target_azimuth_deg, double alpha);

struct Waypoint {
    double azimuth_deg = 0.0;
    double radius = 0.0;    // m
    double height = 0.0;    // m above ground plane
    double t_command = 0.0; // s
};

struct PlannerConfig {
    double v_max = 2.0;
    double cycle_s = 0.5;
    double alpha = 0.6;
    double speed_threshold = 0.2;
    double radius = 2.5;
    double height = 2.2;
    int n_samples = 360;
};

// One planning cycle: quality map -> action region around the drone ->
// local search -> smoothing against the previous waypoint.
Waypoint plan_step(const SkeletonFrame& frame, const SubjectState& state,
                   double drone_azimuth_deg, const Waypoint& prev_waypoint,
                   const PlannerConfig& config, double t_command);

}  // namespace orbitcam
