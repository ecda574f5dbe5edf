#include "orbitcam/planner.hpp"

#include <algorithm>
#include <stdexcept>

#include "orbitcam/angles.hpp"

namespace orbitcam {

bool ActionRegion::contains(double azimuth_deg, double tol_deg) const {
    return angular_distance(azimuth_deg, center_azimuth_deg) <= half_width_deg + tol_deg;
}

ActionRegion action_region(double current_azimuth_deg, double v_max, double cycle_s,
                           double radius) {
    if (v_max < 0.0) throw std::invalid_argument("v_max must be non-negative");
    if (cycle_s <= 0.0) throw std::invalid_argument("cycle must be positive");
    if (radius <= 0.0) throw std::invalid_argument("radius must be positive");

    ActionRegion region;
    region.center_azimuth_deg = wrap360(current_azimuth_deg);
    region.s_dec = 0.5 * v_max * cycle_s;
    region.s_acc = 0.5 * v_max * cycle_s;
    region.v_max = v_max;
    region.cycle_s = cycle_s;
    region.radius = radius;
    region.half_width_deg =
        std::min(180.0, rad2deg((region.s_dec + region.s_acc) / radius));
    return region;
}

double local_search(const QualityMap& map, const ActionRegion& region,
                    double start_azimuth_deg) {
    const int n = map.size();
    int idx = map.nearest_index(start_azimuth_deg);
    // A degenerate region can exclude even the snapped start sample; the
    // drone then stays where it is.
    if (!region.contains(map.azimuth_of(idx))) return wrap360(start_azimuth_deg);

    for (int step = 0; step < n; ++step) {
        const int up = (idx + 1) % n;
        const int down = (idx + n - 1) % n;
        int next = idx;
        double best = map.values[idx];
        if (region.contains(map.azimuth_of(up)) && map.values[up] > best) {
            best = map.values[up];
            next = up;
        }
        if (region.contains(map.azimuth_of(down)) && map.values[down] > best) {
            best = map.values[down];
            next = down;
        }
        if (next == idx) break;
        idx = next;
    }
    return map.azimuth_of(idx);
}

double smooth(double prev_azimuth_deg, double target_azimuth_deg, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must be in [0, 1]");
    if (alpha == 0.0) return wrap360(prev_azimuth_deg);
    if (alpha == 1.0) return wrap360(target_azimuth_deg);
    const double step = alpha * wrap180(target_azimuth_deg - prev_azimuth_deg);
    return wrap360(prev_azimuth_deg + step);
}

Waypoint plan_step(const SkeletonFrame& frame, const SubjectState& state,
                   double drone_azimuth_deg, const Waypoint& prev_waypoint,
                   const PlannerConfig& config, double t_command) {
    const QualityMap map =
        quality_map(frame, state, config.speed_threshold, config.n_samples);
    const ActionRegion region =
        action_region(drone_azimuth_deg, config.v_max, config.cycle_s, config.radius);
    const double local = local_search(map, region, drone_azimuth_deg);
    Waypoint wp;
    wp.azimuth_deg = smooth(prev_waypoint.azimuth_deg, local, config.alpha);
    wp.radius = config.radius;
    wp.height = config.height;
    wp.t_command = t_command;
    return wp;
}

}  // namespace orbitcam
