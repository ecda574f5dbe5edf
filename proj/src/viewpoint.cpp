#include "orbitcam/viewpoint.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "orbitcam/angles.hpp"

namespace orbitcam {

SubjectState subject_state(const MotionClip& clip, double t, double window) {
    if (window <= 0.0) throw std::invalid_argument("window must be positive");
    // sample() rejects endpoints outside the clip range.
    const SkeletonFrame now = clip.sample(t);
    const SkeletonFrame past = clip.sample(t - window);

    const Eigen::Vector3d c_now = now.centroid();
    const Eigen::Vector3d c_past = past.centroid();

    SubjectState state;
    state.centroid_xy = c_now.head<2>();
    state.centroid_z = c_now.z();
    state.velocity_xy = (c_now.head<2>() - c_past.head<2>()) / window;
    state.window = window;
    return state;
}

std::string_view descriptor_name(Descriptor d) {
    return d == Descriptor::velocity_perp ? "velocity_perp" : "projection_area";
}

double q_velocity_perp(double azimuth_deg, const Eigen::Vector2d& velocity_xy) {
    if (velocity_xy.squaredNorm() == 0.0) {
        throw std::invalid_argument("velocity-perpendicular descriptor needs nonzero velocity");
    }
    const double phi = rad2deg(std::atan2(velocity_xy.y(), velocity_xy.x()));
    return 1.0 - std::abs(wrap90(azimuth_deg - (phi + 90.0))) / 90.0;
}

double q_projection_area(double azimuth_deg, const SkeletonFrame& frame) {
    // View plane basis: horizontal perpendicular of the view direction, and
    // world z. Projection is orthographic, so opposite azimuths mirror the
    // coordinates and the scatter is 180-degree periodic by construction.
    const double a = deg2rad(azimuth_deg);
    const Eigen::Vector3d u_axis(-std::sin(a), std::cos(a), 0.0);

    double mean_u = 0.0, mean_v = 0.0;
    std::array<double, kJointCount> us{}, vs{};
    for (int i = 0; i < kJointCount; ++i) {
        us[i] = frame.joints[i].dot(u_axis);
        vs[i] = frame.joints[i].z();
        mean_u += us[i];
        mean_v += vs[i];
    }
    mean_u /= kJointCount;
    mean_v /= kJointCount;

    double var = 0.0;
    for (int i = 0; i < kJointCount; ++i) {
        var += (us[i] - mean_u) * (us[i] - mean_u) + (vs[i] - mean_v) * (vs[i] - mean_v);
    }
    return var / kJointCount;
}

int QualityMap::nearest_index(double azimuth_deg) const {
    const int n = size();
    const double bin = 360.0 / n;
    const auto idx = static_cast<long>(std::lround(wrap360(azimuth_deg) / bin));
    return static_cast<int>(idx % n);
}

std::vector<int> QualityMap::maximizer_indices() const {
    double max = values.front();
    for (double v : values) max = std::max(max, v);
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        if (max - values[i] <= 1e-12) out.push_back(i);
    }
    return out;
}

Descriptor select_descriptor(double speed_mps, double threshold_mps, double hysteresis_frac,
                             std::optional<Descriptor> previous) {
    if (hysteresis_frac > 0.0 && previous.has_value()) {
        const double lo = threshold_mps * (1.0 - hysteresis_frac);
        const double hi = threshold_mps * (1.0 + hysteresis_frac);
        if (*previous == Descriptor::velocity_perp) {
            return speed_mps < lo ? Descriptor::projection_area : Descriptor::velocity_perp;
        }
        return speed_mps >= hi ? Descriptor::velocity_perp : Descriptor::projection_area;
    }
    return speed_mps < threshold_mps ? Descriptor::projection_area : Descriptor::velocity_perp;
}

QualityMap quality_map(const SkeletonFrame& frame, const SubjectState& state,
                       double threshold_mps, int n_samples) {
    return quality_map(frame, state, select_descriptor(state.speed(), threshold_mps),
                       n_samples);
}

QualityMap quality_map(const SkeletonFrame& frame, const SubjectState& state,
                       Descriptor descriptor, int n_samples) {
    if (n_samples < 4) throw std::invalid_argument("quality map needs at least 4 samples");

    QualityMap map;
    map.active = descriptor;
    map.values.resize(n_samples);
    const double bin = 360.0 / n_samples;

    if (descriptor == Descriptor::velocity_perp) {
        for (int i = 0; i < n_samples; ++i) {
            map.values[i] = q_velocity_perp(i * bin, state.velocity_xy);
        }
        return map;
    }

    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        map.values[i] = q_projection_area(i * bin, frame);
        if (i == 0) {
            lo = hi = map.values[0];
        } else {
            lo = std::min(lo, map.values[i]);
            hi = std::max(hi, map.values[i]);
        }
    }
    if (hi - lo <= 0.0) {
        // Degenerate frame: no azimuth preference.
        for (double& v : map.values) v = 1.0;
    } else {
        for (double& v : map.values) v = (v - lo) / (hi - lo);
    }
    return map;
}

double global_optimum(const QualityMap& map, double current_azimuth_deg) {
    const int n = map.size();
    int best = 0;
    for (int i = 1; i < n; ++i) {
        if (map.values[i] > map.values[best]) {
            best = i;
        } else if (map.values[i] == map.values[best]) {
            const double di = angular_distance(map.azimuth_of(i), current_azimuth_deg);
            const double db = angular_distance(map.azimuth_of(best), current_azimuth_deg);
            // Equal-value tie: nearer to the current azimuth wins, then the
            // smaller azimuth (i > best, so keep best on a second tie).
            if (di < db) best = i;
        }
    }
    return map.azimuth_of(best);
}

void write_quality_csv(const QualityMap& map, std::ostream& out) {
    out << "azimuth_deg,quality,active_descriptor\n";
    char buf[64];
    for (int i = 0; i < map.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g,", map.azimuth_of(i), map.values[i]);
        out << buf << descriptor_name(map.active) << '\n';
    }
}

}  // namespace orbitcam
