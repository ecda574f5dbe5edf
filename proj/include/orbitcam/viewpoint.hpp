#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "orbitcam/skeleton.hpp"

namespace orbitcam {

// Horizontal movement of the subject's centroid over a trailing window.
struct SubjectState {
    Eigen::Vector2d centroid_xy = Eigen::Vector2d::Zero();
    double centroid_z = 0.0;
    Eigen::Vector2d velocity_xy = Eigen::Vector2d::Zero();
    double window = 0.0;

    double speed() const { return velocity_xy.norm(); }
};

// Centroid displacement rate over [t - window, t]. Both endpoints must lie
// inside the clip's time range.
SubjectState subject_state(const MotionClip& clip, double t, double window);

enum class Descriptor { velocity_perp, projection_area };

std::string_view descriptor_name(Descriptor d);

// Triangular quality peaking where the view direction is perpendicular to
// the subject's horizontal motion: 1 at phi+-90, 0 at phi and phi+180,
// where phi is the velocity heading. Requires |velocity_xy| > 0.
double q_velocity_perp(double azimuth_deg, const Eigen::Vector2d& velocity_xy);

// Scatter (m^2) of the 13 joints orthographically projected onto the
// vertical plane whose normal is the horizontal view direction at the
// given azimuth: population var(u) + var(v) over the projected points.
double q_projection_area(double azimuth_deg, const SkeletonFrame& frame);

// Per-frame quality sampled at azimuths k*360/n, values in [0,1].
struct QualityMap {
    std::vector<double> values;
    Descriptor active = Descriptor::projection_area;

    int size() const { return static_cast<int>(values.size()); }
    double bin_deg() const { return 360.0 / size(); }
    double azimuth_of(int index) const { return index * bin_deg(); }
    int nearest_index(double azimuth_deg) const;

    // Sample indices whose value ties the maximum (within 1e-12).
    std::vector<int> maximizer_indices() const;
};

// Descriptor choice at the given speed. With hysteresis_frac > 0 the
// switch thresholds become (1 +- hysteresis_frac) * threshold and the
// previous choice wins inside the band.
Descriptor select_descriptor(double speed_mps, double threshold_mps,
                             double hysteresis_frac = 0.0,
                             std::optional<Descriptor> previous = std::nullopt);

// Hard-threshold rule: projection_area below threshold, velocity_perp at
// or above it. The projection-area map is min-max normalized per frame;
// a degenerate frame (all samples equal) yields a uniform map of 1.
QualityMap quality_map(const SkeletonFrame& frame, const SubjectState& state,
                       double threshold_mps, int n_samples = 360);

// Same sampling with the descriptor forced (hysteresis callers).
QualityMap quality_map(const SkeletonFrame& frame, const SubjectState& state,
                       Descriptor descriptor, int n_samples = 360);

// Azimuth of the maximal sample. Exact-value ties break toward the
// smallest wrap-around distance to current_azimuth_deg, then toward the
// smaller azimuth.
double global_optimum(const QualityMap& map, double current_azimuth_deg);

// CSV rows: azimuth_deg, quality, active_descriptor.
void write_quality_csv(const QualityMap& map, std::ostream& out);

}  // namespace orbitcam
