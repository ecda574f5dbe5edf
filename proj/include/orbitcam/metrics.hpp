#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "orbitcam/sim.hpp"
#include "orbitcam/viewpoint.hpp"

namespace orbitcam {

// Euclidean screen-space error divided by the image width.
double screen_error_ratio(const Eigen::Vector2d& error_px, double width_px);

// Wrap-around angular distance from the actual azimuth to the nearest
// global maximizer of the map (covers the symmetric twin optima).
double viewpoint_error(double actual_azimuth_deg, const QualityMap& map);

struct Histogram {
    double lo = 0.0;
    double bin_width = 0.0;
    bool open_ended = false;  // last bin absorbs everything above
    std::vector<std::size_t> counts;

    double bin_lo(std::size_t i) const { return lo + i * bin_width; }
    double bin_hi(std::size_t i) const { return lo + (i + 1) * bin_width; }
    std::size_t total() const;
    void add(double value);
};

// Composition ratios in 0.05-wide bins on [0, 0.5] plus an overflow bin.
Histogram make_composition_histogram();
// Viewpoint errors in 10-degree bins on [0, 180].
Histogram make_viewpoint_histogram();

struct RunReport {
    SimMode mode = SimMode::proposed;
    double avg_screen_error_ratio = 0.0;
    double avg_viewpoint_error_deg = 0.0;
    Histogram histogram_composition{};
    Histogram histogram_viewpoint{};
    std::size_t frame_count = 0;      // visible frames included in averages
    std::size_t invisible_count = 0;  // excluded frames
};

// Averages over visible frames only; throws when records are empty, when
// records/maps disagree in length, or when every frame is invisible.
RunReport aggregate(const std::vector<FrameRecord>& records,
                    const std::vector<QualityMap>& maps);

RunReport aggregate(const RunResult& result);

struct Comparison {
    RunReport a;
    RunReport b;
    double ratio_diff = 0.0;           // a - b
    double viewpoint_error_diff = 0.0; // a - b, degrees
};

Comparison compare(const RunReport& a, const RunReport& b);

std::string report_json(const RunReport& report);
std::string comparison_json(const Comparison& cmp);
std::string comparison_text(const Comparison& cmp);

// CSV rows: bin_lo, bin_hi, count ("inf" for an open-ended last bin).
void write_histogram_csv(const Histogram& hist, std::ostream& out);

}  // namespace orbitcam
