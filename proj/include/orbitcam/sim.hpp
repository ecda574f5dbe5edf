#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "orbitcam/camera.hpp"
#include "orbitcam/planner.hpp"
#include "orbitcam/skeleton.hpp"
#include "orbitcam/viewpoint.hpp"

namespace orbitcam {

struct PidGains {
    double kp = 8.0;  // deg per normalized-error unit
    double ki = 0.5;
    double kd = 1.0;
};

// Discrete PID per axis on the normalized screen error (e_x/W, e_y/H).
// Output and integral contribution are clamped to +-clamp_deg per update.
class PidController {
  public:
    PidController() = default;
    PidController(PidGains yaw, PidGains pitch, double clamp_deg)
        : yaw_gains_(yaw), pitch_gains_(pitch), clamp_deg_(clamp_deg) {}

    // Returns (dyaw_deg, dpitch_deg) for one cycle of length dt.
    std::pair<double, double> update(const Eigen::Vector2d& error_px,
                                     const Intrinsics& intrinsics, double dt);
    void reset();

  private:
    struct Axis {
        double integral = 0.0;
        std::optional<double> prev_error;
    };

    double axis_update(Axis& axis, const PidGains& g, double error, double dt) const;

    PidGains yaw_gains_{};
    PidGains pitch_gains_{};
    double clamp_deg_ = 10.0;
    Axis yaw_{};
    Axis pitch_{};
};

struct SimConfig {
    double v_max = 2.0;            // m/s along the orbit arc
    double cycle_s = 0.5;          // command cycle T, s (config key "T")
    double alpha = 0.6;            // waypoint smoothing factor
    double speed_threshold = 0.2;  // m/s descriptor switch
    double a_acc = 2.0;            // m/s^2
    double a_dec = 1.0;            // m/s^2
    double drift_sigma = 0.3;      // m, stationary drift std per axis
    double drift_tau = 5.0;        // s, drift correlation time
    std::uint64_t rng_seed = 1;
    Intrinsics intrinsics{};
    PidGains pid_yaw{};
    PidGains pid_pitch{};
    double pid_clamp_deg = 10.0;
    bool pid_enabled = true;
    double radius = 2.5;           // m, orbit radius
    double height = 2.2;           // m, camera height above ground
    double sim_rate = 30.0;        // Hz
    int n_samples = 360;           // quality map resolution
    double hysteresis_frac = 0.0;  // descriptor switch band, 0 disables
    double init_azimuth_deg = 0.0;
    double init_yaw_offset_deg = 0.0;

    // Velocity estimation window equals the command cycle.
    double window() const { return cycle_s; }

    PlannerConfig planner() const;

    // Throws ConfigError listing every violated constraint.
    void validate() const;
};

enum class SimMode { proposed, follow_me };

std::optional<SimMode> sim_mode_from_name(std::string_view name);
std::string_view sim_mode_name(SimMode mode);

// Drone on the orbit circle. azimuth_deg/arc_velocity live in the
// commanded frame; true_position carries the drift.
struct DroneState {
    double azimuth_deg = 0.0;
    double arc_velocity = 0.0;  // m/s, signed along increasing azimuth
    Eigen::Vector3d true_position = Eigen::Vector3d::Zero();
    Eigen::Vector3d drift_offset = Eigen::Vector3d::Zero();
    double yaw_deg = 0.0;
    double pitch_deg = 0.0;
};

// One step of 1-D arc motion toward the waypoint azimuth: accelerate at
// <= a_acc, cruise at <= v_max, decelerate at <= a_dec to stop on target.
// Only azimuth_deg and arc_velocity are advanced.
DroneState drone_step(const DroneState& state, double waypoint_azimuth_deg, double dt,
                      const SimConfig& config);

// Mean-reverting positional drift:
//   d <- d * exp(-dt/tau) + sigma * sqrt(1 - exp(-2 dt/tau)) * g
// per axis, g standard normal. sigma = 0 keeps the offset noiseless.
Eigen::Vector3d drift_step(const Eigen::Vector3d& offset, double dt, double sigma,
                           double tau, std::mt19937_64& rng);

struct FrameRecord {
    double t = 0.0;
    CameraPose camera{};
    Eigen::Vector2d error_px = Eigen::Vector2d::Zero();
    bool visible = false;
    int width_px = 0;
    double actual_azimuth_deg = 0.0;     // true camera azimuth about the subject
    double globalopt_azimuth_deg = 0.0;  // reference optimum of this frame's map
    double wp_azimuth_deg = 0.0;         // commanded azimuth
    SimMode mode = SimMode::proposed;
};

struct RunResult {
    SimMode mode = SimMode::proposed;
    std::vector<FrameRecord> records;
    std::vector<QualityMap> maps;  // one per record
};

// End-to-end closed loop at sim_rate: subject state, per-frame quality
// map, waypoint publication every cycle_s (proposed) or rigid offset
// following (follow_me), arc dynamics, drift, aiming, PID trim.
// The loop starts one window after the clip start; the clip must span at
// least two command cycles.
RunResult run_simulation(const MotionClip& clip, const SimConfig& config, SimMode mode);

// CSV columns: t, cam_x, cam_y, cam_z, yaw_deg, pitch_deg, wp_azimuth_deg,
// globalopt_azimuth_deg, e_x_px, e_y_px, visible_flag.
void write_trace_csv(const RunResult& result, std::ostream& out);

}  // namespace orbitcam
