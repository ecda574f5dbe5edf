#pragma once

#include <Eigen/Core>
#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcam/skeleton.hpp"

namespace orbitcam::bvh {

enum class Channel {
    x_position,
    y_position,
    z_position,
    x_rotation,
    y_rotation,
    z_rotation,
};

std::string_view channel_name(Channel c);

// One node of the BVH hierarchy. End sites carry no name and no channels.
struct BvhJoint {
    std::string name;
    Eigen::Vector3d offset = Eigen::Vector3d::Zero();
    std::vector<Channel> channels;
    std::vector<BvhJoint> children;
    bool end_site = false;
};

struct BvhDocument {
    BvhJoint root;
    double frame_time = 0.0;
    std::vector<std::vector<double>> frames;  // channel values, declaration order

    int channel_count() const;
};

// Parse the BVH subset: HIERARCHY with ROOT/JOINT/End Site, OFFSET,
// CHANNELS (3 or 6 of {X,Y,Z}{position,rotation}), MOTION with Frames:
// and Frame Time:, one motion line per frame. Throws ParseError with the
// offending line number.
BvhDocument parse_bvh(std::string_view text);

// Text form that parses back to a structurally identical document.
std::string serialize_bvh(const BvhDocument& doc);

// World positions of every named joint for one motion frame, in the
// file's own units and axes. Rotations compose in declared channel order.
std::map<std::string, Eigen::Vector3d> world_positions(const BvhDocument& doc,
                                                       std::size_t frame_index);

// How to map the source up-axis onto the canonical z-up world frame.
// y_up sends (x, y, z) -> (x, -z, y).
enum class AxisMap { z_up, y_up };

// Source joint name for each of the 13 canonical joints.
using JointMapping = std::array<std::string, kJointCount>;

// Defaults for the common CMU BVH skeleton naming.
JointMapping cmu_default_mapping();

// Load a mapping from a JSON object {"head": "Head", ...}. All 13 keys
// are required.
JointMapping mapping_from_json(const std::string& json_text);

// Forward kinematics over all frames, axis conversion, scaling to meters,
// and reduction to the 13-joint set. Throws on unmapped joints, missing
// source joints, non-finite values, or fewer than 2 frames.
MotionClip to_clip(const BvhDocument& doc, double scale, AxisMap axis_map,
                   const JointMapping& mapping);

}  // namespace orbitcam::bvh
