#include "orbitcam/bvh.hpp"

#include <Eigen/Geometry>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "orbitcam/angles.hpp"
#include "orbitcam/errors.hpp"

namespace orbitcam::bvh {

namespace {

struct Token {
    std::string text;
    int line = 0;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    int line = 1;
    std::string current;
    int current_line = 1;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back({current, current_line});
            current.clear();
        }
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
            ++line;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            if (current.empty()) current_line = line;
            current.push_back(c);
        }
    }
    flush();
    return tokens;
}

class TokenStream {
  public:
    explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    bool eof() const { return pos_ >= tokens_.size(); }

    int line() const {
        if (eof()) return tokens_.empty() ? 1 : tokens_.back().line;
        return tokens_[pos_].line;
    }

    const Token& peek() const {
        if (eof()) throw ParseError("unexpected end of file", line());
        return tokens_[pos_];
    }

    Token next() {
        if (eof()) throw ParseError("unexpected end of file", line());
        return tokens_[pos_++];
    }

    void expect(std::string_view word) {
        Token t = next();
        if (t.text != word) {
            throw ParseError("expected '" + std::string(word) + "', got '" + t.text + "'",
                             t.line);
        }
    }

    double number() {
        Token t = next();
        const char* begin = t.text.data();
        const char* end = begin + t.text.size();
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end) {
            throw ParseError("expected a number, got '" + t.text + "'", t.line);
        }
        return value;
    }

    long integer() {
        Token t = next();
        const char* begin = t.text.data();
        const char* end = begin + t.text.size();
        long value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end) {
            throw ParseError("expected an integer, got '" + t.text + "'", t.line);
        }
        return value;
    }

  private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

Channel channel_from_name(const std::string& name, int line) {
    if (name == "Xposition") return Channel::x_position;
    if (name == "Yposition") return Channel::y_position;
    if (name == "Zposition") return Channel::z_position;
    if (name == "Xrotation") return Channel::x_rotation;
    if (name == "Yrotation") return Channel::y_rotation;
    if (name == "Zrotation") return Channel::z_rotation;
    throw ParseError("unsupported channel name '" + name + "'", line);
}

void parse_offset(TokenStream& ts, BvhJoint& joint) {
    ts.expect("OFFSET");
    joint.offset.x() = ts.number();
    joint.offset.y() = ts.number();
    joint.offset.z() = ts.number();
}

void parse_channels(TokenStream& ts, BvhJoint& joint) {
    ts.expect("CHANNELS");
    const int line = ts.line();
    const long n = ts.integer();
    if (n != 3 && n != 6) {
        throw ParseError("CHANNELS count must be 3 or 6, got " + std::to_string(n), line);
    }
    for (long i = 0; i < n; ++i) {
        Token t = ts.next();
        joint.channels.push_back(channel_from_name(t.text, t.line));
    }
}

// Body of a joint: OFFSET, CHANNELS, then child JOINTs / End Site, '}'.
void parse_joint_body(TokenStream& ts, BvhJoint& joint) {
    ts.expect("{");
    parse_offset(ts, joint);
    parse_channels(ts, joint);
    while (true) {
        Token t = ts.next();
        if (t.text == "}") return;
        if (t.text == "JOINT") {
            BvhJoint child;
            child.name = ts.next().text;
            parse_joint_body(ts, child);
            joint.children.push_back(std::move(child));
        } else if (t.text == "End") {
            ts.expect("Site");
            BvhJoint end;
            end.end_site = true;
            ts.expect("{");
            parse_offset(ts, end);
            ts.expect("}");
            joint.children.push_back(std::move(end));
        } else {
            throw ParseError("expected 'JOINT', 'End' or '}', got '" + t.text + "'", t.line);
        }
    }
}

int count_channels(const BvhJoint& joint) {
    int n = static_cast<int>(joint.channels.size());
    for (const auto& c : joint.children) n += count_channels(c);
    return n;
}

void append_number(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void serialize_joint(const BvhDocument& doc, const BvhJoint& joint, int depth,
                     std::string& out) {
    const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    if (joint.end_site) {
        out += indent + "End Site\n" + indent + "{\n";
        out += indent + "  OFFSET ";
    } else {
        out += indent + (depth == 0 ? "ROOT " : "JOINT ") + joint.name + "\n";
        out += indent + "{\n";
        out += indent + "  OFFSET ";
    }
    append_number(out, joint.offset.x());
    out += ' ';
    append_number(out, joint.offset.y());
    out += ' ';
    append_number(out, joint.offset.z());
    out += '\n';
    if (!joint.end_site) {
        out += indent + "  CHANNELS " + std::to_string(joint.channels.size());
        for (Channel c : joint.channels) {
            out += ' ';
            out += channel_name(c);
        }
        out += '\n';
        for (const auto& child : joint.children) {
            serialize_joint(doc, child, depth + 1, out);
        }
    }
    out += indent + "}\n";
}

void fk_walk(const BvhJoint& joint, const Eigen::Affine3d& parent,
             const std::vector<double>& values, std::size_t& cursor,
             std::map<std::string, Eigen::Vector3d>& out) {
    Eigen::Affine3d local = Eigen::Affine3d::Identity();
    local.translate(joint.offset);
    for (Channel c : joint.channels) {
        const double v = values[cursor++];
        switch (c) {
            case Channel::x_position: local.translate(Eigen::Vector3d(v, 0, 0)); break;
            case Channel::y_position: local.translate(Eigen::Vector3d(0, v, 0)); break;
            case Channel::z_position: local.translate(Eigen::Vector3d(0, 0, v)); break;
            case Channel::x_rotation:
                local.rotate(Eigen::AngleAxisd(v * kPi / 180.0, Eigen::Vector3d::UnitX()));
                break;
            case Channel::y_rotation:
                local.rotate(Eigen::AngleAxisd(v * kPi / 180.0, Eigen::Vector3d::UnitY()));
                break;
            case Channel::z_rotation:
                local.rotate(Eigen::AngleAxisd(v * kPi / 180.0, Eigen::Vector3d::UnitZ()));
                break;
        }
    }
    const Eigen::Affine3d world = parent * local;
    if (!joint.end_site) out[joint.name] = world.translation();
    for (const auto& child : joint.children) {
        fk_walk(child, world, values, cursor, out);
    }
}

}  // namespace

std::string_view channel_name(Channel c) {
    switch (c) {
        case Channel::x_position: return "Xposition";
        case Channel::y_position: return "Yposition";
        case Channel::z_position: return "Zposition";
        case Channel::x_rotation: return "Xrotation";
        case Channel::y_rotation: return "Yrotation";
        case Channel::z_rotation: return "Zrotation";
    }
    return "?";
}

int BvhDocument::channel_count() const { return count_channels(root); }

BvhDocument parse_bvh(std::string_view text) {
    TokenStream ts(tokenize(text));

    BvhDocument doc;
    ts.expect("HIERARCHY");
    ts.expect("ROOT");
    doc.root.name = ts.next().text;
    parse_joint_body(ts, doc.root);

    ts.expect("MOTION");
    ts.expect("Frames:");
    const int frames_line = ts.line();
    const long frame_count = ts.integer();
    if (frame_count < 0) throw ParseError("negative frame count", frames_line);
    ts.expect("Frame");
    ts.expect("Time:");
    const int ft_line = ts.line();
    doc.frame_time = ts.number();
    if (doc.frame_time <= 0.0) throw ParseError("frame time must be positive", ft_line);

    const int channels = doc.channel_count();
    // Remaining tokens grouped by source line: one motion line per frame.
    std::vector<std::pair<int, std::vector<double>>> lines;
    while (!ts.eof()) {
        const int line = ts.peek().line;
        if (lines.empty() || lines.back().first != line) lines.push_back({line, {}});
        lines.back().second.push_back(ts.number());
    }
    if (static_cast<long>(lines.size()) != frame_count) {
        throw ParseError("declared " + std::to_string(frame_count) + " frames but found " +
                             std::to_string(lines.size()) + " motion lines",
                         frames_line);
    }
    for (auto& [line, values] : lines) {
        if (static_cast<int>(values.size()) != channels) {
            throw ParseError("expected " + std::to_string(channels) +
                                 " channel values, got " + std::to_string(values.size()),
                             line);
        }
        doc.frames.push_back(std::move(values));
    }
    return doc;
}

std::string serialize_bvh(const BvhDocument& doc) {
    std::string out = "HIERARCHY\n";
    serialize_joint(doc, doc.root, 0, out);
    out += "MOTION\n";
    out += "Frames: " + std::to_string(doc.frames.size()) + "\n";
    out += "Frame Time: ";
    append_number(out, doc.frame_time);
    out += '\n';
    for (const auto& frame : doc.frames) {
        for (std::size_t i = 0; i < frame.size(); ++i) {
            if (i) out += ' ';
            append_number(out, frame[i]);
        }
        out += '\n';
    }
    return out;
}

std::map<std::string, Eigen::Vector3d> world_positions(const BvhDocument& doc,
                                                       std::size_t frame_index) {
    if (frame_index >= doc.frames.size()) {
        throw std::out_of_range("frame index " + std::to_string(frame_index) +
                                " out of range");
    }
    const auto& values = doc.frames[frame_index];
    std::map<std::string, Eigen::Vector3d> out;
    std::size_t cursor = 0;
    fk_walk(doc.root, Eigen::Affine3d::Identity(), values, cursor, out);
    return out;
}

JointMapping cmu_default_mapping() {
    JointMapping m;
    m[static_cast<int>(JointId::head)] = "Head";
    m[static_cast<int>(JointId::spine_shoulder)] = "Neck";
    m[static_cast<int>(JointId::spine_base)] = "Hips";
    m[static_cast<int>(JointId::l_shoulder)] = "LeftArm";
    m[static_cast<int>(JointId::r_shoulder)] = "RightArm";
    m[static_cast<int>(JointId::l_elbow)] = "LeftForeArm";
    m[static_cast<int>(JointId::r_elbow)] = "RightForeArm";
    m[static_cast<int>(JointId::l_hand)] = "LeftHand";
    m[static_cast<int>(JointId::r_hand)] = "RightHand";
    m[static_cast<int>(JointId::l_knee)] = "LeftLeg";
    m[static_cast<int>(JointId::r_knee)] = "RightLeg";
    m[static_cast<int>(JointId::l_foot)] = "LeftFoot";
    m[static_cast<int>(JointId::r_foot)] = "RightFoot";
    return m;
}

JointMapping mapping_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("mapping JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("mapping JSON must be an object");

    JointMapping m;
    for (int i = 0; i < kJointCount; ++i) {
        const std::string key(joint_name(static_cast<JointId>(i)));
        if (!j.contains(key) || !j[key].is_string()) {
            throw ParseError("mapping is missing joint '" + key + "'");
        }
        m[i] = j[key].get<std::string>();
    }
    return m;
}

MotionClip to_clip(const BvhDocument& doc, double scale, AxisMap axis_map,
                   const JointMapping& mapping) {
    if (doc.frames.size() < 2) {
        throw std::invalid_argument("BVH motion has " + std::to_string(doc.frames.size()) +
                                    " frames; at least 2 frames are required");
    }
    MotionClip clip;
    clip.rate_hz = 1.0 / doc.frame_time;
    clip.frames.reserve(doc.frames.size());

    for (std::size_t i = 0; i < doc.frames.size(); ++i) {
        const auto positions = world_positions(doc, i);
        SkeletonFrame frame;
        frame.t = static_cast<double>(i) * doc.frame_time;
        for (int k = 0; k < kJointCount; ++k) {
            const std::string& source = mapping[k];
            auto it = positions.find(source);
            if (it == positions.end()) {
                throw std::invalid_argument(
                    "joint '" + std::string(joint_name(static_cast<JointId>(k))) +
                    "' maps to '" + source + "', which is not in the BVH hierarchy");
            }
            const Eigen::Vector3d& p = it->second;
            Eigen::Vector3d world = axis_map == AxisMap::y_up
                                        ? Eigen::Vector3d(p.x(), -p.z(), p.y())
                                        : p;
            frame.joints[k] = scale * world;
            if (!frame.joints[k].allFinite()) {
                throw std::invalid_argument(
                    "non-finite position for joint '" +
                    std::string(joint_name(static_cast<JointId>(k))) + "' in frame " +
                    std::to_string(i));
            }
        }
        clip.frames.push_back(std::move(frame));
    }
    return clip;
}

}  // namespace orbitcam::bvh
