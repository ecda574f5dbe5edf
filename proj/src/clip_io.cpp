#include "orbitcam/clip_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "orbitcam/errors.hpp"

namespace orbitcam {

namespace {

double median_spacing(const std::vector<SkeletonFrame>& frames) {
    std::vector<double> gaps;
    gaps.reserve(frames.size() - 1);
    for (std::size_t i = 1; i < frames.size(); ++i) {
        gaps.push_back(frames[i].t - frames[i - 1].t);
    }
    std::sort(gaps.begin(), gaps.end());
    const std::size_t mid = gaps.size() / 2;
    if (gaps.size() % 2 == 1) return gaps[mid];
    return 0.5 * (gaps[mid - 1] + gaps[mid]);
}

}  // namespace

MotionClip load_jsonl(std::istream& in) {
    MotionClip clip;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("malformed JSON: ") + e.what(), line_no);
        }
        if (!j.is_object() || !j.contains("t") || !j.contains("joints")) {
            throw ParseError("each line needs 't' and 'joints' keys", line_no);
        }

        SkeletonFrame frame;
        frame.t = j["t"].get<double>();
        const auto& joints = j["joints"];
        for (int k = 0; k < kJointCount; ++k) {
            const std::string key(joint_name(static_cast<JointId>(k)));
            if (!joints.contains(key)) {
                throw ParseError("missing joint '" + key + "'", line_no);
            }
            const auto& arr = joints[key];
            if (!arr.is_array() || arr.size() != 3) {
                throw ParseError("joint '" + key + "' must be an [x,y,z] array", line_no);
            }
            frame.joints[k] =
                Eigen::Vector3d(arr[0].get<double>(), arr[1].get<double>(),
                                arr[2].get<double>());
        }
        if (!frame.all_finite()) throw ParseError("non-finite value", line_no);
        if (!clip.frames.empty() && frame.t <= clip.frames.back().t) {
            throw ParseError("non-increasing timestamp " + std::to_string(frame.t), line_no);
        }
        clip.frames.push_back(std::move(frame));
    }
    if (clip.frames.size() < 2) {
        throw ParseError("clip needs at least 2 frames, got " +
                         std::to_string(clip.frames.size()));
    }
    clip.rate_hz = 1.0 / median_spacing(clip.frames);
    return clip;
}

MotionClip load_jsonl_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open clip file '" + path + "'");
    try {
        return load_jsonl(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_jsonl(const MotionClip& clip, std::ostream& out) {
    for (const auto& frame : clip.frames) {
        nlohmann::ordered_json j;
        j["t"] = frame.t;
        nlohmann::ordered_json joints;
        for (int k = 0; k < kJointCount; ++k) {
            const auto& p = frame.joints[k];
            joints[std::string(joint_name(static_cast<JointId>(k)))] = {p.x(), p.y(), p.z()};
        }
        j["joints"] = std::move(joints);
        out << j.dump() << '\n';
    }
}

void save_jsonl_file(const MotionClip& clip, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FileError("cannot write clip file '" + path + "'");
    save_jsonl(clip, out);
}

}  // namespace orbitcam
