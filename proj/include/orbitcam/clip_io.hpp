#pragma once

#include <iosfwd>
#include <string>

#include "orbitcam/skeleton.hpp"

namespace orbitcam {

// Canonical skeleton JSONL: one object per line,
//   {"t": <seconds>, "joints": {"head": [x,y,z], ... all 13 keys ...}}
// positions in meters, world frame z-up. The clip rate is inferred from
// the median timestamp spacing.
MotionClip load_jsonl(std::istream& in);
MotionClip load_jsonl_file(const std::string& path);

void save_jsonl(const MotionClip& clip, std::ostream& out);
void save_jsonl_file(const MotionClip& clip, const std::string& path);

}  // namespace orbitcam
