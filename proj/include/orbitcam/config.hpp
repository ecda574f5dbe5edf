#pragma once

#include <iosfwd>
#include <string>

#include "orbitcam/sim.hpp"

namespace orbitcam {

// Flat key-value config (one "key = value" per line, '#' comments).
// Unknown keys and constraint violations are collected and reported
// together via ConfigError. Missing keys keep their defaults.
SimConfig parse_config(std::istream& in, const std::string& source_name);
SimConfig load_config_file(const std::string& path);

// The full key set with current values, in config-file syntax.
std::string config_to_string(const SimConfig& config);

}  // namespace orbitcam
