#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace orbitcam {

// Input file missing or unreadable. The CLI maps this to exit code 2.
class FileError : public std::runtime_error {
  public:
    explicit FileError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed content inside an otherwise readable input (BVH, JSONL, ...).
// Carries a 1-based line number when one is known.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    explicit ParseError(const std::string& msg) : ParseError(msg, 0) {}

    int line() const { return line_; }

  private:
    int line_ = 0;
};

// Invalid configuration. Collects every violation so the user sees the
// whole list at once.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const { return issues_; }

  private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string out = "invalid config:";
        for (const auto& s : issues) out += "\n  - " + s;
        return out;
    }

    std::vector<std::string> issues_;
};

}  // namespace orbitcam
