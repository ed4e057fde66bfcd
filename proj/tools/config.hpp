#pragma once

// Flat key-value run configuration:
//
//   # comment
//   format = json            (json | csv)
//   out = report.json
//   jobs = 4
//   thm-4.1.max_ab = 50      (<claim id>.<bound name> = positive integer)
//
// The claim id is everything before the last '.', so ids containing dots work.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "congruent/audit.hpp"

namespace congruent::cli {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { Json, Csv };

struct RunConfig {
  std::map<std::string, Bounds> default_bounds;
  Format output_format = Format::Json;
  std::optional<std::filesystem::path> output_path;
  std::optional<unsigned> jobs;
};

RunConfig parse_config(const std::string& text, const std::string& origin = "config");
RunConfig load_config(const std::filesystem::path& path);

// Explicit path wins, then CONGRUENT_CONFIG, then nothing.
std::optional<std::filesystem::path> config_path(const std::optional<std::string>& explicit_path);

Format parse_format(const std::string& text);

// Accepts registry ids and their punctuation-free spelling ("thm41").
std::string resolve_claim_id(const std::string& text);

}  // namespace congruent::cli
