#include "config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace congruent::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string squash(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != '-' && c != '.' && c != '/' && c != '_') out += c;
  }
  return out;
}

std::uint64_t parse_positive(const std::string& text, const std::string& where) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    if (text.empty() || text[0] == '-') throw std::invalid_argument(text);
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v == 0) throw ConfigError(where + ": expected a positive integer, got '" + text + "'");
  return v;
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw ConfigError("format must be json or csv, got '" + text + "'");
}

std::string resolve_claim_id(const std::string& text) {
  for (const auto& id : claim_ids()) {
    if (id == text) return id;
  }
  for (const auto& id : claim_ids()) {
    if (squash(id) == squash(text)) return id;
  }
  return text;  // run_claim reports it with the list of known ids
}

RunConfig parse_config(const std::string& text, const std::string& origin) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno);
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "format") {
      cfg.output_format = parse_format(value);
    } else if (key == "out") {
      if (value.empty()) throw ConfigError(where + ": empty output path");
      cfg.output_path = value;
    } else if (key == "jobs") {
      cfg.jobs = static_cast<unsigned>(parse_positive(value, where));
    } else {
      const auto dot = key.rfind('.');
      if (dot == std::string::npos || dot == 0 || dot + 1 == key.size()) {
        throw ConfigError(where + ": unknown key '" + key + "'");
      }
      const std::string id = resolve_claim_id(key.substr(0, dot));
      const auto ids = claim_ids();
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        throw ConfigError(where + ": unknown claim '" + key.substr(0, dot) + "'");
      }
      cfg.default_bounds[id][key.substr(dot + 1)] = parse_positive(value, where);
    }
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

std::optional<std::filesystem::path> config_path(const std::optional<std::string>& explicit_path) {
  if (explicit_path) return *explicit_path;
  if (const char* env = std::getenv("CONGRUENT_CONFIG"); env && *env) return std::string(env);
  return std::nullopt;
}

}  // namespace congruent::cli
