#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prognosis::util {

// Flat `key = value` text format with optional [section] headers and '#'
// comments. Duplicate keys are kept in order (used for repeated entries such
// as simulation clusters).
struct ConfigSection {
  std::string name;  // "" for the top-level section
  std::vector<std::pair<std::string, std::string>> entries;

  std::optional<std::string> get(const std::string& key) const;
  std::vector<std::string> get_all(const std::string& key) const;
};

struct ConfigFile {
  std::vector<ConfigSection> sections;  // sections[0] is the top-level section
  std::filesystem::path origin;

  const ConfigSection& top() const { return sections.front(); }
  const ConfigSection* find(const std::string& name) const;

  // Paths in a config resolve relative to the file that declared them.
  std::filesystem::path resolve_path(const std::string& value) const;
};

ConfigFile parse_config(const std::string& text, const std::filesystem::path& origin = {});
ConfigFile load_config(const std::filesystem::path& path);

double parse_double(const std::string& s, const std::string& what);
std::int64_t parse_int(const std::string& s, const std::string& what);
std::uint64_t parse_u64(const std::string& s, const std::string& what);
bool parse_bool(const std::string& s, const std::string& what);

}  // namespace prognosis::util
