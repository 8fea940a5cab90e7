#include "prognosis/util/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "prognosis/errors.hpp"
#include "prognosis/util/format.hpp"

namespace prognosis::util {

std::optional<std::string> ConfigSection::get(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  return std::nullopt;
}

std::vector<std::string> ConfigSection::get_all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries)
    if (k == key) out.push_back(v);
  return out;
}

const ConfigSection* ConfigFile::find(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

std::filesystem::path ConfigFile::resolve_path(const std::string& value) const {
  std::filesystem::path p(value);
  if (p.is_absolute() || origin.empty()) return p;
  return origin.parent_path() / p;
}

ConfigFile parse_config(const std::string& text, const std::filesystem::path& origin) {
  ConfigFile cfg;
  cfg.origin = origin;
  cfg.sections.push_back(ConfigSection{"", {}});
  ConfigSection* cur = &cfg.sections.back();

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw Error("config line " + std::to_string(lineno) + ": unterminated section header");
      cfg.sections.push_back(ConfigSection{trim(t.substr(1, t.size() - 2)), {}});
      cur = &cfg.sections.back();
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(lineno) + ": expected 'key = value'");
    cur->entries.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return cfg;
}

ConfigFile load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

double parse_double(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  double v = 0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
    throw Error("expected a number for " + what + ", got '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  std::int64_t v = 0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
    throw Error("expected an integer for " + what + ", got '" + s + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  std::uint64_t v = 0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
    throw Error("expected an unsigned integer for " + what + ", got '" + s + "'");
  return v;
}

bool parse_bool(const std::string& s, const std::string& what) {
  const std::string t = to_lower(trim(s));
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw Error("expected a boolean for " + what + ", got '" + s + "'");
}

}  // namespace prognosis::util
