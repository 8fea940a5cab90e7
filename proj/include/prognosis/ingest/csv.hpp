#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace prognosis::ingest {

// Minimal CSV dialect used throughout: UTF-8, comma separated, '\n' rows,
// mandatory header, no quoting. '\r\n' is tolerated on read.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;  // npos when absent
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

CsvTable read_csv(const std::filesystem::path& path);
CsvTable parse_csv(const std::string& text, const std::string& origin = "<string>");

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace prognosis::ingest
