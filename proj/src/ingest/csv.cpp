#include "prognosis/ingest/csv.hpp"

#include <fstream>
#include <sstream>

#include "prognosis/errors.hpp"
#include "prognosis/util/format.hpp"

namespace prognosis::ingest {

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  return npos;
}

static std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.emplace_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

CsvTable parse_csv(const std::string& text, const std::string& origin) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1) {
      table.header = split_fields(line);
      if (table.header.empty() || (table.header.size() == 1 && table.header[0].empty()))
        throw HeaderMismatch(origin + ": missing CSV header");
      continue;
    }
    if (line.empty()) continue;  // tolerate a trailing blank line
    auto fields = split_fields(line);
    if (fields.size() != table.header.size())
      throw Error(origin + " line " + std::to_string(lineno) + ": expected " +
                  std::to_string(table.header.size()) + " fields, got " +
                  std::to_string(fields.size()));
    table.rows.push_back(std::move(fields));
  }
  if (lineno == 0) throw HeaderMismatch(origin + ": empty file");
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open CSV file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str(), path.string());
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write CSV file: " + path.string());
  out << util::join(header, ",") << '\n';
  for (const auto& row : rows) out << util::join(row, ",") << '\n';
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace prognosis::ingest
