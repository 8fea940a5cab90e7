#include "prognosis/index/persist.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "prognosis/errors.hpp"

namespace prognosis::index {

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = (v >> (8 * i)) & 0xff;
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = (v >> (8 * i)) & 0xff;
  out.write(reinterpret_cast<const char*>(b), 8);
}

void put_f64(std::ostream& out, double d) { put_u64(out, std::bit_cast<std::uint64_t>(d)); }

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (in.gcount() != 4) throw BadIndexFile("truncated index file");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(b[i]) << (8 * i);
  return v;
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  if (in.gcount() != 8) throw BadIndexFile("truncated index file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
  return v;
}

double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

}  // namespace

void save_index(const std::filesystem::path& path, const SimilarityIndex& index) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write index file: " + path.string());
  out.write("PGIX", 4);
  out.put(char(kIndexFormatVersion));
  put_u32(out, std::uint32_t(index.dim()));
  put_u64(out, index.size());
  for (double w : index.base_weights()) put_f64(out, w);
  for (double m : index.stats().mean) put_f64(out, m);
  for (double s : index.stats().stddev) put_f64(out, s);
  for (std::size_t i = 0; i < index.size(); ++i) {
    const std::string& id = index.id_of(i);
    put_u32(out, std::uint32_t(id.size()));
    out.write(id.data(), std::streamsize(id.size()));
    for (double v : index.stored(i)) put_f64(out, v);
  }
  if (!out) throw Error("write failed: " + path.string());
}

SimilarityIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open index file: " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (in.gcount() != 4 || std::memcmp(magic, "PGIX", 4) != 0)
    throw BadIndexFile("not a PGIX file: " + path.string());
  const int version = in.get();
  if (version != kIndexFormatVersion)
    throw BadIndexFile("unsupported PGIX version " + std::to_string(version));

  const std::uint32_t dim = get_u32(in);
  const std::uint64_t n = get_u64(in);
  if (dim == 0 || n == 0) throw BadIndexFile("empty index file");

  std::vector<double> weights(dim);
  for (auto& w : weights) w = get_f64(in);
  DimStats stats;
  stats.mean.resize(dim);
  stats.stddev.resize(dim);
  for (auto& m : stats.mean) m = get_f64(in);
  for (auto& s : stats.stddev) s = get_f64(in);

  std::vector<std::string> ids;
  ids.reserve(n);
  std::vector<double> data(n * dim);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint32_t len = get_u32(in);
    std::string id(len, '\0');
    in.read(id.data(), len);
    if (std::size_t(in.gcount()) != len) throw BadIndexFile("truncated index file");
    ids.push_back(std::move(id));
    for (std::uint32_t j = 0; j < dim; ++j) data[i * dim + j] = get_f64(in);
  }
  return SimilarityIndex::from_parts(std::move(ids), std::move(data), dim, std::move(weights),
                                     std::move(stats));
}

}  // namespace prognosis::index
