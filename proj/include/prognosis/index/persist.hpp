#pragma once

#include <filesystem>

#include "prognosis/index/index.hpp"

namespace prognosis::index {

inline constexpr std::uint8_t kIndexFormatVersion = 1;

// PGIX binary layout, little-endian:
//   magic "PGIX", version u8,
//   dim u32, n u64,
//   weights: dim f64,
//   stats: dim f64 means then dim f64 stddevs,
//   n records: id length u32, id bytes (UTF-8), dim f64 z-scored values.
void save_index(const std::filesystem::path& path, const SimilarityIndex& index);

// Throws BadIndexFile on magic/version mismatch or truncation.
SimilarityIndex load_index(const std::filesystem::path& path);

}  // namespace prognosis::index
