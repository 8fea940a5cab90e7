#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace prognosis::util {

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ULL);

// FNV-1a over the file contents, rendered as 16 hex digits.
std::string file_hash_hex(const std::filesystem::path& path);

}  // namespace prognosis::util
