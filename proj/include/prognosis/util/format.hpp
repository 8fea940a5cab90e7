#pragma once

#include <string>
#include <vector>

namespace prognosis::util {

// Shortest decimal string that round-trips to the same double.
std::string fmt_double(double v);

// 17 significant digits; always round-trips. Used where the file contract
// asks for full-precision decimal values.
std::string fmt_double17(double v);

// Fixed-point with the given number of decimals (report tables).
std::string fmt_fixed(double v, int decimals);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

std::string trim(const std::string& s);

std::string to_lower(std::string s);

// Levenshtein distance; used for "did you mean" suggestions.
std::size_t edit_distance(const std::string& a, const std::string& b);

}  // namespace prognosis::util
