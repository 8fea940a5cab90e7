#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prognosis {

// Base class for all library errors. The CLI maps these to exit code 1.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- feature extraction ---
struct EmptyTissue final : Error { using Error::Error; };
struct DegenerateStain final : Error { using Error::Error; };
struct UnknownNucleus final : Error { using Error::Error; };
struct NoPairs final : Error { using Error::Error; };
struct NoValidNuclei final : Error { using Error::Error; };

// --- similarity index ---
struct DimensionMismatch final : Error { using Error::Error; };
struct EmptyIndex final : Error { using Error::Error; };
struct InvalidValue final : Error { using Error::Error; };
struct TooFewPositives final : Error { using Error::Error; };
struct BadIndexFile final : Error { using Error::Error; };

struct MissingLineage final : Error {
  explicit MissingLineage(const std::string& patch)
      : Error("no lineage entry for patch '" + patch + "'"), patch_id(patch) {}
  std::string patch_id;
};

// --- survival ---
struct EmptySubset final : Error { using Error::Error; };
struct EmptyGroup final : Error { using Error::Error; };
struct NonFinite final : Error { using Error::Error; };
struct NoSE final : Error { using Error::Error; };
struct DegenerateSplit final : Error { using Error::Error; };

// --- ingest ---
struct HeaderMismatch final : Error { using Error::Error; };
struct NoUsableRows final : Error { using Error::Error; };

struct BadValue final : Error {
  BadValue(std::size_t row, const std::string& column, const std::string& detail)
      : Error("bad value at row " + std::to_string(row) + ", column '" + column + "': " + detail),
        row(row),
        column(column) {}
  std::size_t row;
  std::string column;
};

// --- personalization ---
struct SpecInvalid final : Error { using Error::Error; };

struct CohortTooSmall final : Error {
  CohortTooSmall(std::size_t found_, std::size_t needed_)
      : Error("cohort too small: found " + std::to_string(found_) + " usable patients, need " +
              std::to_string(needed_)),
        found(found_),
        needed(needed_) {}
  std::size_t found;
  std::size_t needed;
};

struct MissingRecords final : Error {
  explicit MissingRecords(const std::string& ids)
      : Error("no usable patient record for: " + ids) {}
};

}  // namespace prognosis
