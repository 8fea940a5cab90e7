#pragma once

#include <unordered_map>

#include "prognosis/index/index.hpp"

namespace prognosis::index {

struct LineageEntry {
  std::string wsi_id;
  std::string patient_id;
};

// patch_id -> (wsi_id, patient_id)
using Lineage = std::unordered_map<std::string, LineageEntry>;

struct Cohort {
  std::vector<std::string> patient_ids;   // ordered by (support desc, best rank asc)
  std::vector<std::size_t> support;       // contributing patches per patient
  std::vector<std::string> source_patches;
};

// Maps a ranked patch list to its patients. Throws MissingLineage when a
// ranked patch has no lineage row.
Cohort resolve_cohort(const RankedList& ranked, const Lineage& lineage);

}  // namespace prognosis::index
