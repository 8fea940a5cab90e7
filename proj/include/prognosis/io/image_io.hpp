#pragma once

#include <filesystem>

#include "prognosis/features/types.hpp"

namespace prognosis::io {

// Patches: 8-bit RGB PNG, or raw interleaved RGB bytes with a `.dims`
// sidecar holding "width height". Masks: 16-bit grayscale PNG of instance
// labels (8-bit accepted), or raw little-endian u16 with the same sidecar.

features::Patch read_patch_png(const std::filesystem::path& path);
features::LabelMask read_mask_png(const std::filesystem::path& path);

void write_patch_png(const std::filesystem::path& path, const features::Patch& patch);
void write_mask_png(const std::filesystem::path& path, const features::LabelMask& mask);

features::Patch read_patch_raw(const std::filesystem::path& path);
features::LabelMask read_mask_raw(const std::filesystem::path& path);

void write_patch_raw(const std::filesystem::path& path, const features::Patch& patch);
void write_mask_raw(const std::filesystem::path& path, const features::LabelMask& mask);

// Dispatch on extension: ".png" or ".raw"/".rgb".
features::Patch read_patch(const std::filesystem::path& path);
features::LabelMask read_mask(const std::filesystem::path& path);

}  // namespace prognosis::io
