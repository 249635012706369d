#pragma once

#include <filesystem>

#include "sal/raster.hpp"

// Binary PNM (PGM/PPM). 8-bit samples are divided by the file maxval on
// read; masks are 8-bit grayscale where value > 127 means object.

namespace sal {

// P5 -> 1 channel, P6 -> 3 channels.
Raster read_image(const std::filesystem::path& path);

// 8-bit grayscale only; throws IoError (naming the path) otherwise.
BinaryMask read_mask(const std::filesystem::path& path);
SaliencyMap read_map_gray(const std::filesystem::path& path);

void write_mask(const std::filesystem::path& path, const BinaryMask& mask);
void write_map_gray(const std::filesystem::path& path, const SaliencyMap& map);
void write_raster(const std::filesystem::path& path, const Raster& img);

// Debug export: 16-bit PGM of the label values (big-endian, maxval 65535).
void write_labels16(const std::filesystem::path& path, const Labeling& labeling);

}  // namespace sal
