#pragma once

#include <cstdint>
#include <vector>

namespace sal {

// Pixel grid with 1 or 3 channels, planar layout, samples in [0,1].
struct Raster {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<float> data;  // plane c at data[c*width*height], row-major

  Raster() = default;
  Raster(int w, int h, int c, float fill = 0.f)
      : width(w), height(h), channels(c),
        data(static_cast<size_t>(w) * h * c, fill) {}

  float& at(int x, int y, int c = 0) {
    return data[(static_cast<size_t>(c) * height + y) * width + x];
  }
  float at(int x, int y, int c = 0) const {
    return data[(static_cast<size_t>(c) * height + y) * width + x];
  }
  const float* plane(int c) const { return data.data() + static_cast<size_t>(c) * width * height; }
  float* plane(int c) { return data.data() + static_cast<size_t>(c) * width * height; }
  size_t pixels() const { return static_cast<size_t>(width) * height; }
  bool empty() const { return width <= 0 || height <= 0; }
};

// Per-pixel scalar field in [0,1].
struct SaliencyMap {
  int width = 0;
  int height = 0;
  std::vector<float> values;  // row-major

  SaliencyMap() = default;
  SaliencyMap(int w, int h, float fill = 0.f)
      : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {}

  float& at(int x, int y) { return values[static_cast<size_t>(y) * width + x]; }
  float at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
  size_t pixels() const { return static_cast<size_t>(width) * height; }
  bool empty() const { return width <= 0 || height <= 0; }
};

// Per-pixel object/background labeling.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> bits;  // row-major, 0 or 1

  BinaryMask() = default;
  BinaryMask(int w, int h, bool fill = false)
      : width(w), height(h), bits(static_cast<size_t>(w) * h, fill ? 1 : 0) {}

  uint8_t& at(int x, int y) { return bits[static_cast<size_t>(y) * width + x]; }
  uint8_t at(int x, int y) const { return bits[static_cast<size_t>(y) * width + x]; }
  size_t pixels() const { return static_cast<size_t>(width) * height; }
  size_t count_true() const;
  bool empty_mask() const { return count_true() == 0; }
};

// Partition of the grid into labeled regions.
//
// segment() produces dense labels in [0, count). connected_components()
// labels background 0 and components 1..count.
struct Labeling {
  int width = 0;
  int height = 0;
  std::vector<int32_t> labels;  // row-major
  int32_t count = 0;

  Labeling() = default;
  Labeling(int w, int h)
      : width(w), height(h), labels(static_cast<size_t>(w) * h, 0) {}

  int32_t at(int x, int y) const { return labels[static_cast<size_t>(y) * width + x]; }
  size_t pixels() const { return static_cast<size_t>(width) * height; }
};

// Affine rescale to [0,1]; a constant map becomes all zeros.
// Throws InvalidInput on non-finite values, EmptyInput on a 0-pixel map.
SaliencyMap normalize_map(const SaliencyMap& map);

// Bilinear resize with pixel-center alignment. Throws InvalidArgument on
// non-positive target dimensions.
SaliencyMap resize_bilinear(const SaliencyMap& map, int w, int h);

// Label maximal connected true-regions 1..count; false pixels get 0.
Labeling connected_components(const BinaryMask& mask, int connectivity);

// Set true every false-region not reachable from the image border by a
// 4-connected background flood.
BinaryMask fill_holes(const BinaryMask& mask);

}  // namespace sal
