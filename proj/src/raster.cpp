#include "sal/raster.hpp"

#include <cmath>
#include <vector>

#include "sal/error.hpp"
#include "sal/kernels.hpp"

namespace sal {

size_t BinaryMask::count_true() const {
  return par::count_true(bits.data(), bits.size());
}

SaliencyMap normalize_map(const SaliencyMap& map) {
  if (map.empty()) throw EmptyInput("normalize_map: empty map");
  for (float v : map.values) {
    if (!std::isfinite(v)) throw InvalidInput("normalize_map: non-finite value");
  }
  const auto [lo, hi] = par::min_max(map.values.data(), map.values.size());
  SaliencyMap out(map.width, map.height);
  if (hi == lo) return out;  // constant map -> all zeros
  const float range = hi - lo;
  const long long n = static_cast<long long>(map.values.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    out.values[i] = (map.values[i] - lo) / range;
  }
  return out;
}

SaliencyMap resize_bilinear(const SaliencyMap& map, int w, int h) {
  if (w < 1 || h < 1) throw InvalidArgument("resize_bilinear: target dimensions must be >= 1");
  if (map.empty()) throw EmptyInput("resize_bilinear: empty map");
  SaliencyMap out(w, h);
  par::resize_bilinear(map.values.data(), map.width, map.height, out.values.data(), w, h);
  return out;
}

Labeling connected_components(const BinaryMask& mask, int connectivity) {
  if (connectivity != 4 && connectivity != 8)
    throw InvalidArgument("connected_components: connectivity must be 4 or 8");
  const int w = mask.width, h = mask.height;
  Labeling out(w, h);
  std::vector<int> stack;
  int32_t next = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const size_t i = static_cast<size_t>(y) * w + x;
      if (!mask.bits[i] || out.labels[i] != 0) continue;
      ++next;
      out.labels[i] = next;
      stack.push_back(static_cast<int>(i));
      while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        const int px = p % w, py = p / w;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (connectivity == 4 && dx != 0 && dy != 0) continue;
            const int nx = px + dx, ny = py + dy;
            if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
            const size_t q = static_cast<size_t>(ny) * w + nx;
            if (mask.bits[q] && out.labels[q] == 0) {
              out.labels[q] = next;
              stack.push_back(static_cast<int>(q));
            }
          }
        }
      }
    }
  }
  out.count = next;
  return out;
}

BinaryMask fill_holes(const BinaryMask& mask) {
  const int w = mask.width, h = mask.height;
  BinaryMask out = mask;
  if (w == 0 || h == 0) return out;

  // 4-connected background flood from the border; unreached false pixels
  // are holes.
  std::vector<uint8_t> reached(mask.bits.size(), 0);
  std::vector<int> stack;
  auto push = [&](int x, int y) {
    const size_t i = static_cast<size_t>(y) * w + x;
    if (!mask.bits[i] && !reached[i]) {
      reached[i] = 1;
      stack.push_back(static_cast<int>(i));
    }
  };
  for (int x = 0; x < w; ++x) {
    push(x, 0);
    push(x, h - 1);
  }
  for (int y = 0; y < h; ++y) {
    push(0, y);
    push(w - 1, y);
  }
  while (!stack.empty()) {
    const int p = stack.back();
    stack.pop_back();
    const int px = p % w, py = p / w;
    if (px > 0) push(px - 1, py);
    if (px < w - 1) push(px + 1, py);
    if (py > 0) push(px, py - 1);
    if (py < h - 1) push(px, py + 1);
  }
  for (size_t i = 0; i < out.bits.size(); ++i) {
    if (!out.bits[i] && !reached[i]) out.bits[i] = 1;
  }
  return out;
}

}  // namespace sal
