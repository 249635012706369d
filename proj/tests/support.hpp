// Synthetic inputs and independent oracles used across the test suites.
// Oracles are deliberately written as direct per-definition loops, separate
// from the library implementations they check.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "sal/kernels.hpp"
#include "sal/raster.hpp"

namespace testsupport {

inline sal::Raster uniform_image(int w, int h, int channels, float value) {
  sal::Raster img(w, h, channels, value);
  return img;
}

// bright axis-aligned square on a homogeneous background
inline sal::Raster square_image(int w, int h, int x0, int y0, int size, float fg, float bg) {
  sal::Raster img(w, h, 3, bg);
  for (int c = 0; c < 3; ++c) {
    for (int y = y0; y < y0 + size; ++y) {
      for (int x = x0; x < x0 + size; ++x) {
        img.at(x, y, c) = fg;
      }
    }
  }
  return img;
}

inline sal::BinaryMask rect_mask(int w, int h, int x0, int y0, int x1, int y1) {
  sal::BinaryMask m(w, h);
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) m.at(x, y) = 1;
  }
  return m;
}

// isotropic Gaussian bump, peak value 1 at (cx, cy)
inline sal::SaliencyMap gaussian_map(int w, int h, double cx, double cy, double sigma) {
  sal::SaliencyMap map(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
      map.at(x, y) = static_cast<float>(std::exp(-d2 / (2.0 * sigma * sigma)));
    }
  }
  return map;
}

inline sal::SaliencyMap random_map(int w, int h, uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<float> dist(0.f, 1.f);
  sal::SaliencyMap map(w, h);
  for (float& v : map.values) v = dist(rng);
  return map;
}

inline sal::BinaryMask random_mask(int w, int h, uint32_t seed, double p = 0.5) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution dist(p);
  sal::BinaryMask m(w, h);
  for (auto& b : m.bits) b = dist(rng) ? 1 : 0;
  return m;
}

// smooth multi-blob texture with roughly natural statistics: blurred noise
// octaves plus a few random Gaussian blobs per channel
inline sal::Raster texture_image(int w, int h, uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<float> unit(0.f, 1.f);
  sal::Raster img(w, h, 3);
  std::vector<float> noise(static_cast<size_t>(w) * h);
  std::vector<float> coarse(noise.size()), fine(noise.size());
  for (int c = 0; c < 3; ++c) {
    for (float& v : noise) v = unit(rng);
    sal::seq::gaussian_blur(noise.data(), coarse.data(), w, h, 6.0, sal::Border::replicate);
    for (float& v : noise) v = unit(rng);
    sal::seq::gaussian_blur(noise.data(), fine.data(), w, h, 1.5, sal::Border::replicate);
    float* plane = img.plane(c);
    for (size_t i = 0; i < noise.size(); ++i) plane[i] = 0.7f * coarse[i] + 0.3f * fine[i];

    const int blobs = 2 + static_cast<int>(rng() % 3);
    for (int b = 0; b < blobs; ++b) {
      const double bx = unit(rng) * w, by = unit(rng) * h;
      const double bs = 3.0 + unit(rng) * 8.0;
      const double amp = 0.3 + 0.5 * unit(rng);
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          const double d2 = (x - bx) * (x - bx) + (y - by) * (y - by);
          plane[static_cast<size_t>(y) * w + x] +=
              static_cast<float>(amp * std::exp(-d2 / (2.0 * bs * bs)));
        }
      }
    }
    auto [lo, hi] = sal::seq::min_max(plane, noise.size());
    const float range = hi > lo ? hi - lo : 1.f;
    for (size_t i = 0; i < noise.size(); ++i) plane[i] = (plane[i] - lo) / range;
  }
  return img;
}

// --- metric oracles -------------------------------------------------------

struct PrRocPoint {
  double precision = 0, recall = 0, tpr = 0, fpr = 0;
  uint64_t m = 0, mg = 0;
};

inline int quantize_pixel(float v) {
  const long r = std::lround(255.0 * static_cast<double>(v));
  return static_cast<int>(std::clamp(r, 0L, 255L));
}

// exhaustive per-threshold counting straight from the definitions
inline std::array<PrRocPoint, 256> brute_force_counts(const sal::SaliencyMap& map,
                                                      const sal::BinaryMask& gt) {
  std::array<PrRocPoint, 256> out{};
  const size_t n = map.values.size();
  uint64_t g = 0;
  for (size_t i = 0; i < n; ++i) g += gt.bits[i] ? 1 : 0;
  for (int t = 0; t < 256; ++t) {
    uint64_t m = 0, mg = 0;
    for (size_t i = 0; i < n; ++i) {
      if (quantize_pixel(map.values[i]) >= t) {
        ++m;
        if (gt.bits[i]) ++mg;
      }
    }
    out[t].m = m;
    out[t].mg = mg;
    out[t].precision = m == 0 ? 1.0 : static_cast<double>(mg) / static_cast<double>(m);
    out[t].recall = static_cast<double>(mg) / static_cast<double>(g);
    out[t].tpr = out[t].recall;
    out[t].fpr = static_cast<double>(m - mg) / static_cast<double>(n - g);
  }
  return out;
}

// Mann-Whitney AUC of quantized saliency scores, object vs background
inline double rank_auc_oracle(const sal::SaliencyMap& map, const sal::BinaryMask& gt) {
  std::vector<std::pair<int, bool>> scored;
  scored.reserve(map.values.size());
  for (size_t i = 0; i < map.values.size(); ++i) {
    scored.emplace_back(quantize_pixel(map.values[i]), gt.bits[i] != 0);
  }
  std::sort(scored.begin(), scored.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  double rank_sum = 0;
  size_t npos = 0, i = 0;
  while (i < scored.size()) {
    size_t j = i;
    while (j + 1 < scored.size() && scored[j + 1].first == scored[i].first) ++j;
    const double midrank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (size_t k = i; k <= j; ++k) {
      if (scored[k].second) {
        rank_sum += midrank;
        ++npos;
      }
    }
    i = j + 1;
  }
  const double np = static_cast<double>(npos);
  const double nn = static_cast<double>(scored.size() - npos);
  return (rank_sum - np * (np + 1) / 2) / (np * nn);
}

// component count via label propagation to a fixpoint (not a flood fill)
inline int component_count_oracle(const sal::BinaryMask& mask, int connectivity) {
  const int w = mask.width, h = mask.height;
  std::vector<int> label(mask.bits.size(), -1);
  for (size_t i = 0; i < mask.bits.size(); ++i) {
    if (mask.bits[i]) label[i] = static_cast<int>(i);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const size_t i = static_cast<size_t>(y) * w + x;
        if (label[i] < 0) continue;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (connectivity == 4 && dx != 0 && dy != 0) continue;
            const int nx = x + dx, ny = y + dy;
            if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
            const size_t q = static_cast<size_t>(ny) * w + nx;
            if (label[q] >= 0 && label[q] < label[i]) {
              label[i] = label[q];
              changed = true;
            }
          }
        }
      }
    }
  }
  std::vector<int> roots;
  for (size_t i = 0; i < label.size(); ++i) {
    if (label[i] == static_cast<int>(i)) roots.push_back(label[i]);
  }
  return static_cast<int>(roots.size());
}

}  // namespace testsupport
