#include "sal/segment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "sal/error.hpp"
#include "sal/kernels.hpp"

namespace sal {

namespace {

struct Edge {
  float w;
  int32_t a, b;
};

struct UnionFind {
  std::vector<int32_t> parent;
  std::vector<int32_t> rank;
  std::vector<int32_t> size;
  int32_t sets;

  explicit UnionFind(int32_t n) : parent(n), rank(n, 0), size(n, 1), sets(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int32_t find(int32_t x) {
    int32_t root = x;
    while (parent[root] != root) root = parent[root];
    while (parent[x] != root) {
      const int32_t next = parent[x];
      parent[x] = root;
      x = next;
    }
    return root;
  }

  // returns the new root
  int32_t join(int32_t a, int32_t b) {
    if (rank[a] > rank[b]) std::swap(a, b);
    if (rank[a] == rank[b]) ++rank[b];
    parent[a] = b;
    size[b] += size[a];
    --sets;
    return b;
  }
};

}  // namespace

Labeling segment(const Raster& image, const SegmentationParams& params) {
  if (image.empty()) throw InvalidArgument("segment: empty image");
  if (params.sigma < 0 || params.k <= 0 || params.min_size < 1)
    throw InvalidArgument("segment: sigma >= 0, k > 0, min_size >= 1 required");

  const int w = image.width, h = image.height;
  const size_t px = image.pixels();
  const int channels = image.channels;

  // smooth each channel on the 0-255 scale
  std::vector<std::vector<float>> smooth(channels, std::vector<float>(px));
  {
    std::vector<float> scaled(px);
    for (int c = 0; c < channels; ++c) {
      const float* src = image.plane(c);
      const long long n = static_cast<long long>(px);
#pragma omp parallel for schedule(static)
      for (long long i = 0; i < n; ++i) scaled[i] = src[i] * 255.0f;
      par::gaussian_blur(scaled.data(), smooth[c].data(), w, h, params.sigma, Border::replicate);
    }
  }

  // 8-neighborhood edges in four direction blocks: right, down, down-right,
  // up-right. Each block is filled in parallel; the sort below fixes the
  // final order.
  const size_t n_right = static_cast<size_t>(w - 1) * h;
  const size_t n_down = static_cast<size_t>(w) * (h - 1);
  const size_t n_diag = (w > 1 && h > 1) ? static_cast<size_t>(w - 1) * (h - 1) : 0;
  std::vector<Edge> edges(n_right + n_down + 2 * n_diag);

  auto weight = [&](int32_t a, int32_t b) {
    double sum = 0.0;
    for (int c = 0; c < channels; ++c) {
      const double d = static_cast<double>(smooth[c][a]) - static_cast<double>(smooth[c][b]);
      sum += d * d;
    }
    return static_cast<float>(std::sqrt(sum));
  };

#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int32_t i = y * w + x;
      if (x < w - 1) {
        const size_t e = static_cast<size_t>(y) * (w - 1) + x;
        edges[e] = {weight(i, i + 1), i, i + 1};
      }
      if (y < h - 1) {
        const size_t e = n_right + static_cast<size_t>(y) * w + x;
        edges[e] = {weight(i, i + w), i, i + w};
      }
      if (x < w - 1 && y < h - 1) {
        const size_t e = n_right + n_down + static_cast<size_t>(y) * (w - 1) + x;
        edges[e] = {weight(i, i + w + 1), i, i + w + 1};
      }
      if (x < w - 1 && y > 0) {
        const size_t e = n_right + n_down + n_diag + static_cast<size_t>(y - 1) * (w - 1) + x;
        edges[e] = {weight(i, i - w + 1), i, i - w + 1};
      }
    }
  }

  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.a != b.a) return a.a < b.a;
    return a.b < b.b;
  });

  UnionFind uf(static_cast<int32_t>(px));
  std::vector<double> threshold(px, params.k);  // internal(C) + k/|C|, |C|=1
  for (const Edge& e : edges) {
    const int32_t a = uf.find(e.a);
    const int32_t b = uf.find(e.b);
    if (a == b) continue;
    if (e.w <= threshold[a] && e.w <= threshold[b]) {
      const int32_t root = uf.join(a, b);
      threshold[root] = e.w + params.k / uf.size[root];
    }
  }

  // enforce min_size: the first (lightest) edge out of a small component
  // merges it into its nearest neighbor, possibly chaining
  for (const Edge& e : edges) {
    const int32_t a = uf.find(e.a);
    const int32_t b = uf.find(e.b);
    if (a != b && (uf.size[a] < params.min_size || uf.size[b] < params.min_size)) uf.join(a, b);
  }

  Labeling out(w, h);
  std::vector<int32_t> dense(px, -1);
  int32_t next = 0;
  for (size_t i = 0; i < px; ++i) {
    const int32_t root = uf.find(static_cast<int32_t>(i));
    if (dense[root] < 0) dense[root] = next++;
    out.labels[i] = dense[root];
  }
  out.count = next;
  return out;
}

int count_superpixels_in(const Labeling& labeling, const BinaryMask& mask) {
  if (labeling.width != mask.width || labeling.height != mask.height)
    throw InvalidArgument("count_superpixels_in: dimension mismatch");
  std::vector<uint8_t> seen(static_cast<size_t>(labeling.count) + 1, 0);
  int n = 0;
  for (size_t i = 0; i < mask.bits.size(); ++i) {
    if (!mask.bits[i]) continue;
    const int32_t l = labeling.labels[i];
    if (!seen[l]) {
      seen[l] = 1;
      ++n;
    }
  }
  return n;
}

}  // namespace sal
