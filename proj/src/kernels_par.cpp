#include "sal/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace sal {

std::vector<double> gaussian_taps(double sigma) {
  if (!(sigma > 0.0)) return {};
  const int radius = std::max(1, static_cast<int>(std::ceil(4.0 * sigma)));
  std::vector<double> taps(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double v = std::exp(-0.5 * (i / sigma) * (i / sigma));
    taps[i + radius] = v;
    sum += v;
  }
  for (double& t : taps) t /= sum;
  return taps;
}

namespace par {

void gaussian_blur(const float* src, float* dst, int w, int h, double sigma, Border border) {
  const std::vector<double> taps = gaussian_taps(sigma);
  const size_t n = static_cast<size_t>(w) * h;
  if (taps.empty()) {
    std::memmove(dst, src, n * sizeof(float));
    return;
  }
  const int r = (static_cast<int>(taps.size()) - 1) / 2;
  std::vector<float> tmp(n);

  // horizontal pass
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const float* row = src + static_cast<size_t>(y) * w;
    float* out = tmp.data() + static_cast<size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int k = -r; k <= r; ++k) {
        const int xx = x + k;
        double s;
        if (xx < 0 || xx >= w)
          s = (border == Border::replicate) ? row[std::clamp(xx, 0, w - 1)] : 0.0;
        else
          s = row[xx];
        acc += taps[k + r] * s;
      }
      out[x] = static_cast<float>(acc);
    }
  }

  // vertical pass
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    float* out = dst + static_cast<size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int k = -r; k <= r; ++k) {
        const int yy = y + k;
        double s;
        if (yy < 0 || yy >= h)
          s = (border == Border::replicate)
                  ? tmp[static_cast<size_t>(std::clamp(yy, 0, h - 1)) * w + x]
                  : 0.0;
        else
          s = tmp[static_cast<size_t>(yy) * w + x];
        acc += taps[k + r] * s;
      }
      out[x] = static_cast<float>(acc);
    }
  }
}

void resize_bilinear(const float* src, int sw, int sh, float* dst, int dw, int dh) {
  const double sx = static_cast<double>(sw) / dw;
  const double sy = static_cast<double>(sh) / dh;
#pragma omp parallel for schedule(static)
  for (int y = 0; y < dh; ++y) {
    const double fy = (y + 0.5) * sy - 0.5;
    const int y0 = static_cast<int>(std::floor(fy));
    const double wy = fy - y0;
    const int y0c = std::clamp(y0, 0, sh - 1);
    const int y1c = std::clamp(y0 + 1, 0, sh - 1);
    for (int x = 0; x < dw; ++x) {
      const double fx = (x + 0.5) * sx - 0.5;
      const int x0 = static_cast<int>(std::floor(fx));
      const double wx = fx - x0;
      const int x0c = std::clamp(x0, 0, sw - 1);
      const int x1c = std::clamp(x0 + 1, 0, sw - 1);
      const double v00 = src[static_cast<size_t>(y0c) * sw + x0c];
      const double v01 = src[static_cast<size_t>(y0c) * sw + x1c];
      const double v10 = src[static_cast<size_t>(y1c) * sw + x0c];
      const double v11 = src[static_cast<size_t>(y1c) * sw + x1c];
      const double top = v00 + wx * (v01 - v00);
      const double bot = v10 + wx * (v11 - v10);
      dst[static_cast<size_t>(y) * dw + x] =
          static_cast<float>(std::clamp(top + wy * (bot - top), 0.0, 1.0));
    }
  }
}

void quantize255(const float* v, uint8_t* q, std::size_t n) {
  const long long sn = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < sn; ++i) {
    const long r = std::lround(255.0 * static_cast<double>(v[i]));
    q[i] = static_cast<uint8_t>(std::clamp(r, 0L, 255L));
  }
}

void hist256(const uint8_t* q, const uint8_t* keep, std::size_t n, uint32_t hist[256]) {
  std::memset(hist, 0, 256 * sizeof(uint32_t));
  const long long sn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) reduction(+ : hist[:256])
  for (long long i = 0; i < sn; ++i) {
    if (!keep || keep[i]) ++hist[q[i]];
  }
}

std::pair<float, float> min_max(const float* v, std::size_t n) {
  if (n == 0) return {0.f, 0.f};
  float lo = v[0];
  float hi = v[0];
  const long long sn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) reduction(min : lo) reduction(max : hi)
  for (long long i = 0; i < sn; ++i) {
    lo = std::min(lo, v[i]);
    hi = std::max(hi, v[i]);
  }
  return {lo, hi};
}

std::uint64_t count_true(const uint8_t* a, std::size_t n) {
  std::uint64_t c = 0;
  const long long sn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) reduction(+ : c)
  for (long long i = 0; i < sn; ++i) c += a[i] ? 1 : 0;
  return c;
}

std::uint64_t count_true_and(const uint8_t* a, const uint8_t* b, std::size_t n) {
  std::uint64_t c = 0;
  const long long sn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) reduction(+ : c)
  for (long long i = 0; i < sn; ++i) c += (a[i] && b[i]) ? 1 : 0;
  return c;
}

}  // namespace par
}  // namespace sal
