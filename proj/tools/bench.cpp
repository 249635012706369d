// Compares the OpenMP kernels against the serial reference on
// representative sizes and checks that both lanes produce identical bytes.

#include <omp.h>

#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <vector>

#include "sal/kernels.hpp"
#include "sal/raster.hpp"
#include "sal/segment.hpp"

namespace {

std::vector<float> random_field(int w, int h, uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<float> dist(0.f, 1.f);
  std::vector<float> v(static_cast<size_t>(w) * h);
  for (float& x : v) x = dist(rng);
  return v;
}

double time_best_of(int reps, const std::function<void()>& fn) {
  double best = 1e30;
  for (int r = 0; r < reps; ++r) {
    const double t0 = omp_get_wtime();
    fn();
    best = std::min(best, omp_get_wtime() - t0);
  }
  return best * 1e3;  // ms
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s %10.3f ms %10.3f ms %8.2fx   %s\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, equal ? "identical" : "DIFFER");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %13s %13s %9s   %s\n", "kernel", "serial", "openmp", "speedup", "check");

  {
    const int w = 1024, h = 768;
    const auto src = random_field(w, h, 1);
    std::vector<float> a(src.size()), b(src.size());
    const double ts = time_best_of(3, [&] {
      sal::seq::gaussian_blur(src.data(), a.data(), w, h, 30.0, sal::Border::zero);
    });
    const double tp = time_best_of(3, [&] {
      sal::par::gaussian_blur(src.data(), b.data(), w, h, 30.0, sal::Border::zero);
    });
    row("gaussian_blur 1024x768 s30", ts, tp,
        std::memcmp(a.data(), b.data(), a.size() * sizeof(float)) == 0);
  }

  {
    const int w = 400, h = 300, ow = 1600, oh = 1200;
    const auto src = random_field(w, h, 2);
    std::vector<float> a(static_cast<size_t>(ow) * oh), b(a.size());
    const double ts =
        time_best_of(5, [&] { sal::seq::resize_bilinear(src.data(), w, h, a.data(), ow, oh); });
    const double tp =
        time_best_of(5, [&] { sal::par::resize_bilinear(src.data(), w, h, b.data(), ow, oh); });
    row("resize 400x300 -> 4x", ts, tp,
        std::memcmp(a.data(), b.data(), a.size() * sizeof(float)) == 0);
  }

  {
    const int w = 1024, h = 768;
    const auto src = random_field(w, h, 3);
    std::vector<uint8_t> qa(src.size()), qb(src.size());
    uint32_t ha[256], hb[256];
    const double ts = time_best_of(5, [&] {
      sal::seq::quantize255(src.data(), qa.data(), qa.size());
      sal::seq::hist256(qa.data(), nullptr, qa.size(), ha);
    });
    const double tp = time_best_of(5, [&] {
      sal::par::quantize255(src.data(), qb.data(), qb.size());
      sal::par::hist256(qb.data(), nullptr, qb.size(), hb);
    });
    row("quantize+hist 1024x768", ts, tp, std::memcmp(ha, hb, sizeof(ha)) == 0);
  }

  {
    const int w = 1024, h = 768;
    const auto src = random_field(w, h, 4);
    std::pair<float, float> ra, rb;
    const double ts = time_best_of(5, [&] { ra = sal::seq::min_max(src.data(), src.size()); });
    const double tp = time_best_of(5, [&] { rb = sal::par::min_max(src.data(), src.size()); });
    row("min_max 1024x768", ts, tp, ra == rb);
  }

  {
    // full segmentation; its parallel parts are the smoothing and the edge
    // weights, the union-find stays serial
    sal::Raster img(400, 300, 3);
    for (int c = 0; c < 3; ++c) {
      auto f = random_field(400, 300, 5 + c);
      sal::seq::gaussian_blur(f.data(), img.plane(c), 400, 300, 4.0, sal::Border::replicate);
    }
    sal::Labeling la, lb;
    omp_set_num_threads(1);
    const double ts = time_best_of(3, [&] { la = sal::segment(img, {}); });
    omp_set_num_threads(omp_get_num_procs());
    const double tp = time_best_of(3, [&] { lb = sal::segment(img, {}); });
    row("segment 400x300 (1 thread)", ts, tp, la.labels == lb.labels && la.count == lb.count);
  }

  return 0;
}
