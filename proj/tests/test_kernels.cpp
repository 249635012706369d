#include <omp.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "sal/kernels.hpp"
#include "support.hpp"

using namespace sal;

namespace {

bool same_bits(const std::vector<float>& a, const std::vector<float>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(float)) == 0;
}

}  // namespace

TEST_CASE("gaussian taps are normalized and symmetric") {
  const auto taps = gaussian_taps(2.0);
  REQUIRE(taps.size() % 2 == 1);
  double sum = 0;
  for (double t : taps) sum += t;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  for (size_t i = 0; i < taps.size() / 2; ++i) CHECK(taps[i] == taps[taps.size() - 1 - i]);
  CHECK(gaussian_taps(0.0).empty());
}

TEST_CASE("parallel kernels match the serial reference bit for bit") {
  const int w = 83, h = 61;
  const auto map = testsupport::random_map(w, h, 42);

  SUBCASE("gaussian_blur, both borders") {
    for (Border border : {Border::zero, Border::replicate}) {
      for (double sigma : {0.8, 3.0, 17.0}) {
        std::vector<float> a(map.values.size()), b(map.values.size());
        seq::gaussian_blur(map.values.data(), a.data(), w, h, sigma, border);
        par::gaussian_blur(map.values.data(), b.data(), w, h, sigma, border);
        CHECK(same_bits(a, b));
      }
    }
  }

  SUBCASE("resize_bilinear") {
    for (auto [ow, oh] : {std::pair{w, h}, {191, 17}, {16, 180}, {1, 1}}) {
      std::vector<float> a(static_cast<size_t>(ow) * oh), b(a.size());
      seq::resize_bilinear(map.values.data(), w, h, a.data(), ow, oh);
      par::resize_bilinear(map.values.data(), w, h, b.data(), ow, oh);
      CHECK(same_bits(a, b));
    }
  }

  SUBCASE("quantize + hist + min_max + counts") {
    std::vector<uint8_t> qa(map.values.size()), qb(map.values.size());
    seq::quantize255(map.values.data(), qa.data(), qa.size());
    par::quantize255(map.values.data(), qb.data(), qb.size());
    CHECK(qa == qb);

    const auto keep = testsupport::random_mask(w, h, 7);
    uint32_t ha[256], hb[256];
    seq::hist256(qa.data(), keep.bits.data(), qa.size(), ha);
    par::hist256(qb.data(), keep.bits.data(), qb.size(), hb);
    CHECK(std::memcmp(ha, hb, sizeof(ha)) == 0);

    CHECK(seq::min_max(map.values.data(), map.values.size()) ==
          par::min_max(map.values.data(), map.values.size()));

    const auto other = testsupport::random_mask(w, h, 8);
    CHECK(seq::count_true(keep.bits.data(), keep.bits.size()) ==
          par::count_true(keep.bits.data(), keep.bits.size()));
    CHECK(seq::count_true_and(keep.bits.data(), other.bits.data(), keep.bits.size()) ==
          par::count_true_and(keep.bits.data(), other.bits.data(), keep.bits.size()));
  }
}

TEST_CASE("parallel kernels are invariant to the thread count") {
  const int w = 97, h = 53;
  const auto map = testsupport::random_map(w, h, 5);
  std::vector<float> one(map.values.size()), many(map.values.size());

  const int old = omp_get_max_threads();
  omp_set_num_threads(1);
  par::gaussian_blur(map.values.data(), one.data(), w, h, 4.0, Border::zero);
  omp_set_num_threads(8);
  par::gaussian_blur(map.values.data(), many.data(), w, h, 4.0, Border::zero);
  omp_set_num_threads(old);
  CHECK(same_bits(one, many));
}

TEST_CASE("blur agrees with a direct 2-D convolution") {
  const int w = 15, h = 11;
  const double sigma = 1.7;
  const auto map = testsupport::random_map(w, h, 11);
  std::vector<float> fast(map.values.size());
  par::gaussian_blur(map.values.data(), fast.data(), w, h, sigma, Border::zero);

  const auto taps = gaussian_taps(sigma);
  const int r = (static_cast<int>(taps.size()) - 1) / 2;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0;
      for (int ky = -r; ky <= r; ++ky) {
        for (int kx = -r; kx <= r; ++kx) {
          const int xx = x + kx, yy = y + ky;
          if (xx < 0 || xx >= w || yy < 0 || yy >= h) continue;
          acc += taps[ky + r] * taps[kx + r] * map.at(xx, yy);
        }
      }
      CHECK(fast[static_cast<size_t>(y) * w + x] == doctest::Approx(acc).epsilon(1e-5));
    }
  }
}

TEST_CASE("blur preserves mass with zero border away from edges") {
  // an interior impulse spreads but keeps its total weight
  const int w = 41, h = 41;
  std::vector<float> src(static_cast<size_t>(w) * h, 0.f), dst(src.size());
  src[20 * 41 + 20] = 1.f;
  par::gaussian_blur(src.data(), dst.data(), w, h, 2.0, Border::zero);
  double sum = 0;
  for (float v : dst) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
  // peak stays at the impulse
  size_t peak = 0;
  for (size_t i = 0; i < dst.size(); ++i) {
    if (dst[i] > dst[peak]) peak = i;
  }
  CHECK(peak == 20u * 41u + 20u);
}
