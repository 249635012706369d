#include <cmath>
#include <limits>

#include "doctest.h"
#include "sal/error.hpp"
#include "sal/raster.hpp"
#include "support.hpp"

using namespace sal;

TEST_CASE("normalize_map rescales affinely") {
  SaliencyMap m(3, 1);
  m.values = {0.2f, 0.4f, 0.6f};
  const SaliencyMap n = normalize_map(m);
  CHECK(n.values[0] == doctest::Approx(0.0));
  CHECK(n.values[1] == doctest::Approx(0.5));
  CHECK(n.values[2] == doctest::Approx(1.0));
}

TEST_CASE("normalize_map maps a constant to zeros") {
  SaliencyMap m(2, 1);
  m.values = {0.7f, 0.7f};
  const SaliencyMap n = normalize_map(m);
  CHECK(n.values[0] == 0.f);
  CHECK(n.values[1] == 0.f);
}

TEST_CASE("normalize_map is the identity on [0,1]-spanning input") {
  SaliencyMap m(2, 1);
  m.values = {0.f, 1.f};
  const SaliencyMap n = normalize_map(m);
  CHECK(n.values[0] == 0.f);
  CHECK(n.values[1] == 1.f);
}

TEST_CASE("normalize_map rejects non-finite values") {
  SaliencyMap m(2, 1);
  m.values = {0.f, std::numeric_limits<float>::quiet_NaN()};
  CHECK_THROWS_AS(normalize_map(m), InvalidInput);
  m.values = {0.f, std::numeric_limits<float>::infinity()};
  CHECK_THROWS_AS(normalize_map(m), InvalidInput);
}

TEST_CASE("normalize_map is idempotent on non-constant maps") {
  for (uint32_t seed : {1u, 2u, 3u}) {
    const SaliencyMap m = testsupport::random_map(9, 7, seed);
    const SaliencyMap once = normalize_map(m);
    const SaliencyMap twice = normalize_map(once);
    CHECK(once.values == twice.values);
  }
}

TEST_CASE("resize_bilinear identity and constants") {
  SaliencyMap m(2, 2);
  m.values = {0.1f, 0.9f, 0.4f, 0.6f};
  CHECK(resize_bilinear(m, 2, 2).values == m.values);

  SaliencyMap c(3, 2, 0.5f);
  const SaliencyMap r = resize_bilinear(c, 7, 9);
  for (float v : r.values) CHECK(v == 0.5f);
}

TEST_CASE("resize_bilinear interpolates a ramp monotonically") {
  SaliencyMap m(2, 1);
  m.values = {0.f, 1.f};
  const SaliencyMap r = resize_bilinear(m, 4, 1);
  REQUIRE(r.values.size() == 4);
  CHECK(r.values[0] == doctest::Approx(0.0));
  CHECK(r.values[1] == doctest::Approx(0.25));
  CHECK(r.values[2] == doctest::Approx(0.75));
  CHECK(r.values[3] == doctest::Approx(1.0));
  for (size_t i = 1; i < r.values.size(); ++i) CHECK(r.values[i] >= r.values[i - 1]);
}

TEST_CASE("resize_bilinear rejects zero target dimensions") {
  SaliencyMap m(2, 2, 0.f);
  CHECK_THROWS_AS(resize_bilinear(m, 0, 4), InvalidArgument);
  CHECK_THROWS_AS(resize_bilinear(m, 4, 0), InvalidArgument);
}

TEST_CASE("resize_bilinear keeps values in [0,1]") {
  const SaliencyMap m = testsupport::random_map(13, 9, 77);
  const SaliencyMap r = resize_bilinear(m, 31, 5);
  for (float v : r.values) {
    CHECK(v >= 0.f);
    CHECK(v <= 1.f);
  }
}

TEST_CASE("connected_components basics") {
  CHECK(connected_components(BinaryMask(4, 4), 4).count == 0);

  BinaryMask two(8, 4);
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < 2; ++x) {
      two.at(x, y) = 1;
      two.at(x + 5, y + 2) = 1;
    }
  }
  CHECK(connected_components(two, 4).count == 2);
  CHECK(connected_components(two, 8).count == 2);

  BinaryMask single(3, 3);
  single.at(1, 1) = 1;
  const Labeling l = connected_components(single, 8);
  CHECK(l.count == 1);
  CHECK(l.at(1, 1) == 1);
}

TEST_CASE("connectivity 8 joins diagonals, 4 does not") {
  BinaryMask diag(2, 2);
  diag.at(0, 0) = 1;
  diag.at(1, 1) = 1;
  CHECK(connected_components(diag, 4).count == 2);
  CHECK(connected_components(diag, 8).count == 1);
  CHECK_THROWS_AS(connected_components(diag, 6), InvalidArgument);
}

TEST_CASE("component count matches the label-propagation oracle") {
  for (uint32_t seed = 0; seed < 60; ++seed) {
    const BinaryMask m = testsupport::random_mask(16, 16, seed, 0.45);
    for (int conn : {4, 8}) {
      const Labeling l = connected_components(m, conn);
      CHECK(l.count == testsupport::component_count_oracle(m, conn));
      // labels partition the true-set
      for (size_t i = 0; i < m.bits.size(); ++i) {
        if (m.bits[i]) {
          CHECK(l.labels[i] >= 1);
          CHECK(l.labels[i] <= l.count);
        } else {
          CHECK(l.labels[i] == 0);
        }
      }
    }
  }
}

TEST_CASE("fill_holes closes an interior hole") {
  BinaryMask m = testsupport::rect_mask(7, 7, 1, 1, 5, 5);
  m.at(3, 3) = 0;
  const BinaryMask filled = fill_holes(m);
  CHECK(filled.at(3, 3) == 1);
  CHECK(filled.count_true() == 25);
}

TEST_CASE("fill_holes keeps border-connected background") {
  // false region touching the border is not a hole
  BinaryMask m = testsupport::rect_mask(7, 7, 1, 0, 5, 5);
  m.at(3, 0) = 0;
  m.at(3, 1) = 0;
  m.at(3, 2) = 0;
  const BinaryMask filled = fill_holes(m);
  CHECK(filled.bits == m.bits);
}

TEST_CASE("fill_holes on all-true is the identity") {
  const BinaryMask m(5, 4, true);
  CHECK(fill_holes(m).bits == m.bits);
}

TEST_CASE("fill_holes is idempotent and monotone") {
  for (uint32_t seed = 0; seed < 30; ++seed) {
    const BinaryMask m = testsupport::random_mask(16, 16, 100 + seed, 0.55);
    const BinaryMask once = fill_holes(m);
    CHECK(fill_holes(once).bits == once.bits);
    for (size_t i = 0; i < m.bits.size(); ++i) {
      if (m.bits[i]) CHECK(once.bits[i] == 1);
    }
  }
}
