#include <algorithm>

#include "doctest.h"
#include "sal/error.hpp"
#include "sal/metrics.hpp"
#include "sal/salbase.hpp"
#include "support.hpp"

using namespace sal;

namespace {

bool is_subset(const std::vector<int32_t>& sub, const std::vector<int32_t>& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace

TEST_CASE("truncate_saliency thresholds inclusively") {
  SaliencyMap ramp(4, 1);
  ramp.values = {0.f, 0.5f, 0.8f, 1.f};

  CHECK(truncate_saliency(ramp, 0.0).count_true() == 4);  // beta=0 keeps everything
  const BinaryMask at7 = truncate_saliency(ramp, 0.7);
  CHECK(at7.bits == std::vector<uint8_t>{0, 0, 1, 1});
  const BinaryMask at1 = truncate_saliency(ramp, 1.0);
  CHECK(at1.bits == std::vector<uint8_t>{0, 0, 0, 1});  // exactly the argmax pixels
  CHECK_THROWS_AS(truncate_saliency(ramp, 1.5), InvalidArgument);
}

TEST_CASE("select_superpixels basic selections") {
  // label 1 is an interior 3x3 block; labels 0 and 2 split the border ring
  Labeling l(7, 5);
  l.count = 3;
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 7; ++x) {
      int32_t lab;
      if (x >= 2 && x <= 4 && y >= 1 && y <= 3) lab = 1;
      else if (x <= 1 || (x <= 4 && y == 0)) lab = 0;
      else lab = 2;
      l.labels[static_cast<size_t>(y) * 7 + x] = lab;
    }
  }
  SalBaseParams params;
  params.discard_border = false;

  CHECK(select_superpixels(l, BinaryMask(7, 5), params).empty());

  const auto all = select_superpixels(l, BinaryMask(7, 5, true), params);
  CHECK(all == std::vector<int32_t>{0, 1, 2});

  // only the interior block overlaps; the two ring segments touch borders
  BinaryMask mid(7, 5);
  mid.at(3, 2) = 1;
  params.discard_border = true;
  CHECK(select_superpixels(l, mid, params) == std::vector<int32_t>{1});
  const auto everything = select_superpixels(l, BinaryMask(7, 5, true), params);
  CHECK(everything == std::vector<int32_t>{1});

  CHECK_THROWS_AS(select_superpixels(l, BinaryMask(2, 2), params), InvalidArgument);
}

TEST_CASE("overlap_fraction gates selection strictly") {
  Labeling l(4, 1);
  l.count = 2;
  l.labels = {0, 0, 1, 1};
  BinaryMask half(4, 1);
  half.at(0, 0) = 1;  // covers half of label 0

  SalBaseParams params;
  params.discard_border = false;
  params.overlap_fraction = 0.4;
  CHECK(select_superpixels(l, half, params) == std::vector<int32_t>{0});
  params.overlap_fraction = 0.5;  // strict: 0.5 of the pixels is not > 0.5
  CHECK(select_superpixels(l, half, params).empty());
}

TEST_CASE("run_salbase recovers a centered bright square") {
  const Raster img = testsupport::square_image(128, 128, 49, 49, 30, 0.8f, 0.2f);
  const SaliencyMap map = testsupport::gaussian_map(128, 128, 64, 64, 12.0);
  SalBaseParams params;
  params.beta = 0.7;
  // no pre-smoothing: a noiseless step edge otherwise shatters into
  // iso-intensity rings and the square/background geometry is lost
  params.seg.sigma = 0.0;

  const SalBaseResult res = run_salbase(img, map, params);
  CHECK(res.peak_x == 64);
  CHECK(res.peak_y == 64);
  CHECK(res.empty_reason == EmptyReason::none);

  const BinaryMask square = testsupport::rect_mask(128, 128, 49, 49, 78, 78);
  CHECK(overlap_omega(res.mask, square) >= 0.9);
}

TEST_CASE("run_salbase reports no-overlap for a zero map") {
  const Raster img = testsupport::square_image(64, 64, 20, 20, 16, 0.8f, 0.2f);
  const SaliencyMap zero(64, 64, 0.f);
  SalBaseParams params;
  params.beta = 0.7;
  const SalBaseResult res = run_salbase(img, zero, params);
  CHECK(res.mask.empty_mask());
  CHECK(res.empty_reason == EmptyReason::no_overlap);
}

TEST_CASE("run_salbase discards a border-flush object") {
  const Raster img = testsupport::square_image(128, 128, 0, 49, 30, 0.8f, 0.2f);
  const SaliencyMap map = testsupport::gaussian_map(128, 128, 15, 64, 8.0);
  SalBaseParams params;
  params.beta = 0.7;
  params.seg.sigma = 0.0;
  const SalBaseResult res = run_salbase(img, map, params);
  CHECK(res.mask.empty_mask());
  CHECK(res.empty_reason == EmptyReason::border_discard);

  SUBCASE("the peak fallback keeps the object instead") {
    params.keep_peak_fallback = true;
    const SalBaseResult kept = run_salbase(img, map, params);
    CHECK_FALSE(kept.mask.empty_mask());
    CHECK(kept.fallback_used);
    CHECK(kept.empty_reason == EmptyReason::none);
    CHECK(kept.mask.at(15, 64) == 1);
  }
}

TEST_CASE("selection shrinks as beta grows") {
  for (uint32_t seed = 0; seed < 6; ++seed) {
    const Raster img = testsupport::texture_image(48, 48, 500 + seed);
    SaliencyMap map = testsupport::gaussian_map(48, 48, 14 + (seed * 5) % 20, 20, 10.0);
    SalBaseParams params;
    params.seg = {1.0, 100.0, 20};

    params.beta = 0.5;
    const auto sel5 = run_salbase(img, map, params).selected_labels;
    params.beta = 0.7;
    const auto sel7 = run_salbase(img, map, params).selected_labels;
    params.beta = 0.9;
    const auto sel9 = run_salbase(img, map, params).selected_labels;

    CHECK(is_subset(sel9, sel7));
    CHECK(is_subset(sel7, sel5));
  }
}

TEST_CASE("run_salbase equals the composed stages") {
  const Raster img = testsupport::texture_image(40, 40, 21);
  const SaliencyMap map = normalize_map(testsupport::gaussian_map(40, 40, 20, 18, 9.0));
  SalBaseParams params;
  params.beta = 0.6;
  params.seg = {1.0, 100.0, 20};

  const SalBaseResult res = run_salbase(img, map, params);

  const Labeling labeling = segment(img, params.seg);
  const BinaryMask truncated = truncate_saliency(normalize_map(map), params.beta);
  const auto selected = select_superpixels(labeling, truncated, params);
  BinaryMask stage_mask(40, 40);
  for (size_t i = 0; i < stage_mask.bits.size(); ++i) {
    stage_mask.bits[i] =
        std::binary_search(selected.begin(), selected.end(), labeling.labels[i]) ? 1 : 0;
  }
  stage_mask = fill_holes(stage_mask);

  CHECK(res.selected_labels == selected);
  CHECK(res.mask.bits == stage_mask.bits);
}

TEST_CASE("border superpixels never leak into the output mask") {
  const Raster img = testsupport::texture_image(40, 40, 77);
  const SaliencyMap map = testsupport::gaussian_map(40, 40, 20, 20, 12.0);
  SalBaseParams params;
  params.beta = 0.5;
  params.seg = {1.0, 100.0, 20};
  const SalBaseResult res = run_salbase(img, map, params);

  const Labeling labeling = segment(img, params.seg);
  BinaryMask selected_union(40, 40);
  for (size_t i = 0; i < selected_union.bits.size(); ++i) {
    selected_union.bits[i] = std::binary_search(res.selected_labels.begin(),
                                                res.selected_labels.end(), labeling.labels[i]);
  }
  // anything beyond the selected union must come from hole filling
  CHECK(res.mask.bits == fill_holes(selected_union).bits);
  for (int32_t l : res.selected_labels) {
    for (int x = 0; x < 40; ++x) {
      CHECK(labeling.at(x, 0) != l);
      CHECK(labeling.at(x, 39) != l);
    }
    for (int y = 0; y < 40; ++y) {
      CHECK(labeling.at(0, y) != l);
      CHECK(labeling.at(39, y) != l);
    }
  }
}

TEST_CASE("run_salbase is deterministic") {
  const Raster img = testsupport::texture_image(40, 40, 31);
  const SaliencyMap map = testsupport::gaussian_map(40, 40, 22, 20, 8.0);
  SalBaseParams params;
  params.seg = {1.0, 100.0, 20};
  const SalBaseResult a = run_salbase(img, map, params);
  const SalBaseResult b = run_salbase(img, map, params);
  CHECK(a.mask.bits == b.mask.bits);
  CHECK(a.selected_labels == b.selected_labels);
  CHECK(a.peak_x == b.peak_x);
  CHECK(a.peak_y == b.peak_y);
}
