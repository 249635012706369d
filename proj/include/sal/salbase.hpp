#pragma once

#include <vector>

#include "sal/raster.hpp"
#include "sal/segment.hpp"

namespace sal {

struct SalBaseParams {
  double beta = 0.7;              // saliency threshold in [0,1]
  SegmentationParams seg{};
  double overlap_fraction = 0.0;  // a superpixel is selected iff overlap/size > this
  bool discard_border = true;     // drop selected superpixels touching the image boundary
  bool keep_peak_fallback = false;  // when everything is discarded, keep the peak's superpixel
};

enum class EmptyReason { none, no_overlap, border_discard };

struct SalBaseResult {
  BinaryMask mask;
  std::vector<int32_t> selected_labels;  // surviving labels, ascending
  int peak_x = 0;
  int peak_y = 0;
  EmptyReason empty_reason = EmptyReason::none;
  bool fallback_used = false;
};

// true where value >= beta
BinaryMask truncate_saliency(const SaliencyMap& map, double beta);

// Labels whose overlap with the truncated mask exceeds overlap_fraction of
// their size; with the default fraction 0 this is "any overlap". Border
// discard (params.discard_border) is applied to the selection afterwards.
std::vector<int32_t> select_superpixels(const Labeling& labeling, const BinaryMask& truncated,
                                        const SalBaseParams& params);

// Full pipeline: normalize map, segment image, threshold at beta, select
// overlapping superpixels, rasterize, fill holes.
SalBaseResult run_salbase(const Raster& image, const SaliencyMap& map,
                          const SalBaseParams& params);

const char* empty_reason_name(EmptyReason r);

}  // namespace sal
