#pragma once

#include "sal/raster.hpp"

namespace sal {

// Graph-based superpixel segmentation parameters. k is interpreted on the
// 0-255 intensity scale, so the usual k values work directly on [0,1] data.
struct SegmentationParams {
  double sigma = 1.0;  // Gaussian pre-smoothing std-dev in pixels
  double k = 300.0;    // scale coefficient
  int min_size = 60;   // minimum segment size in pixels
};

// Felzenszwalb-Huttenlocher segmentation on the 8-neighborhood grid graph.
//
// Edge weights are Euclidean color distances after per-channel Gaussian
// smoothing. Edges are sorted ascending by (weight, source, destination);
// two components merge when the connecting weight is at most
// min(internal(C1) + k/|C1|, internal(C2) + k/|C2|). A post-pass merges any
// component below min_size across its minimum-weight connecting edge.
// Output labels are dense, assigned in row-major first-occurrence order.
Labeling segment(const Raster& image, const SegmentationParams& params);

// Number of distinct labels with at least one pixel inside the mask. A
// label straddling the mask boundary counts for both sides.
int count_superpixels_in(const Labeling& labeling, const BinaryMask& mask);

}  // namespace sal
