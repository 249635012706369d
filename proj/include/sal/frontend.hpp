#pragma once

#include <filesystem>
#include <vector>

#include "sal/raster.hpp"

namespace sal {

struct Fixation {
  double x = 0;
  double y = 0;
  int observer = 0;
};

// Gaze points for one image, in pixel coordinates with origin top-left.
struct FixationSet {
  int width = 0;
  int height = 0;
  std::vector<Fixation> points;
};

// Parse `x,y,observer_id` lines (one-line header) and validate bounds.
FixationSet load_fixations(const std::filesystem::path& path, int width, int height);

// Rescale fixation coordinates into a w x h frame (used when pooling
// negatives from other images for shuffled AUC).
FixationSet map_to_frame(const FixationSet& fix, int w, int h);

// 8-bit grayscale map from disk, resized to the target size, normalized.
SaliencyMap load_external_map(const std::filesystem::path& path, int target_w, int target_h);

// Accumulate unit impulses at fixation pixels, blur with an isotropic
// Gaussian of std blur_sigma, normalize to [0,1].
SaliencyMap fixation_map(const FixationSet& fix, double blur_sigma);

// fixation_map over the points of every observer except held_out.
SaliencyMap inter_observer_map(const FixationSet& fix, int held_out_observer, double blur_sigma);

// Self-contained spectral-residual frontend so the pipeline runs without
// external model maps. Not part of the reference protocol; outputs are
// labeled "standin" wherever they are reported.
SaliencyMap spectral_standin(const Raster& image);

}  // namespace sal
