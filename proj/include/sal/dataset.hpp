#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sal/frontend.hpp"
#include "sal/raster.hpp"
#include "sal/segment.hpp"

namespace sal {

struct ManifestEntry {
  std::filesystem::path image;
  std::filesystem::path mask;       // ground-truth object mask; may be empty
  std::filesystem::path fixations;  // may be empty
  std::vector<std::filesystem::path> annotations;
  std::vector<std::filesystem::path> instances;  // in annotation order
};

struct DatasetManifest {
  std::filesystem::path root;  // directory of the manifest file
  std::vector<ManifestEntry> entries;
};

// Plain-text manifest: `entry` ... `end` blocks with `image`, `mask`,
// `fixations`, `annotation`, `instance` keys, paths relative to the
// manifest. Every referenced file must exist; otherwise IoError names the
// offending path.
DatasetManifest load_manifest(const std::filesystem::path& path);

// Index of the instance containing the fixation-map argmax; when the peak
// lies in no instance, the instance holding the highest fraction of total
// fixation mass wins.
int most_salient_object(const std::vector<BinaryMask>& instances, const SaliencyMap& fixmap);

enum class TruncateMode { zero_out, clip };

struct CenterBiasOptions {
  double sigma = 50.0;
  double truncate_above = 0.95;
  int canonical_width = 400;
  int canonical_height = 300;
  TruncateMode mode = TruncateMode::zero_out;
};

// An image is on-center when its object overlaps a centered Gaussian
// filter (built on the canonical grid, resized to the image, truncated
// above 0.95). Overlap is evaluated on the 8-bit quantized filter, so the
// far tail counts as zero.
bool center_bias_classify(const BinaryMask& gt, const CenterBiasOptions& opts = {});

// Distance from the bounding-box center of gt to the image center over
// half the image diagonal (pixel-center coordinates, so a corner pixel
// scores exactly 1).
double normalized_object_distance(const BinaryMask& gt);

// Object pixels over image pixels.
double size_ratio(const BinaryMask& gt);

// Fraction of fixation points whose pixel lies inside the instance.
double fixation_ratio(const BinaryMask& instance, const FixationSet& fix);

// Fraction of fixation-map mass inside the instance (alternative reading
// of the same statistic).
double fixation_mass_ratio(const BinaryMask& instance, const SaliencyMap& fixmap);

// fixation_ratio per instance, in annotation order.
std::vector<double> fixation_ratio_by_rank(const std::vector<BinaryMask>& instances,
                                           const FixationSet& fix);

struct ObjectStats {
  double normalized_distance = 0;
  double size_ratio = 0;
  int superpixels_object = 0;
  int superpixels_background = 0;
  int superpixels_all = 0;
  bool on_center = false;
  std::optional<double> fixation_ratio;
  std::optional<int> most_salient_instance;
  std::optional<double> agreement;
  int width = 0;
  int height = 0;
};

struct Histogram {
  std::string name;
  std::vector<double> edges;  // size bins+1
  std::vector<int> counts;    // size bins

  void add(double v);
};

Histogram uniform_histogram(const std::string& name, double lo, double hi, int bins);
Histogram log_histogram(const std::string& name, double lo, double hi, int bins);

struct EntryReport {
  size_t index = 0;
  std::string image;
  std::optional<ObjectStats> stats;  // absent when the entry failed
  std::string error;                 // failure description naming the path
};

struct DatasetReport {
  std::vector<EntryReport> entries;
  std::vector<Histogram> histograms;
  double fixmap_blur_sigma = 30.0;
};

// Per-entry statistics plus aggregate histograms; per-entry failures are
// collected, not fatal.
DatasetReport dataset_report(const DatasetManifest& manifest, const SegmentationParams& seg,
                             double fixmap_blur_sigma = 30.0);

}  // namespace sal
