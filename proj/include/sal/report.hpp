#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sal/dataset.hpp"
#include "sal/metrics.hpp"

// CSV writers with fixed formatting and no timestamps, so identical inputs
// produce byte-identical files.

namespace sal {

std::string csv_num(double v);  // fixed 6-decimal representation

using MetaBlock = std::vector<std::pair<std::string, std::string>>;

// The knobs that affect emitted numbers, echoed into every table.
struct RunMeta {
  EvalOptions eval{};
  double beta = 0.7;
  SegmentationParams seg{};
  double overlap_fraction = 0.0;
  bool discard_border = true;
  bool keep_peak_fallback = false;
  std::string frontend = "external";
  double blur_sigma = 30.0;
};

// '# key=value' comment lines describing every mode in effect.
MetaBlock run_meta(const RunMeta& rm);
void write_meta(std::ostream& out, const MetaBlock& meta);

// header `threshold,x,y`; rows in curve-point order
void write_curve_csv(const std::filesystem::path& path, const MetaBlock& meta, const Curve& curve);

// dataset-level curve rebuilt from an EvalSummary's per-threshold arrays
Curve summary_pr_curve(const EvalSummary& s);
Curve summary_roc_curve(const EvalSummary& s);

void write_summary_csv(const std::filesystem::path& path, const MetaBlock& meta,
                       const std::string& model, const EvalSummary& summary);

struct PerImageRow {
  std::string name;
  ImageEval eval;
};
void write_per_image_csv(const std::filesystem::path& path, const MetaBlock& meta,
                         const std::vector<PerImageRow>& rows);

struct SweepRow {
  std::string param;
  std::string value;
  EvalSummary summary;
};
void write_sweep_csv(const std::filesystem::path& path, const MetaBlock& meta,
                     const std::vector<SweepRow>& rows);
void write_f_curve_csv(const std::filesystem::path& path, const MetaBlock& meta,
                       const std::vector<SweepRow>& rows);

void write_stats_csv(const std::filesystem::path& path, const MetaBlock& meta,
                     const DatasetReport& report,
                     const std::vector<std::string>& sauc_column);
void write_histograms_csv(const std::filesystem::path& path, const MetaBlock& meta,
                          const DatasetReport& report);
void write_rank_ratios_csv(const std::filesystem::path& path, const MetaBlock& meta,
                           const std::vector<std::pair<size_t, std::vector<double>>>& rows);

}  // namespace sal
