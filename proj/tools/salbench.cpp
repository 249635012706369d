// Batch driver: segment, eval, sweep, stats, fixmap over a dataset manifest.
//
// Exit codes: 0 success, 1 partial failure (some entries errored), 2 config
// error. Outputs are byte-stable: re-running with identical inputs and
// worker counts produces identical files.

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sal/dataset.hpp"
#include "sal/error.hpp"
#include "sal/frontend.hpp"
#include "sal/image_io.hpp"
#include "sal/metrics.hpp"
#include "sal/report.hpp"
#include "sal/salbase.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  std::string command;
  fs::path manifest_path;
  fs::path out_dir;
  std::string frontend = "standin";  // external | fixations | interobs | standin
  fs::path maps_dir;
  std::string map_suffix = ".pgm";
  double blur_sigma = 30.0;
  int holdout = -1;
  sal::SalBaseParams salbase{};
  sal::EvalOptions eval{};
  std::string f_mode = "max-threshold";
  std::string fpr = "standard";
  double overlap_fraction = 0.0;
  bool keep_peak_fallback = false;
  bool no_discard_border = false;
  int workers = std::max(1, omp_get_max_threads());
  bool save_labels = false;
  std::string model_name;
  std::string sweep_param = "beta";
  std::vector<std::string> sweep_values;
};

std::string stem_of(const fs::path& p) { return p.stem().string(); }

void parse_eval_modes(Options& o) {
  if (o.fpr == "standard")
    o.eval.fpr = sal::FprVariant::standard;
  else if (o.fpr == "paper-printed")
    o.eval.fpr = sal::FprVariant::paper_printed;
  else
    throw sal::InvalidArgument("--fpr must be 'standard' or 'paper-printed'");

  if (o.f_mode == "max-threshold") {
    o.eval.f_fixed = false;
  } else if (o.f_mode.rfind("fixed:", 0) == 0) {
    o.eval.f_fixed = true;
    o.eval.f_fixed_threshold = std::stoi(o.f_mode.substr(6));
    if (o.eval.f_fixed_threshold < 0 || o.eval.f_fixed_threshold > 255)
      throw sal::InvalidArgument("--f-mode fixed threshold must be in 0..255");
  } else {
    throw sal::InvalidArgument("--f-mode must be 'max-threshold' or 'fixed:T'");
  }

  o.salbase.overlap_fraction = o.overlap_fraction;
  o.salbase.keep_peak_fallback = o.keep_peak_fallback;
  o.salbase.discard_border = !o.no_discard_border;
}

json options_json(const Options& o) {
  json j;
  j["command"] = o.command;
  j["manifest"] = o.manifest_path.string();
  j["frontend"] = o.frontend;
  j["maps"] = o.maps_dir.string();
  j["blur_sigma"] = o.blur_sigma;
  j["holdout"] = o.holdout;
  j["beta"] = o.salbase.beta;
  j["seg"] = {{"sigma", o.salbase.seg.sigma},
              {"k", o.salbase.seg.k},
              {"min_size", o.salbase.seg.min_size}};
  j["overlap_fraction"] = o.salbase.overlap_fraction;
  j["discard_border"] = o.salbase.discard_border;
  j["keep_peak_fallback"] = o.salbase.keep_peak_fallback;
  j["alpha"] = o.eval.alpha;
  j["fpr"] = o.fpr;
  j["f_mode"] = o.f_mode;
  j["workers"] = o.workers;
  return j;
}

// startup-stage: creates the output directory and proves it writable
void prepare_out_dir(const Options& o) {
  fs::create_directories(o.out_dir);
  std::ofstream cfg(o.out_dir / "run_config.json", std::ios::binary);
  if (!cfg) throw sal::IoError("output directory not writable: " + o.out_dir.string());
  cfg << options_json(o).dump(2) << "\n";
}

sal::MetaBlock meta_for(const Options& o) {
  sal::RunMeta rm;
  rm.eval = o.eval;
  rm.beta = o.salbase.beta;
  rm.seg = o.salbase.seg;
  rm.overlap_fraction = o.salbase.overlap_fraction;
  rm.discard_border = o.salbase.discard_border;
  rm.keep_peak_fallback = o.salbase.keep_peak_fallback;
  rm.frontend = o.frontend;
  rm.blur_sigma = o.blur_sigma;
  return sal::run_meta(rm);
}

sal::SaliencyMap frontend_map(const Options& o, const sal::ManifestEntry& entry,
                              const sal::Raster& image) {
  if (o.frontend == "external") {
    const fs::path p = o.maps_dir / (stem_of(entry.image) + o.map_suffix);
    return sal::load_external_map(p, image.width, image.height);
  }
  if (o.frontend == "fixations" || o.frontend == "interobs") {
    if (entry.fixations.empty())
      throw sal::EmptyInput("entry has no fixation file: " + entry.image.string());
    const sal::FixationSet fix =
        sal::load_fixations(entry.fixations, image.width, image.height);
    if (o.frontend == "interobs")
      return sal::inter_observer_map(fix, o.holdout, o.blur_sigma);
    return sal::fixation_map(fix, o.blur_sigma);
  }
  if (o.frontend == "standin") return sal::spectral_standin(image);
  throw sal::InvalidArgument("unknown frontend: " + o.frontend);
}

struct EntryOutcome {
  std::string line;   // per-entry stdout report, printed in manifest order
  std::string error;  // nonempty on failure
};

int report_outcomes(const std::vector<EntryOutcome>& outcomes) {
  int failures = 0;
  for (const EntryOutcome& oc : outcomes) {
    if (!oc.line.empty()) std::cout << oc.line << "\n";
    if (!oc.error.empty()) {
      std::cerr << "error: " << oc.error << "\n";
      ++failures;
    }
  }
  return failures;
}

int cmd_segment(const Options& o) {
  const sal::DatasetManifest manifest = sal::load_manifest(o.manifest_path);
  prepare_out_dir(o);

  std::vector<EntryOutcome> outcomes(manifest.entries.size());
  const long long n = static_cast<long long>(manifest.entries.size());
#pragma omp parallel for schedule(dynamic) num_threads(o.workers)
  for (long long i = 0; i < n; ++i) {
    const sal::ManifestEntry& entry = manifest.entries[static_cast<size_t>(i)];
    EntryOutcome& oc = outcomes[static_cast<size_t>(i)];
    try {
      const sal::Raster image = sal::read_image(entry.image);
      const sal::SaliencyMap map = frontend_map(o, entry, image);
      const sal::SalBaseResult result = sal::run_salbase(image, map, o.salbase);

      const std::string stem = stem_of(entry.image);
      const fs::path mask_path = o.out_dir / (stem + "_mask.pgm");
      sal::write_mask(mask_path, result.mask);

      json side;
      side["beta"] = o.salbase.beta;
      side["seg"] = {{"sigma", o.salbase.seg.sigma},
                     {"k", o.salbase.seg.k},
                     {"min_size", o.salbase.seg.min_size}};
      side["overlap_fraction"] = o.salbase.overlap_fraction;
      side["discard_border"] = o.salbase.discard_border;
      side["selected_labels"] = result.selected_labels.size();
      side["peak"] = {result.peak_x, result.peak_y};
      side["empty_reason"] = result.empty_reason == sal::EmptyReason::none
                                 ? json(nullptr)
                                 : json(sal::empty_reason_name(result.empty_reason));
      side["fallback_used"] = result.fallback_used;

      std::ostringstream line;
      line << entry.image.filename().string() << " -> " << mask_path.filename().string();
      if (!entry.mask.empty()) {
        const sal::BinaryMask gt = sal::read_mask(entry.mask);
        const double omega = gt.empty_mask() && result.mask.empty_mask()
                                 ? 0.0
                                 : sal::overlap_omega(result.mask, gt);
        side["omega"] = omega;
        line << " omega=" << sal::csv_num(omega);
      }
      if (result.empty_reason != sal::EmptyReason::none)
        line << " empty:" << sal::empty_reason_name(result.empty_reason);

      std::ofstream sidecar(o.out_dir / (stem + "_mask.json"), std::ios::binary);
      sidecar << side.dump(2) << "\n";

      if (o.save_labels) {
        const sal::Labeling labeling = sal::segment(image, o.salbase.seg);
        sal::write_labels16(o.out_dir / (stem + "_labels.pgm"), labeling);
        std::ofstream sizes(o.out_dir / (stem + "_labels.txt"), std::ios::binary);
        std::vector<int64_t> count(static_cast<size_t>(labeling.count), 0);
        for (int32_t l : labeling.labels) ++count[l];
        for (int32_t l = 0; l < labeling.count; ++l) sizes << l << " " << count[l] << "\n";
      }
      oc.line = line.str();
    } catch (const std::exception& ex) {
      oc.error = ex.what();
    }
  }
  return report_outcomes(outcomes) == 0 ? 0 : 1;
}

int cmd_eval(const Options& o) {
  const sal::DatasetManifest manifest = sal::load_manifest(o.manifest_path);
  prepare_out_dir(o);

  if (o.frontend == "external") {
    std::vector<std::string> missing;
    for (const sal::ManifestEntry& entry : manifest.entries) {
      const fs::path p = o.maps_dir / (stem_of(entry.image) + o.map_suffix);
      if (!fs::exists(p)) missing.push_back(p.string());
    }
    if (!missing.empty()) {
      for (const std::string& m : missing) std::cerr << "missing map: " << m << "\n";
      return 1;
    }
  }

  struct Slot {
    std::optional<sal::ImageEval> ev;
    std::string name;
    std::string error;
  };
  std::vector<Slot> slots(manifest.entries.size());
  const long long n = static_cast<long long>(manifest.entries.size());
#pragma omp parallel for schedule(dynamic) num_threads(o.workers)
  for (long long i = 0; i < n; ++i) {
    const sal::ManifestEntry& entry = manifest.entries[static_cast<size_t>(i)];
    Slot& slot = slots[static_cast<size_t>(i)];
    slot.name = entry.image.filename().string();
    try {
      if (entry.mask.empty())
        throw sal::InvalidInput("entry has no ground-truth mask: " + entry.image.string());
      const sal::BinaryMask gt = sal::read_mask(entry.mask);
      sal::SaliencyMap map;
      if (o.frontend == "external") {
        const fs::path p = o.maps_dir / (stem_of(entry.image) + o.map_suffix);
        map = sal::load_external_map(p, gt.width, gt.height);
      } else if (o.frontend == "standin") {
        map = sal::spectral_standin(sal::read_image(entry.image));
      } else {
        if (entry.fixations.empty())
          throw sal::EmptyInput("entry has no fixation file: " + entry.image.string());
        const sal::FixationSet fix = sal::load_fixations(entry.fixations, gt.width, gt.height);
        map = (o.frontend == "interobs") ? sal::inter_observer_map(fix, o.holdout, o.blur_sigma)
                                         : sal::fixation_map(fix, o.blur_sigma);
      }
      slot.ev = sal::evaluate_map(map, gt, o.eval);
    } catch (const std::exception& ex) {
      slot.error = ex.what();
    }
  }

  std::vector<sal::ImageEval> evals;
  std::vector<sal::PerImageRow> rows;
  int failures = 0;
  for (const Slot& slot : slots) {
    if (slot.ev) {
      evals.push_back(*slot.ev);
      rows.push_back({slot.name, *slot.ev});
    } else {
      std::cerr << "error: " << slot.error << "\n";
      ++failures;
    }
  }

  const sal::EvalSummary summary = sal::aggregate(evals, o.eval);
  const sal::MetaBlock meta = meta_for(o);
  const std::string model =
      !o.model_name.empty()
          ? o.model_name
          : (o.frontend == "external" ? o.maps_dir.filename().string() : o.frontend);
  sal::write_summary_csv(o.out_dir / "summary.csv", meta, model, summary);
  sal::write_per_image_csv(o.out_dir / "per_image.csv", meta, rows);
  sal::write_curve_csv(o.out_dir / "pr_curve.csv", meta, sal::summary_pr_curve(summary));
  sal::write_curve_csv(o.out_dir / "roc_curve.csv", meta, sal::summary_roc_curve(summary));

  std::cout << "model=" << model << " images=" << summary.images
            << " f_measure=" << sal::csv_num(summary.f_measure)
            << " auc=" << sal::csv_num(summary.auc)
            << " mean_omega=" << sal::csv_num(summary.mean_omega) << "\n";
  return failures == 0 ? 0 : 1;
}

// segmentation regimes studied in the parameter sweep
bool seg_regime(const std::string& name, sal::SegmentationParams& out) {
  if (name == "fine") out = {1.0, 100.0, 20};
  else if (name == "default") out = {1.0, 300.0, 60};
  else if (name == "coarse") out = {1.0, 1000.0, 800};
  else if (name == "alt") out = {1.0, 500.0, 50};
  else return false;
  return true;
}

int cmd_sweep(const Options& o) {
  const sal::DatasetManifest manifest = sal::load_manifest(o.manifest_path);
  if (o.sweep_values.empty()) throw sal::InvalidArgument("sweep: --values must be nonempty");
  prepare_out_dir(o);

  int failures = 0;
  std::vector<sal::SweepRow> rows;
  for (const std::string& value : o.sweep_values) {
    sal::SalBaseParams params = o.salbase;
    if (o.sweep_param == "beta") {
      params.beta = std::stod(value);
      if (params.beta < 0 || params.beta > 1)
        throw sal::InvalidArgument("sweep: beta must be in [0,1]");
    } else if (o.sweep_param == "seg") {
      if (!seg_regime(value, params.seg))
        throw sal::InvalidArgument("sweep: unknown seg regime '" + value +
                                   "' (fine|default|coarse|alt)");
    } else {
      throw sal::InvalidArgument("sweep: --param must be 'beta' or 'seg'");
    }

    struct Slot {
      std::optional<sal::ImageEval> ev;
      std::string error;
    };
    std::vector<Slot> slots(manifest.entries.size());
    const long long n = static_cast<long long>(manifest.entries.size());
#pragma omp parallel for schedule(dynamic) num_threads(o.workers)
    for (long long i = 0; i < n; ++i) {
      const sal::ManifestEntry& entry = manifest.entries[static_cast<size_t>(i)];
      Slot& slot = slots[static_cast<size_t>(i)];
      try {
        if (entry.mask.empty())
          throw sal::InvalidInput("entry has no ground-truth mask: " + entry.image.string());
        const sal::BinaryMask gt = sal::read_mask(entry.mask);
        const sal::Raster image = sal::read_image(entry.image);
        const sal::SaliencyMap map = frontend_map(o, entry, image);
        const sal::SalBaseResult result = sal::run_salbase(image, map, params);
        sal::SaliencyMap as_map(result.mask.width, result.mask.height);
        for (size_t p = 0; p < as_map.values.size(); ++p)
          as_map.values[p] = result.mask.bits[p] ? 1.f : 0.f;
        slot.ev = sal::evaluate_map(as_map, gt, o.eval);
      } catch (const std::exception& ex) {
        slot.error = ex.what();
      }
    }

    std::vector<sal::ImageEval> evals;
    for (const Slot& slot : slots) {
      if (slot.ev) {
        evals.push_back(*slot.ev);
      } else {
        std::cerr << "error: " << slot.error << "\n";
        ++failures;
      }
    }
    rows.push_back({o.sweep_param, value, sal::aggregate(evals, o.eval)});
    std::cout << o.sweep_param << "=" << value
              << " f_measure=" << sal::csv_num(rows.back().summary.f_measure) << "\n";
  }

  const sal::MetaBlock meta = meta_for(o);
  sal::write_sweep_csv(o.out_dir / "sweep.csv", meta, rows);
  sal::write_f_curve_csv(o.out_dir / "f_curve.csv", meta, rows);
  return failures == 0 ? 0 : 1;
}

int cmd_stats(const Options& o) {
  const sal::DatasetManifest manifest = sal::load_manifest(o.manifest_path);
  prepare_out_dir(o);

  omp_set_num_threads(o.workers);
  const sal::DatasetReport report = sal::dataset_report(manifest, o.salbase.seg, o.blur_sigma);

  // annotation-map sAUC against pooled negatives from the other entries
  std::vector<std::optional<sal::FixationSet>> fixsets(manifest.entries.size());
  for (size_t i = 0; i < manifest.entries.size(); ++i) {
    const sal::ManifestEntry& entry = manifest.entries[i];
    if (entry.fixations.empty() || !report.entries[i].stats) continue;
    try {
      fixsets[i] = sal::load_fixations(entry.fixations, report.entries[i].stats->width,
                                       report.entries[i].stats->height);
    } catch (const std::exception&) {
      // already reported by dataset_report
    }
  }

  std::vector<std::string> sauc(manifest.entries.size());
  for (size_t i = 0; i < manifest.entries.size(); ++i) {
    if (!fixsets[i] || fixsets[i]->points.empty() || !report.entries[i].stats) continue;
    const int w = fixsets[i]->width, h = fixsets[i]->height;
    sal::FixationSet negatives;
    negatives.width = w;
    negatives.height = h;
    for (size_t j = 0; j < manifest.entries.size(); ++j) {
      if (j == i || !fixsets[j]) continue;
      const sal::FixationSet mapped = sal::map_to_frame(*fixsets[j], w, h);
      negatives.points.insert(negatives.points.end(), mapped.points.begin(),
                              mapped.points.end());
    }
    if (negatives.points.empty()) continue;
    try {
      sal::SaliencyMap annotation_map;
      const sal::ManifestEntry& entry = manifest.entries[i];
      if (!entry.annotations.empty()) {
        sal::SaliencyMap acc(w, h);
        for (const auto& p : entry.annotations) {
          const sal::BinaryMask m = sal::read_mask(p);
          for (size_t px = 0; px < acc.values.size(); ++px) acc.values[px] += m.bits[px];
        }
        annotation_map = sal::normalize_map(acc);
      } else if (!entry.mask.empty()) {
        const sal::BinaryMask m = sal::read_mask(entry.mask);
        sal::SaliencyMap acc(w, h);
        for (size_t px = 0; px < acc.values.size(); ++px) acc.values[px] = m.bits[px];
        annotation_map = acc;
      } else {
        continue;
      }
      sauc[i] = sal::csv_num(sal::shuffled_auc(annotation_map, *fixsets[i], negatives));
    } catch (const std::exception& ex) {
      std::cerr << "error: sauc entry " << i << ": " << ex.what() << "\n";
    }
  }

  // per-instance fixation ratios, in annotation order
  std::vector<std::pair<size_t, std::vector<double>>> rank_rows;
  for (size_t i = 0; i < manifest.entries.size(); ++i) {
    const sal::ManifestEntry& entry = manifest.entries[i];
    if (entry.instances.empty() || !fixsets[i] || fixsets[i]->points.empty()) continue;
    try {
      std::vector<sal::BinaryMask> instances;
      for (const auto& p : entry.instances) instances.push_back(sal::read_mask(p));
      rank_rows.emplace_back(i, sal::fixation_ratio_by_rank(instances, *fixsets[i]));
    } catch (const std::exception& ex) {
      std::cerr << "error: rank ratios entry " << i << ": " << ex.what() << "\n";
    }
  }

  sal::MetaBlock meta = meta_for(o);
  meta.emplace_back("center_canonical_grid", "400x300");
  meta.emplace_back("center_sigma", sal::csv_num(50.0));
  meta.emplace_back("center_truncate_above", sal::csv_num(0.95));
  meta.emplace_back("center_filter_quantization", "8bit");
  meta.emplace_back("histogram_bins", "20");
  sal::write_stats_csv(o.out_dir / "stats_per_image.csv", meta, report, sauc);
  sal::write_histograms_csv(o.out_dir / "histograms.csv", meta, report);
  if (!rank_rows.empty())
    sal::write_rank_ratios_csv(o.out_dir / "fixation_by_rank.csv", meta, rank_rows);

  int failures = 0;
  for (const sal::EntryReport& er : report.entries) {
    if (!er.error.empty()) {
      std::cerr << "error: entry " << er.index << " (" << er.image << "): " << er.error << "\n";
      ++failures;
    }
  }
  std::cout << "stats: " << report.entries.size() - failures << "/" << report.entries.size()
            << " entries ok\n";
  return failures == 0 ? 0 : 1;
}

int cmd_fixmap(const Options& o) {
  const sal::DatasetManifest manifest = sal::load_manifest(o.manifest_path);
  prepare_out_dir(o);

  std::vector<EntryOutcome> outcomes(manifest.entries.size());
  int produced = 0;
  const long long n = static_cast<long long>(manifest.entries.size());
#pragma omp parallel for schedule(dynamic) num_threads(o.workers) reduction(+ : produced)
  for (long long i = 0; i < n; ++i) {
    const sal::ManifestEntry& entry = manifest.entries[static_cast<size_t>(i)];
    EntryOutcome& oc = outcomes[static_cast<size_t>(i)];
    if (entry.fixations.empty()) {
      oc.line = entry.image.filename().string() + " skipped (no fixations)";
      continue;
    }
    try {
      const sal::Raster image = sal::read_image(entry.image);
      const sal::FixationSet fix =
          sal::load_fixations(entry.fixations, image.width, image.height);
      const sal::SaliencyMap map =
          (o.holdout >= 0) ? sal::inter_observer_map(fix, o.holdout, o.blur_sigma)
                           : sal::fixation_map(fix, o.blur_sigma);
      const fs::path out = o.out_dir / (stem_of(entry.image) + "_fixmap.pgm");
      sal::write_map_gray(out, map);
      oc.line = entry.image.filename().string() + " -> " + out.filename().string();
      ++produced;
    } catch (const std::exception& ex) {
      oc.error = ex.what();
    }
  }
  const int failures = report_outcomes(outcomes);
  if (produced == 0) {
    std::cerr << "error: no entry produced a fixation map\n";
    return 1;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"salient-object baseline and benchmark harness"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--manifest", o.manifest_path, "dataset manifest file")->required();
    cmd->add_option("--out", o.out_dir, "output directory")
        ->envname("SALBENCH_OUT")
        ->required();
    cmd->add_option("--beta", o.salbase.beta, "saliency threshold");
    cmd->add_option("--seg-sigma", o.salbase.seg.sigma, "segmentation smoothing sigma");
    cmd->add_option("--seg-k", o.salbase.seg.k, "segmentation scale k");
    cmd->add_option("--seg-min", o.salbase.seg.min_size, "minimum segment size");
    cmd->add_option("--frontend", o.frontend, "external|fixations|interobs|standin");
    cmd->add_option("--maps", o.maps_dir, "directory of external saliency maps");
    cmd->add_option("--map-suffix", o.map_suffix, "external map file suffix");
    cmd->add_option("--blur-sigma", o.blur_sigma, "fixation map Gaussian sigma (pixels)");
    cmd->add_option("--holdout", o.holdout, "observer id to hold out (interobs)");
    cmd->add_option("--alpha", o.eval.alpha, "F-measure alpha");
    cmd->add_option("--fpr", o.fpr, "standard|paper-printed");
    cmd->add_option("--f-mode", o.f_mode, "max-threshold|fixed:T");
    cmd->add_option("--overlap-fraction", o.overlap_fraction,
                    "minimum overlapping fraction to select a superpixel");
    cmd->add_flag("--keep-peak-fallback", o.keep_peak_fallback,
                  "keep the peak superpixel when everything else is discarded");
    cmd->add_flag("--no-discard-border", o.no_discard_border,
                  "keep superpixels that touch the image boundary");
    cmd->add_option("--workers", o.workers, "worker count")->check(CLI::Range(1, 1024));
    cmd->add_option("--model-name", o.model_name, "model label in summary tables");
    return cmd;
  };

  CLI::App* seg = add_common(app.add_subcommand("segment", "run the model over a manifest"));
  seg->add_flag("--save-labels", o.save_labels, "export superpixel labelings");
  add_common(app.add_subcommand("eval", "evaluate saliency maps against ground truth"));
  CLI::App* sweep = add_common(app.add_subcommand("sweep", "sweep beta or segmentation regime"));
  sweep->add_option("--param", o.sweep_param, "beta|seg");
  sweep->add_option("--values", o.sweep_values, "comma-separated sweep values")
      ->delimiter(',');
  add_common(app.add_subcommand("stats", "dataset statistics report"));
  add_common(app.add_subcommand("fixmap", "write fixation maps"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    o.command = app.get_subcommands().front()->get_name();
    parse_eval_modes(o);
    if (o.command == "segment") return cmd_segment(o);
    if (o.command == "eval") return cmd_eval(o);
    if (o.command == "sweep") return cmd_sweep(o);
    if (o.command == "stats") return cmd_stats(o);
    if (o.command == "fixmap") return cmd_fixmap(o);
    std::cerr << "unknown command\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "config error: " << ex.what() << "\n";
    return 2;
  }
}
