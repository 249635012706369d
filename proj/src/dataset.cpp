#include "sal/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sal/error.hpp"
#include "sal/image_io.hpp"
#include "sal/kernels.hpp"
#include "sal/metrics.hpp"

namespace sal {

namespace fs = std::filesystem;

DatasetManifest load_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  DatasetManifest manifest;
  manifest.root = path.has_parent_path() ? path.parent_path() : fs::path(".");

  auto resolve = [&](const std::string& rel, int line_no) {
    const fs::path p = manifest.root / rel;
    if (!fs::exists(p))
      throw IoError("manifest " + path.string() + " line " + std::to_string(line_no) +
                    ": missing file " + p.string());
    return p;
  };

  std::string line;
  int line_no = 0;
  bool in_entry = false;
  ManifestEntry entry;
  while (std::getline(in, line)) {
    ++line_no;
    // trim
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (line.empty() || line[0] == '#') continue;

    std::istringstream ls(line);
    std::string key, value;
    ls >> key;
    std::getline(ls, value);
    const auto vb = value.find_first_not_of(" \t");
    value = (vb == std::string::npos) ? "" : value.substr(vb);

    if (key == "entry") {
      if (in_entry) throw IoError("manifest " + path.string() + ": nested entry at line " +
                                  std::to_string(line_no));
      in_entry = true;
      entry = ManifestEntry{};
    } else if (key == "end") {
      if (!in_entry || entry.image.empty())
        throw IoError("manifest " + path.string() + ": entry without image at line " +
                      std::to_string(line_no));
      manifest.entries.push_back(entry);
      in_entry = false;
    } else if (!in_entry) {
      throw IoError("manifest " + path.string() + ": key outside entry at line " +
                    std::to_string(line_no));
    } else if (key == "image") {
      entry.image = resolve(value, line_no);
    } else if (key == "mask") {
      entry.mask = resolve(value, line_no);
    } else if (key == "fixations") {
      entry.fixations = resolve(value, line_no);
    } else if (key == "annotation") {
      entry.annotations.push_back(resolve(value, line_no));
    } else if (key == "instance") {
      entry.instances.push_back(resolve(value, line_no));
    } else {
      throw IoError("manifest " + path.string() + ": unknown key '" + key + "' at line " +
                    std::to_string(line_no));
    }
  }
  if (in_entry) throw IoError("manifest " + path.string() + ": unterminated entry");
  return manifest;
}

int most_salient_object(const std::vector<BinaryMask>& instances, const SaliencyMap& fixmap) {
  if (instances.empty()) throw EmptyInput("most_salient_object: no instances");
  for (const BinaryMask& m : instances) {
    if (m.width != fixmap.width || m.height != fixmap.height)
      throw InvalidArgument("most_salient_object: dimension mismatch");
  }
  size_t peak = 0;
  for (size_t i = 1; i < fixmap.values.size(); ++i) {
    if (fixmap.values[i] > fixmap.values[peak]) peak = i;
  }
  for (size_t k = 0; k < instances.size(); ++k) {
    if (instances[k].bits[peak]) return static_cast<int>(k);
  }
  // peak in no instance: highest fraction of total fixation mass wins
  int best = 0;
  double best_mass = -1;
  for (size_t k = 0; k < instances.size(); ++k) {
    const double mass = fixation_mass_ratio(instances[k], fixmap);
    if (mass > best_mass) {
      best_mass = mass;
      best = static_cast<int>(k);
    }
  }
  return best;
}

bool center_bias_classify(const BinaryMask& gt, const CenterBiasOptions& opts) {
  if (gt.empty_mask()) throw InvalidGroundTruth("center_bias_classify: empty mask");

  const int cw = opts.canonical_width, ch = opts.canonical_height;
  SaliencyMap filt(cw, ch);
  const double cx = (cw - 1) / 2.0, cy = (ch - 1) / 2.0;
  const double inv2s2 = 1.0 / (2.0 * opts.sigma * opts.sigma);
  for (int y = 0; y < ch; ++y) {
    for (int x = 0; x < cw; ++x) {
      const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
      filt.at(x, y) = static_cast<float>(std::exp(-d2 * inv2s2));
    }
  }
  filt = normalize_map(filt);
  filt = resize_bilinear(filt, gt.width, gt.height);
  for (float& v : filt.values) {
    if (v > opts.truncate_above)
      v = (opts.mode == TruncateMode::zero_out) ? 0.f : static_cast<float>(opts.truncate_above);
  }

  // strictly-positive overlap, judged on the 8-bit quantized filter
  std::vector<uint8_t> q(filt.values.size());
  par::quantize255(filt.values.data(), q.data(), q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (gt.bits[i] && q[i] >= 1) return true;
  }
  return false;
}

double normalized_object_distance(const BinaryMask& gt) {
  int xmin = gt.width, xmax = -1, ymin = gt.height, ymax = -1;
  for (int y = 0; y < gt.height; ++y) {
    for (int x = 0; x < gt.width; ++x) {
      if (!gt.at(x, y)) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmax < 0) throw InvalidGroundTruth("normalized_object_distance: empty mask");
  const double bx = (xmin + xmax) / 2.0, by = (ymin + ymax) / 2.0;
  const double cx = (gt.width - 1) / 2.0, cy = (gt.height - 1) / 2.0;
  const double half_diag = 0.5 * std::hypot(gt.width - 1.0, gt.height - 1.0);
  if (half_diag == 0) return 0;
  return std::hypot(bx - cx, by - cy) / half_diag;
}

double size_ratio(const BinaryMask& gt) {
  if (gt.bits.empty()) return 0;
  return static_cast<double>(gt.count_true()) / static_cast<double>(gt.bits.size());
}

double fixation_ratio(const BinaryMask& instance, const FixationSet& fix) {
  if (fix.points.empty()) throw EmptyInput("fixation_ratio: no fixations");
  if (fix.width != instance.width || fix.height != instance.height)
    throw InvalidArgument("fixation_ratio: dimension mismatch");
  size_t inside = 0;
  for (const Fixation& f : fix.points) {
    const int x = std::clamp(static_cast<int>(std::lround(f.x)), 0, instance.width - 1);
    const int y = std::clamp(static_cast<int>(std::lround(f.y)), 0, instance.height - 1);
    if (instance.at(x, y)) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(fix.points.size());
}

double fixation_mass_ratio(const BinaryMask& instance, const SaliencyMap& fixmap) {
  if (fixmap.width != instance.width || fixmap.height != instance.height)
    throw InvalidArgument("fixation_mass_ratio: dimension mismatch");
  double total = 0, inside = 0;
  for (size_t i = 0; i < fixmap.values.size(); ++i) {
    total += fixmap.values[i];
    if (instance.bits[i]) inside += fixmap.values[i];
  }
  return total > 0 ? inside / total : 0.0;
}

std::vector<double> fixation_ratio_by_rank(const std::vector<BinaryMask>& instances,
                                           const FixationSet& fix) {
  if (instances.empty()) throw EmptyInput("fixation_ratio_by_rank: no instances");
  std::vector<double> out;
  out.reserve(instances.size());
  for (const BinaryMask& m : instances) out.push_back(fixation_ratio(m, fix));
  return out;
}

void Histogram::add(double v) {
  if (counts.empty()) return;
  size_t bin = counts.size() - 1;
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    if (v < edges[i + 1]) {
      bin = i;
      break;
    }
  }
  ++counts[bin];
}

Histogram uniform_histogram(const std::string& name, double lo, double hi, int bins) {
  Histogram h;
  h.name = name;
  h.counts.assign(bins, 0);
  for (int i = 0; i <= bins; ++i) h.edges.push_back(lo + (hi - lo) * i / bins);
  return h;
}

Histogram log_histogram(const std::string& name, double lo, double hi, int bins) {
  Histogram h;
  h.name = name;
  h.counts.assign(bins, 0);
  const double llo = std::log10(lo), lhi = std::log10(hi);
  for (int i = 0; i <= bins; ++i) h.edges.push_back(std::pow(10.0, llo + (lhi - llo) * i / bins));
  return h;
}

namespace {

ObjectStats compute_entry_stats(const ManifestEntry& entry, const SegmentationParams& seg,
                                double fixmap_blur_sigma) {
  const Raster image = read_image(entry.image);
  if (entry.mask.empty()) throw InvalidInput("entry has no ground-truth mask");
  const BinaryMask gt = read_mask(entry.mask);
  if (gt.width != image.width || gt.height != image.height)
    throw InvalidInput("mask dimensions differ from image: " + entry.mask.string());
  if (gt.empty_mask()) throw InvalidGroundTruth("empty ground-truth mask: " + entry.mask.string());

  ObjectStats st;
  st.width = image.width;
  st.height = image.height;
  st.size_ratio = size_ratio(gt);
  st.normalized_distance = normalized_object_distance(gt);
  st.on_center = center_bias_classify(gt);

  const Labeling labeling = segment(image, seg);
  BinaryMask bg(gt.width, gt.height);
  for (size_t i = 0; i < bg.bits.size(); ++i) bg.bits[i] = gt.bits[i] ? 0 : 1;
  st.superpixels_all = labeling.count;
  st.superpixels_object = count_superpixels_in(labeling, gt);
  st.superpixels_background = count_superpixels_in(labeling, bg);

  std::optional<FixationSet> fix;
  if (!entry.fixations.empty()) {
    fix = load_fixations(entry.fixations, image.width, image.height);
    if (!fix->points.empty()) st.fixation_ratio = fixation_ratio(gt, *fix);
  }

  if (!entry.instances.empty() && fix && !fix->points.empty()) {
    std::vector<BinaryMask> instances;
    instances.reserve(entry.instances.size());
    for (const auto& p : entry.instances) {
      BinaryMask m = read_mask(p);
      if (m.width != image.width || m.height != image.height)
        throw InvalidInput("instance dimensions differ from image: " + p.string());
      instances.push_back(std::move(m));
    }
    const SaliencyMap fixmap = fixation_map(*fix, fixmap_blur_sigma);
    st.most_salient_instance = most_salient_object(instances, fixmap);
  }

  if (entry.annotations.size() >= 2) {
    std::vector<BinaryMask> anns;
    anns.reserve(entry.annotations.size());
    for (const auto& p : entry.annotations) {
      BinaryMask m = read_mask(p);
      if (m.width != image.width || m.height != image.height)
        throw InvalidInput("annotation dimensions differ from image: " + p.string());
      anns.push_back(std::move(m));
    }
    st.agreement = agreement(anns);
  }
  return st;
}

}  // namespace

DatasetReport dataset_report(const DatasetManifest& manifest, const SegmentationParams& seg,
                             double fixmap_blur_sigma) {
  DatasetReport report;
  report.fixmap_blur_sigma = fixmap_blur_sigma;
  report.entries.resize(manifest.entries.size());

  const long long n = static_cast<long long>(manifest.entries.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    EntryReport& er = report.entries[static_cast<size_t>(i)];
    er.index = static_cast<size_t>(i);
    er.image = manifest.entries[static_cast<size_t>(i)].image.string();
    try {
      er.stats = compute_entry_stats(manifest.entries[static_cast<size_t>(i)], seg,
                                     fixmap_blur_sigma);
    } catch (const std::exception& ex) {
      er.error = ex.what();
    }
  }

  Histogram dist = uniform_histogram("normalized_distance", 0.0, 1.0, 20);
  Histogram size = log_histogram("size_ratio", 1e-3, 1.0, 20);
  Histogram sp_obj = log_histogram("superpixels_object", 1.0, 1000.0, 20);
  Histogram sp_bg = log_histogram("superpixels_background", 1.0, 1000.0, 20);
  Histogram sp_all = log_histogram("superpixels_all", 1.0, 1000.0, 20);
  Histogram fr = uniform_histogram("fixation_ratio", 0.0, 1.0, 20);
  for (const EntryReport& er : report.entries) {
    if (!er.stats) continue;
    dist.add(er.stats->normalized_distance);
    size.add(er.stats->size_ratio);
    sp_obj.add(er.stats->superpixels_object);
    sp_bg.add(er.stats->superpixels_background);
    sp_all.add(er.stats->superpixels_all);
    if (er.stats->fixation_ratio) fr.add(*er.stats->fixation_ratio);
  }
  report.histograms = {dist, size, sp_obj, sp_bg, sp_all, fr};
  return report;
}

}  // namespace sal
