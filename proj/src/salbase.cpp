#include "sal/salbase.hpp"

#include <algorithm>
#include <vector>

#include "sal/error.hpp"

namespace sal {

namespace {

void validate(const SalBaseParams& p) {
  if (p.beta < 0 || p.beta > 1) throw InvalidArgument("salbase: beta must be in [0,1]");
  if (p.overlap_fraction < 0 || p.overlap_fraction > 1)
    throw InvalidArgument("salbase: overlap_fraction must be in [0,1]");
}

std::vector<uint8_t> border_touching(const Labeling& labeling) {
  std::vector<uint8_t> touches(static_cast<size_t>(labeling.count) + 1, 0);
  const int w = labeling.width, h = labeling.height;
  for (int x = 0; x < w; ++x) {
    touches[labeling.at(x, 0)] = 1;
    touches[labeling.at(x, h - 1)] = 1;
  }
  for (int y = 0; y < h; ++y) {
    touches[labeling.at(0, y)] = 1;
    touches[labeling.at(w - 1, y)] = 1;
  }
  return touches;
}

std::vector<int32_t> overlap_selection(const Labeling& labeling, const BinaryMask& truncated,
                                       double overlap_fraction) {
  std::vector<int64_t> size(static_cast<size_t>(labeling.count) + 1, 0);
  std::vector<int64_t> overlap(static_cast<size_t>(labeling.count) + 1, 0);
  for (size_t i = 0; i < labeling.labels.size(); ++i) {
    const int32_t l = labeling.labels[i];
    ++size[l];
    if (truncated.bits[i]) ++overlap[l];
  }
  std::vector<int32_t> selected;
  for (int32_t l = 0; l < labeling.count; ++l) {
    if (size[l] > 0 && static_cast<double>(overlap[l]) > overlap_fraction * static_cast<double>(size[l]))
      selected.push_back(l);
  }
  return selected;
}

}  // namespace

BinaryMask truncate_saliency(const SaliencyMap& map, double beta) {
  if (beta < 0 || beta > 1) throw InvalidArgument("truncate_saliency: beta must be in [0,1]");
  BinaryMask out(map.width, map.height);
  for (size_t i = 0; i < map.values.size(); ++i) out.bits[i] = map.values[i] >= beta ? 1 : 0;
  return out;
}

std::vector<int32_t> select_superpixels(const Labeling& labeling, const BinaryMask& truncated,
                                        const SalBaseParams& params) {
  validate(params);
  if (labeling.width != truncated.width || labeling.height != truncated.height)
    throw InvalidArgument("select_superpixels: dimension mismatch");
  std::vector<int32_t> selected = overlap_selection(labeling, truncated, params.overlap_fraction);
  if (params.discard_border) {
    const std::vector<uint8_t> touches = border_touching(labeling);
    std::erase_if(selected, [&](int32_t l) { return touches[l] != 0; });
  }
  return selected;
}

SalBaseResult run_salbase(const Raster& image, const SaliencyMap& map,
                          const SalBaseParams& params) {
  validate(params);
  if (map.width != image.width || map.height != image.height)
    throw InvalidArgument("run_salbase: map dimensions must equal image dimensions");

  SalBaseResult result;

  // peak of the raw map, row-major first occurrence
  size_t peak = 0;
  for (size_t i = 1; i < map.values.size(); ++i) {
    if (map.values[i] > map.values[peak]) peak = i;
  }
  result.peak_x = static_cast<int>(peak % map.width);
  result.peak_y = static_cast<int>(peak / map.width);

  const SaliencyMap normalized = normalize_map(map);
  const Labeling labeling = segment(image, params.seg);
  const BinaryMask truncated = truncate_saliency(normalized, params.beta);

  std::vector<int32_t> selected =
      overlap_selection(labeling, truncated, params.overlap_fraction);
  const bool any_overlap = !selected.empty();
  if (params.discard_border) {
    const std::vector<uint8_t> touches = border_touching(labeling);
    std::erase_if(selected, [&](int32_t l) { return touches[l] != 0; });
  }

  if (selected.empty()) {
    result.empty_reason = any_overlap ? EmptyReason::border_discard : EmptyReason::no_overlap;
    if (params.keep_peak_fallback) {
      selected.push_back(labeling.at(result.peak_x, result.peak_y));
      result.fallback_used = true;
      result.empty_reason = EmptyReason::none;
    }
  }

  BinaryMask mask(image.width, image.height);
  if (!selected.empty()) {
    std::vector<uint8_t> keep(static_cast<size_t>(labeling.count) + 1, 0);
    for (int32_t l : selected) keep[l] = 1;
    for (size_t i = 0; i < mask.bits.size(); ++i) mask.bits[i] = keep[labeling.labels[i]];
    mask = fill_holes(mask);
  }
  result.mask = std::move(mask);
  result.selected_labels = std::move(selected);
  return result;
}

const char* empty_reason_name(EmptyReason r) {
  switch (r) {
    case EmptyReason::no_overlap: return "no-overlap";
    case EmptyReason::border_discard: return "border-discard-eliminated-all";
    case EmptyReason::none: break;
  }
  return "";
}

}  // namespace sal
