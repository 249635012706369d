#include "sal/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "sal/error.hpp"
#include "sal/kernels.hpp"

namespace sal {

namespace {

struct ThresholdCounts {
  std::array<uint64_t, 256> m{};   // |M(T)|
  std::array<uint64_t, 256> mg{};  // |M(T) cap G|
  uint64_t g = 0;
  uint64_t total = 0;
};

ThresholdCounts threshold_counts(const SaliencyMap& map, const BinaryMask& gt) {
  if (map.width != gt.width || map.height != gt.height)
    throw InvalidArgument("metrics: map/gt dimension mismatch");
  const size_t n = map.values.size();
  std::vector<uint8_t> q(n);
  par::quantize255(map.values.data(), q.data(), n);

  uint32_t hist_all[256], hist_g[256];
  par::hist256(q.data(), nullptr, n, hist_all);
  par::hist256(q.data(), gt.bits.data(), n, hist_g);

  ThresholdCounts c;
  c.total = n;
  c.g = par::count_true(gt.bits.data(), n);
  uint64_t m = 0, mg = 0;
  for (int t = 255; t >= 0; --t) {
    m += hist_all[t];
    mg += hist_g[t];
    c.m[t] = m;
    c.mg[t] = mg;
  }
  return c;
}

}  // namespace

Curve pr_curve(const SaliencyMap& map, const BinaryMask& gt) {
  const ThresholdCounts c = threshold_counts(map, gt);
  if (c.g == 0) throw InvalidGroundTruth("pr_curve: empty ground truth");
  Curve curve;
  curve.kind = CurveKind::pr;
  curve.points.reserve(256);
  for (int t = 0; t < 256; ++t) {
    const double precision =
        c.m[t] == 0 ? 1.0 : static_cast<double>(c.mg[t]) / static_cast<double>(c.m[t]);
    const double recall = static_cast<double>(c.mg[t]) / static_cast<double>(c.g);
    curve.points.push_back({t, recall, precision});
  }
  return curve;
}

Curve roc_curve(const SaliencyMap& map, const BinaryMask& gt, FprVariant fpr) {
  const ThresholdCounts c = threshold_counts(map, gt);
  if (c.g == 0) throw InvalidGroundTruth("roc_curve: empty ground truth");
  if (c.g == c.total) throw InvalidGroundTruth("roc_curve: ground truth covers everything");
  Curve curve;
  curve.kind = CurveKind::roc;
  curve.points.reserve(256);
  for (int t = 255; t >= 0; --t) {
    const double tpr = static_cast<double>(c.mg[t]) / static_cast<double>(c.g);
    double rate;
    if (fpr == FprVariant::standard) {
      rate = static_cast<double>(c.m[t] - c.mg[t]) / static_cast<double>(c.total - c.g);
    } else {
      // |Mbar cap Gbar| = total - |M cup G|
      const uint64_t mbar_gbar = c.total - (c.m[t] + c.g - c.mg[t]);
      const uint64_t den = c.mg[t] + mbar_gbar;
      rate = den == 0 ? 0.0 : static_cast<double>(c.mg[t]) / static_cast<double>(den);
    }
    curve.points.push_back({t, rate, tpr});
  }
  return curve;
}

double f_measure(double precision, double recall, double alpha) {
  if (precision < 0 || precision > 1 || recall < 0 || recall > 1)
    throw InvalidArgument("f_measure: precision and recall must be in [0,1]");
  if (!(alpha > 0)) throw InvalidArgument("f_measure: alpha must be > 0");
  const double num = (1.0 + alpha) * precision * recall;
  const double den = alpha * precision + recall;
  return den == 0 ? 0.0 : num / den;
}

std::pair<double, int> max_f_on_curve(const Curve& pr, double alpha) {
  double best = 0;
  int best_t = 0;
  bool first = true;
  for (const CurvePoint& p : pr.points) {
    const double f = f_measure(p.y, p.x, alpha);
    if (first || f > best) {
      best = f;
      best_t = p.threshold;
      first = false;
    }
  }
  return {best, best_t};
}

double reported_f_measure(const SaliencyMap& map, const BinaryMask& gt, double alpha) {
  return max_f_on_curve(pr_curve(map, gt), alpha).first;
}

double auc(const Curve& curve) {
  if (curve.kind != CurveKind::roc) throw InvalidArgument("auc: ROC curve required");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(curve.points.size() + 2);
  bool has00 = false, has11 = false;
  for (const CurvePoint& p : curve.points) {
    if (p.x == 0 && p.y == 0) has00 = true;
    if (p.x == 1 && p.y == 1) has11 = true;
  }
  if (!has00) pts.emplace_back(0.0, 0.0);
  for (const CurvePoint& p : curve.points) pts.emplace_back(p.x, p.y);
  if (!has11) pts.emplace_back(1.0, 1.0);
  std::stable_sort(pts.begin(), pts.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  double area = 0;
  for (size_t i = 1; i < pts.size(); ++i) {
    area += (pts[i].first - pts[i - 1].first) * (pts[i].second + pts[i - 1].second) * 0.5;
  }
  return area;
}

namespace {

std::vector<double> values_at(const SaliencyMap& map, const FixationSet& fix) {
  if (fix.width != map.width || fix.height != map.height)
    throw InvalidArgument("shuffled_auc: fixation frame does not match the map");
  std::vector<double> v;
  v.reserve(fix.points.size());
  for (const Fixation& f : fix.points) {
    const int x = std::clamp(static_cast<int>(std::lround(f.x)), 0, map.width - 1);
    const int y = std::clamp(static_cast<int>(std::lround(f.y)), 0, map.height - 1);
    v.push_back(map.at(x, y));
  }
  return v;
}

// Mann-Whitney with midranks for ties.
double rank_auc(const std::vector<double>& pos, const std::vector<double>& neg) {
  struct Scored {
    double v;
    bool positive;
  };
  std::vector<Scored> all;
  all.reserve(pos.size() + neg.size());
  for (double v : pos) all.push_back({v, true});
  for (double v : neg) all.push_back({v, false});
  std::sort(all.begin(), all.end(), [](const Scored& a, const Scored& b) { return a.v < b.v; });

  double rank_sum_pos = 0;
  size_t i = 0;
  while (i < all.size()) {
    size_t j = i;
    while (j + 1 < all.size() && all[j + 1].v == all[i].v) ++j;
    const double midrank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (size_t k = i; k <= j; ++k) {
      if (all[k].positive) rank_sum_pos += midrank;
    }
    i = j + 1;
  }
  const double np = static_cast<double>(pos.size());
  const double nn = static_cast<double>(neg.size());
  const double u = rank_sum_pos - np * (np + 1.0) * 0.5;
  return u / (np * nn);
}

}  // namespace

double shuffled_auc(const SaliencyMap& map, const FixationSet& positives,
                    const FixationSet& negatives) {
  if (positives.points.empty()) throw EmptyInput("shuffled_auc: no positive fixations");
  if (negatives.points.empty()) throw EmptyInput("shuffled_auc: no negative fixations");
  return rank_auc(values_at(map, positives), values_at(map, negatives));
}

double overlap_omega(const BinaryMask& pred, const BinaryMask& gt) {
  if (pred.width != gt.width || pred.height != gt.height)
    throw InvalidArgument("overlap_omega: dimension mismatch");
  const uint64_t inter = par::count_true_and(pred.bits.data(), gt.bits.data(), pred.bits.size());
  const uint64_t uni = pred.count_true() + gt.count_true() - inter;
  if (uni == 0) throw UndefinedMetric("overlap_omega: both masks empty");
  return static_cast<double>(inter) / static_cast<double>(uni);
}

double agreement(const std::vector<BinaryMask>& annotations) {
  const size_t n = annotations.size();
  if (n < 2) throw InvalidArgument("agreement: need at least 2 annotations");
  for (size_t i = 1; i < n; ++i) {
    if (annotations[i].width != annotations[0].width ||
        annotations[i].height != annotations[0].height)
      throw InvalidArgument("agreement: dimension mismatch");
  }
  double sum = 0;
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const uint64_t inter = par::count_true_and(annotations[i].bits.data(),
                                                 annotations[j].bits.data(),
                                                 annotations[i].bits.size());
      const uint64_t uni =
          annotations[i].count_true() + annotations[j].count_true() - inter;
      if (uni == 0)
        throw UndefinedMetric("agreement: pair (" + std::to_string(i) + "," +
                              std::to_string(j) + ") has empty union");
      sum += static_cast<double>(inter) / static_cast<double>(uni);
    }
  }
  return 2.0 * sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

ImageEval evaluate_map(const SaliencyMap& map, const BinaryMask& gt, const EvalOptions& opts) {
  ImageEval ev;
  ev.pr = pr_curve(map, gt);
  ev.roc = roc_curve(map, gt, opts.fpr);
  if (opts.f_fixed) {
    const CurvePoint& p = ev.pr.points[static_cast<size_t>(opts.f_fixed_threshold)];
    ev.f = f_measure(p.y, p.x, opts.alpha);
    ev.best_threshold = opts.f_fixed_threshold;
  } else {
    std::tie(ev.f, ev.best_threshold) = max_f_on_curve(ev.pr, opts.alpha);
  }
  ev.auc = auc(ev.roc);

  // overlap of the reported-threshold binarization
  std::vector<uint8_t> q(map.values.size());
  par::quantize255(map.values.data(), q.data(), q.size());
  BinaryMask pred(map.width, map.height);
  for (size_t i = 0; i < q.size(); ++i) pred.bits[i] = q[i] >= ev.best_threshold ? 1 : 0;
  ev.omega = overlap_omega(pred, gt);  // gt nonempty, so the union is nonempty
  return ev;
}

EvalSummary aggregate(const std::vector<ImageEval>& per_image, const EvalOptions& opts) {
  EvalSummary s;
  s.images = static_cast<int>(per_image.size());
  s.alpha = opts.alpha;
  s.precision.assign(256, 0.0);
  s.recall.assign(256, 0.0);
  s.tpr.assign(256, 0.0);
  s.fpr.assign(256, 0.0);
  if (per_image.empty()) return s;

  for (const ImageEval& ev : per_image) {
    for (const CurvePoint& p : ev.pr.points) {
      s.recall[static_cast<size_t>(p.threshold)] += p.x;
      s.precision[static_cast<size_t>(p.threshold)] += p.y;
    }
    for (const CurvePoint& p : ev.roc.points) {
      s.fpr[static_cast<size_t>(p.threshold)] += p.x;
      s.tpr[static_cast<size_t>(p.threshold)] += p.y;
    }
    s.mean_omega += ev.omega;
  }
  const double inv = 1.0 / s.images;
  for (int t = 0; t < 256; ++t) {
    s.precision[t] *= inv;
    s.recall[t] *= inv;
    s.tpr[t] *= inv;
    s.fpr[t] *= inv;
  }
  s.mean_omega *= inv;

  if (opts.f_fixed) {
    s.best_threshold = opts.f_fixed_threshold;
    s.f_measure = f_measure(s.precision[s.best_threshold], s.recall[s.best_threshold], opts.alpha);
  } else {
    double best = -1;
    for (int t = 0; t < 256; ++t) {
      const double f = f_measure(s.precision[t], s.recall[t], opts.alpha);
      if (f > best) {
        best = f;
        s.best_threshold = t;
      }
    }
    s.f_measure = best;
  }

  Curve mean_roc;
  mean_roc.kind = CurveKind::roc;
  for (int t = 255; t >= 0; --t) mean_roc.points.push_back({t, s.fpr[t], s.tpr[t]});
  s.auc = auc(mean_roc);
  return s;
}

}  // namespace sal
