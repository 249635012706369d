#pragma once

#include <utility>
#include <vector>

#include "sal/frontend.hpp"
#include "sal/raster.hpp"

namespace sal {

enum class CurveKind { pr, roc };

// The printed ROC formula divides by |M cap G| + |Mbar cap Gbar|, which is
// not a rate; it is kept selectable for exact replication experiments.
enum class FprVariant { standard, paper_printed };

struct CurvePoint {
  int threshold = 0;  // integer T in 0..255 applied to round(255 * S)
  double x = 0;
  double y = 0;
};

struct Curve {
  CurveKind kind = CurveKind::pr;
  std::vector<CurvePoint> points;  // exactly 256, one per threshold
};

// PR over all 256 thresholds; x = recall, y = precision. Precision of an
// empty prediction mask is defined as 1. Throws InvalidGroundTruth when gt
// is empty.
Curve pr_curve(const SaliencyMap& map, const BinaryMask& gt);

// ROC over all 256 thresholds ordered by decreasing threshold; x = FPR,
// y = TPR. Throws InvalidGroundTruth when gt is empty or covers everything.
Curve roc_curve(const SaliencyMap& map, const BinaryMask& gt,
                FprVariant fpr = FprVariant::standard);

// (1+alpha) P R / (alpha P + R); 0 when the 0/0 case arises.
double f_measure(double precision, double recall, double alpha = 0.3);

// Maximum F over the 256 thresholds.
double reported_f_measure(const SaliencyMap& map, const BinaryMask& gt, double alpha = 0.3);

// Max-F point of a PR curve: {f, threshold}.
std::pair<double, int> max_f_on_curve(const Curve& pr, double alpha);

// Trapezoidal area of an ROC curve over FPR-sorted points, endpoints (0,0)
// and (1,1) appended when absent.
double auc(const Curve& curve);

// AUC of classifying saliency values at positive fixations against values
// at negative fixations; ties count 0.5; every provided negative is used.
double shuffled_auc(const SaliencyMap& map, const FixationSet& positives,
                    const FixationSet& negatives);

// PASCAL overlap |pred cap gt| / |pred cup gt|; error when the union is empty.
double overlap_omega(const BinaryMask& pred, const BinaryMask& gt);

// Mean pairwise Jaccard over n >= 2 annotation masks.
double agreement(const std::vector<BinaryMask>& annotations);

struct EvalOptions {
  double alpha = 0.3;
  FprVariant fpr = FprVariant::standard;
  bool f_fixed = false;  // report F at a fixed threshold instead of the max
  int f_fixed_threshold = 128;
};

struct ImageEval {
  Curve pr;
  Curve roc;
  double f = 0;
  int best_threshold = 0;
  double auc = 0;
  double omega = 0;  // overlap of the best-threshold binarization vs gt
};

ImageEval evaluate_map(const SaliencyMap& map, const BinaryMask& gt, const EvalOptions& opts);

// Dataset-level summary: per-threshold curves are averaged across images
// first, then F is taken over the mean curve.
struct EvalSummary {
  int images = 0;
  double alpha = 0.3;
  double f_measure = 0;
  int best_threshold = 0;
  double auc = 0;
  double mean_omega = 0;
  std::vector<double> precision, recall, tpr, fpr;  // indexed by threshold
};

EvalSummary aggregate(const std::vector<ImageEval>& per_image, const EvalOptions& opts);

}  // namespace sal
