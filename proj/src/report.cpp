#include "sal/report.hpp"

#include <cstdio>
#include <fstream>

#include "sal/error.hpp"

namespace sal {

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary: no newline translation
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

}  // namespace

std::string csv_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

MetaBlock run_meta(const RunMeta& rm) {
  MetaBlock meta;
  meta.emplace_back("alpha", csv_num(rm.eval.alpha));
  meta.emplace_back("fpr", rm.eval.fpr == FprVariant::standard ? "standard" : "paper-printed");
  meta.emplace_back("f_mode", rm.eval.f_fixed
                                  ? "fixed:" + std::to_string(rm.eval.f_fixed_threshold)
                                  : "max-threshold");
  meta.emplace_back("f_aggregation", "mean-curve-then-max");
  meta.emplace_back("quantization", "round-255");
  meta.emplace_back("precision_empty_mask", "1");
  meta.emplace_back("omega", "at-reported-threshold");
  meta.emplace_back("beta", csv_num(rm.beta));
  meta.emplace_back("seg_sigma", csv_num(rm.seg.sigma));
  meta.emplace_back("seg_k", csv_num(rm.seg.k));
  meta.emplace_back("seg_min", std::to_string(rm.seg.min_size));
  meta.emplace_back("overlap_fraction", csv_num(rm.overlap_fraction));
  meta.emplace_back("discard_border", rm.discard_border ? "1" : "0");
  meta.emplace_back("keep_peak_fallback", rm.keep_peak_fallback ? "1" : "0");
  meta.emplace_back("frontend", rm.frontend);
  meta.emplace_back("blur_sigma", csv_num(rm.blur_sigma));
  return meta;
}

void write_meta(std::ostream& out, const MetaBlock& meta) {
  for (const auto& [k, v] : meta) out << "# " << k << "=" << v << "\n";
}

void write_curve_csv(const std::filesystem::path& path, const MetaBlock& meta,
                     const Curve& curve) {
  auto out = open_csv(path);
  write_meta(out, meta);
  out << "threshold,x,y\n";
  for (const CurvePoint& p : curve.points) {
    out << p.threshold << "," << csv_num(p.x) << "," << csv_num(p.y) << "\n";
  }
}

Curve summary_pr_curve(const EvalSummary& s) {
  Curve c;
  c.kind = CurveKind::pr;
  for (int t = 0; t < 256; ++t) c.points.push_back({t, s.recall[t], s.precision[t]});
  return c;
}

Curve summary_roc_curve(const EvalSummary& s) {
  Curve c;
  c.kind = CurveKind::roc;
  for (int t = 255; t >= 0; --t) c.points.push_back({t, s.fpr[t], s.tpr[t]});
  return c;
}

void write_summary_csv(const std::filesystem::path& path, const MetaBlock& meta,
                       const std::string& model, const EvalSummary& summary) {
  auto out = open_csv(path);
  write_meta(out, meta);
  out << "model,images,f_measure,best_threshold,auc,mean_omega\n";
  out << model << "," << summary.images << "," << csv_num(summary.f_measure) << ","
      << summary.best_threshold << "," << csv_num(summary.auc) << ","
      << csv_num(summary.mean_omega) << "\n";
}

void write_per_image_csv(const std::filesystem::path& path, const MetaBlock& meta,
                         const std::vector<PerImageRow>& rows) {
  auto out = open_csv(path);
  write_meta(out, meta);
  out << "entry,image,f,best_threshold,auc,omega\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    out << i << "," << rows[i].name << "," << csv_num(rows[i].eval.f) << ","
        << rows[i].eval.best_threshold << "," << csv_num(rows[i].eval.auc) << ","
        << csv_num(rows[i].eval.omega) << "\n";
  }
}

void write_sweep_csv(const std::filesystem::path& path, const MetaBlock& meta,
                     const std::vector<SweepRow>& rows) {
  auto out = open_csv(path);
  write_meta(out, meta);
  out << "param,value,images,f_measure,best_threshold,auc,mean_omega\n";
  for (const SweepRow& r : rows) {
    out << r.param << "," << r.value << "," << r.summary.images << ","
        << csv_num(r.summary.f_measure) << "," << r.summary.best_threshold << ","
        << csv_num(r.summary.auc) << "," << csv_num(r.summary.mean_omega) << "\n";
  }
}

void write_f_curve_csv(const std::filesystem::path& path, const MetaBlock& meta,
                       const std::vector<SweepRow>& rows) {
  auto out = open_csv(path);
  write_meta(out, meta);
  out << "value,f_measure\n";
  for (const SweepRow& r : rows) out << r.value << "," << csv_num(r.summary.f_measure) << "\n";
}

void write_stats_csv(const std::filesystem::path& path, const MetaBlock& meta,
                     const DatasetReport& report, const std::vector<std::string>& sauc_column) {
  auto out = open_csv(path);
  write_meta(out, meta);
  out << "entry,image,width,height,size_ratio,norm_distance,on_center,superpixels_object,"
         "superpixels_background,superpixels_all,fixation_ratio,most_salient_instance,"
         "agreement,sauc_annotation,error\n";
  for (size_t i = 0; i < report.entries.size(); ++i) {
    const EntryReport& er = report.entries[i];
    out << i << "," << er.image << ",";
    if (er.stats) {
      const ObjectStats& st = *er.stats;
      out << st.width << "," << st.height << "," << csv_num(st.size_ratio) << ","
          << csv_num(st.normalized_distance) << "," << (st.on_center ? 1 : 0) << ","
          << st.superpixels_object << "," << st.superpixels_background << ","
          << st.superpixels_all << ",";
      out << (st.fixation_ratio ? csv_num(*st.fixation_ratio) : "") << ",";
      out << (st.most_salient_instance ? std::to_string(*st.most_salient_instance) : "") << ",";
      out << (st.agreement ? csv_num(*st.agreement) : "") << ",";
      out << (i < sauc_column.size() ? sauc_column[i] : "") << ",";
      out << "\n";
    } else {
      out << ",,,,,,,,,,,," << er.error << "\n";
    }
  }
}

void write_histograms_csv(const std::filesystem::path& path, const MetaBlock& meta,
                          const DatasetReport& report) {
  auto out = open_csv(path);
  write_meta(out, meta);
  out << "table,bin_lo,bin_hi,count\n";
  for (const Histogram& h : report.histograms) {
    for (size_t b = 0; b < h.counts.size(); ++b) {
      out << h.name << "," << csv_num(h.edges[b]) << "," << csv_num(h.edges[b + 1]) << ","
          << h.counts[b] << "\n";
    }
  }
}

void write_rank_ratios_csv(const std::filesystem::path& path, const MetaBlock& meta,
                           const std::vector<std::pair<size_t, std::vector<double>>>& rows) {
  auto out = open_csv(path);
  write_meta(out, meta);
  out << "entry,rank,fixation_ratio\n";
  for (const auto& [entry, ratios] : rows) {
    for (size_t r = 0; r < ratios.size(); ++r) {
      out << entry << "," << r << "," << csv_num(ratios[r]) << "\n";
    }
  }
}

}  // namespace sal
