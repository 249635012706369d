#include "sal/frontend.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sal/error.hpp"
#include "sal/image_io.hpp"
#include "sal/kernels.hpp"

namespace sal {

FixationSet load_fixations(const std::filesystem::path& path, int width, int height) {
  if (width < 1 || height < 1) throw InvalidArgument("load_fixations: bad image dimensions");
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  FixationSet fix;
  fix.width = width;
  fix.height = height;
  std::string line;
  std::getline(in, line);  // header
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string sx, sy, so;
    if (!std::getline(ls, sx, ',') || !std::getline(ls, sy, ',') || !std::getline(ls, so)) {
      throw IoError("bad fixation line " + std::to_string(line_no) + " in " + path.string());
    }
    Fixation f;
    try {
      f.x = std::stod(sx);
      f.y = std::stod(sy);
      f.observer = std::stoi(so);
    } catch (const std::exception&) {
      throw IoError("bad fixation line " + std::to_string(line_no) + " in " + path.string());
    }
    if (f.x < 0 || f.x > width - 1 || f.y < 0 || f.y > height - 1 || f.observer < 0) {
      throw IoError("fixation out of bounds at line " + std::to_string(line_no) + " in " +
                    path.string());
    }
    fix.points.push_back(f);
  }
  return fix;
}

FixationSet map_to_frame(const FixationSet& fix, int w, int h) {
  if (w < 1 || h < 1) throw InvalidArgument("map_to_frame: bad target dimensions");
  FixationSet out;
  out.width = w;
  out.height = h;
  out.points.reserve(fix.points.size());
  for (const Fixation& f : fix.points) {
    Fixation g = f;
    g.x = std::clamp((f.x + 0.5) * w / fix.width - 0.5, 0.0, static_cast<double>(w - 1));
    g.y = std::clamp((f.y + 0.5) * h / fix.height - 0.5, 0.0, static_cast<double>(h - 1));
    out.points.push_back(g);
  }
  return out;
}

SaliencyMap load_external_map(const std::filesystem::path& path, int target_w, int target_h) {
  if (target_w < 1 || target_h < 1)
    throw InvalidArgument("load_external_map: bad target dimensions");
  const SaliencyMap raw = read_map_gray(path);
  return normalize_map(resize_bilinear(raw, target_w, target_h));
}

SaliencyMap fixation_map(const FixationSet& fix, double blur_sigma) {
  if (fix.points.empty()) throw EmptyInput("fixation_map: no fixations");
  if (!(blur_sigma > 0)) throw InvalidArgument("fixation_map: blur_sigma must be > 0");
  SaliencyMap acc(fix.width, fix.height);
  for (const Fixation& f : fix.points) {
    const int x = std::clamp(static_cast<int>(std::lround(f.x)), 0, fix.width - 1);
    const int y = std::clamp(static_cast<int>(std::lround(f.y)), 0, fix.height - 1);
    acc.at(x, y) += 1.0f;
  }
  SaliencyMap blurred(fix.width, fix.height);
  par::gaussian_blur(acc.values.data(), blurred.values.data(), fix.width, fix.height, blur_sigma,
                     Border::zero);
  return normalize_map(blurred);
}

SaliencyMap inter_observer_map(const FixationSet& fix, int held_out_observer, double blur_sigma) {
  FixationSet rest;
  rest.width = fix.width;
  rest.height = fix.height;
  for (const Fixation& f : fix.points) {
    if (f.observer != held_out_observer) rest.points.push_back(f);
  }
  if (rest.points.empty())
    throw EmptyInput("inter_observer_map: no fixations from other observers");
  return fixation_map(rest, blur_sigma);
}

namespace {

// separable naive DFT; fine at the 64-pixel working size
void dft2d(std::vector<std::complex<double>>& data, int w, int h, bool inverse) {
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<std::complex<double>> tmp(std::max(w, h));

  for (int y = 0; y < h; ++y) {
    std::complex<double>* row = data.data() + static_cast<size_t>(y) * w;
    for (int u = 0; u < w; ++u) {
      std::complex<double> s{0, 0};
      for (int x = 0; x < w; ++x) {
        const double ang = sign * 2.0 * M_PI * u * x / w;
        s += row[x] * std::complex<double>(std::cos(ang), std::sin(ang));
      }
      tmp[u] = s;
    }
    std::copy(tmp.begin(), tmp.begin() + w, row);
  }

  for (int x = 0; x < w; ++x) {
    for (int v = 0; v < h; ++v) {
      std::complex<double> s{0, 0};
      for (int y = 0; y < h; ++y) {
        const double ang = sign * 2.0 * M_PI * v * y / h;
        s += data[static_cast<size_t>(y) * w + x] * std::complex<double>(std::cos(ang), std::sin(ang));
      }
      tmp[v] = s;
    }
    for (int y = 0; y < h; ++y) data[static_cast<size_t>(y) * w + x] = tmp[y];
  }

  if (inverse) {
    const double scale = 1.0 / (static_cast<double>(w) * h);
    for (auto& c : data) c *= scale;
  }
}

// 3x3 box filter with replicated border
std::vector<double> mean3x3(const std::vector<double>& in, int w, int h) {
  std::vector<double> out(in.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double s = 0;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const int xx = std::clamp(x + dx, 0, w - 1);
          const int yy = std::clamp(y + dy, 0, h - 1);
          s += in[static_cast<size_t>(yy) * w + xx];
        }
      }
      out[static_cast<size_t>(y) * w + x] = s / 9.0;
    }
  }
  return out;
}

}  // namespace

SaliencyMap spectral_standin(const Raster& image) {
  if (image.empty()) throw InvalidArgument("spectral_standin: empty image");
  const size_t px = image.pixels();

  SaliencyMap gray(image.width, image.height);
  for (size_t i = 0; i < px; ++i) {
    double s = 0;
    for (int c = 0; c < image.channels; ++c) s += image.plane(c)[i];
    gray.values[i] = static_cast<float>(s / image.channels);
  }

  // work at 64 pixels on the long side
  const int long_side = std::max(image.width, image.height);
  const int sw = std::max(1, static_cast<int>(std::lround(64.0 * image.width / long_side)));
  const int sh = std::max(1, static_cast<int>(std::lround(64.0 * image.height / long_side)));
  std::vector<float> small(static_cast<size_t>(sw) * sh);
  par::resize_bilinear(gray.values.data(), gray.width, gray.height, small.data(), sw, sh);

  const auto [slo, shi] = par::min_max(small.data(), small.size());
  if (slo == shi) return SaliencyMap(image.width, image.height);  // no spectral residual

  const size_t n = small.size();
  std::vector<std::complex<double>> freq(n);
  for (size_t i = 0; i < n; ++i) freq[i] = {static_cast<double>(small[i]), 0.0};
  dft2d(freq, sw, sh, false);

  // floor amplitudes relative to the spectrum peak; the log of raw
  // rounding noise would otherwise dominate the residual
  double amax = 0;
  for (const auto& c : freq) amax = std::max(amax, std::abs(c));
  const double amp_floor = amax * 1e-12 + 1e-300;
  std::vector<double> logamp(n), phase(n);
  for (size_t i = 0; i < n; ++i) {
    logamp[i] = std::log(std::max(std::abs(freq[i]), amp_floor));
    phase[i] = std::arg(freq[i]);
  }
  const std::vector<double> smoothed = mean3x3(logamp, sw, sh);
  for (size_t i = 0; i < n; ++i) {
    const double residual = logamp[i] - smoothed[i];
    freq[i] = std::polar(std::exp(residual), phase[i]);
  }
  dft2d(freq, sw, sh, true);

  std::vector<float> sq(n);
  double peak = 0;
  for (size_t i = 0; i < n; ++i) {
    const double m = std::norm(freq[i]);
    if (m > peak) peak = m;
    sq[i] = static_cast<float>(m);
  }
  // rescale before the [0,1]-clamping resize; normalization absorbs gain
  if (peak > 0) {
    const float inv = static_cast<float>(1.0 / peak);
    for (float& v : sq) v *= inv;
  }

  std::vector<float> blurred(n);
  par::gaussian_blur(sq.data(), blurred.data(), sw, sh, 2.5, Border::replicate);

  SaliencyMap up(image.width, image.height);
  par::resize_bilinear(blurred.data(), sw, sh, up.values.data(), image.width, image.height);

  // a near-flat result is numerical noise; treat it as constant
  const auto [lo, hi] = par::min_max(up.values.data(), up.values.size());
  if (hi - lo <= 1e-6 * std::max(static_cast<double>(hi), 1e-30))
    return SaliencyMap(image.width, image.height);
  return normalize_map(up);
}

}  // namespace sal
