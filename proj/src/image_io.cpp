#include "sal/image_io.hpp"

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "sal/error.hpp"

namespace sal {

namespace {

struct PnmHeader {
  std::string magic;
  int width = 0;
  int height = 0;
  int maxval = 0;
};

int read_header_int(std::istream& in, const std::filesystem::path& path) {
  // skip whitespace and '#' comment lines
  int c = in.peek();
  while (c == '#' || std::isspace(c)) {
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else {
      in.get();
    }
    c = in.peek();
  }
  int value = 0;
  if (!(in >> value)) throw IoError("corrupt PNM header in " + path.string());
  return value;
}

PnmHeader read_header(std::istream& in, const std::filesystem::path& path) {
  PnmHeader h;
  char m0 = 0, m1 = 0;
  in.get(m0);
  in.get(m1);
  if (!in || m0 != 'P' || (m1 != '5' && m1 != '6'))
    throw IoError("not a binary PGM/PPM file: " + path.string());
  h.magic = std::string{m0, m1};
  h.width = read_header_int(in, path);
  h.height = read_header_int(in, path);
  h.maxval = read_header_int(in, path);
  in.get();  // single whitespace before raster data
  if (h.width < 1 || h.height < 1 || h.maxval < 1 || h.maxval > 65535)
    throw IoError("bad PNM dimensions in " + path.string());
  return h;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

std::vector<uint8_t> read_payload(std::istream& in, size_t n, const std::filesystem::path& path) {
  std::vector<uint8_t> buf(n);
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
  if (static_cast<size_t>(in.gcount()) != n)
    throw IoError("truncated PNM payload in " + path.string());
  return buf;
}

}  // namespace

Raster read_image(const std::filesystem::path& path) {
  auto in = open_input(path);
  const PnmHeader h = read_header(in, path);
  const int channels = (h.magic == "P6") ? 3 : 1;
  const size_t px = static_cast<size_t>(h.width) * h.height;
  const int bytes_per_sample = (h.maxval > 255) ? 2 : 1;
  const auto buf = read_payload(in, px * channels * bytes_per_sample, path);

  Raster img(h.width, h.height, channels);
  const float maxval = static_cast<float>(h.maxval);
  for (size_t i = 0; i < px; ++i) {
    for (int c = 0; c < channels; ++c) {
      const size_t s = (i * channels + c) * bytes_per_sample;
      const int v = (bytes_per_sample == 2) ? (buf[s] << 8 | buf[s + 1]) : buf[s];
      img.plane(c)[i] = static_cast<float>(v) / maxval;
    }
  }
  return img;
}

BinaryMask read_mask(const std::filesystem::path& path) {
  auto in = open_input(path);
  const PnmHeader h = read_header(in, path);
  if (h.magic != "P5" || h.maxval > 255)
    throw IoError("mask must be 8-bit grayscale: " + path.string());
  const size_t px = static_cast<size_t>(h.width) * h.height;
  const auto buf = read_payload(in, px, path);
  BinaryMask mask(h.width, h.height);
  for (size_t i = 0; i < px; ++i) mask.bits[i] = buf[i] > 127 ? 1 : 0;
  return mask;
}

SaliencyMap read_map_gray(const std::filesystem::path& path) {
  auto in = open_input(path);
  const PnmHeader h = read_header(in, path);
  if (h.magic != "P5" || h.maxval > 255)
    throw IoError("saliency map must be 8-bit grayscale: " + path.string());
  const size_t px = static_cast<size_t>(h.width) * h.height;
  const auto buf = read_payload(in, px, path);
  SaliencyMap map(h.width, h.height);
  const float maxval = static_cast<float>(h.maxval);
  for (size_t i = 0; i < px; ++i) map.values[i] = static_cast<float>(buf[i]) / maxval;
  return map;
}

void write_mask(const std::filesystem::path& path, const BinaryMask& mask) {
  auto out = open_output(path);
  out << "P5\n" << mask.width << " " << mask.height << "\n255\n";
  std::vector<uint8_t> buf(mask.bits.size());
  for (size_t i = 0; i < buf.size(); ++i) buf[i] = mask.bits[i] ? 255 : 0;
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

void write_map_gray(const std::filesystem::path& path, const SaliencyMap& map) {
  auto out = open_output(path);
  out << "P5\n" << map.width << " " << map.height << "\n255\n";
  std::vector<uint8_t> buf(map.values.size());
  for (size_t i = 0; i < buf.size(); ++i) {
    const long v = std::lround(255.0 * static_cast<double>(map.values[i]));
    buf[i] = static_cast<uint8_t>(std::clamp(v, 0L, 255L));
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

void write_raster(const std::filesystem::path& path, const Raster& img) {
  auto out = open_output(path);
  out << (img.channels == 3 ? "P6" : "P5") << "\n"
      << img.width << " " << img.height << "\n255\n";
  std::vector<uint8_t> buf(img.pixels() * img.channels);
  for (size_t i = 0; i < img.pixels(); ++i) {
    for (int c = 0; c < img.channels; ++c) {
      const long v = std::lround(255.0 * static_cast<double>(img.plane(c)[i]));
      buf[i * img.channels + c] = static_cast<uint8_t>(std::clamp(v, 0L, 255L));
    }
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

void write_labels16(const std::filesystem::path& path, const Labeling& labeling) {
  if (labeling.count > 65535) throw InvalidArgument("write_labels16: more than 65535 labels");
  auto out = open_output(path);
  out << "P5\n" << labeling.width << " " << labeling.height << "\n65535\n";
  std::vector<uint8_t> buf(labeling.labels.size() * 2);
  for (size_t i = 0; i < labeling.labels.size(); ++i) {
    const uint16_t v = static_cast<uint16_t>(labeling.labels[i]);
    buf[2 * i] = static_cast<uint8_t>(v >> 8);
    buf[2 * i + 1] = static_cast<uint8_t>(v & 0xff);
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace sal
