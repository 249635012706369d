#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

// Data-parallel inner loops, provided twice: sal::par uses OpenMP worksharing,
// sal::seq is the plain-loop reference the tests compare against. Both
// accumulate in double with identical per-element order, so outputs are
// bit-identical regardless of thread count.

namespace sal {

enum class Border { zero, replicate };

// Taps exp(-i^2 / 2 sigma^2) for i in [-radius, radius], radius = ceil(4 sigma),
// normalized to sum 1. Empty vector means "no smoothing" (sigma too small).
std::vector<double> gaussian_taps(double sigma);

namespace par {

// Separable isotropic Gaussian, single channel.
void gaussian_blur(const float* src, float* dst, int w, int h, double sigma, Border border);

void resize_bilinear(const float* src, int sw, int sh, float* dst, int dw, int dh);

// q = round(255 v), clamped to [0,255].
void quantize255(const float* v, uint8_t* q, std::size_t n);

// hist[k] = number of i with q[i]==k (and keep[i] true, when keep != nullptr).
void hist256(const uint8_t* q, const uint8_t* keep, std::size_t n, uint32_t hist[256]);

std::pair<float, float> min_max(const float* v, std::size_t n);

std::uint64_t count_true(const uint8_t* a, std::size_t n);
std::uint64_t count_true_and(const uint8_t* a, const uint8_t* b, std::size_t n);

}  // namespace par

namespace seq {

void gaussian_blur(const float* src, float* dst, int w, int h, double sigma, Border border);
void resize_bilinear(const float* src, int sw, int sh, float* dst, int dw, int dh);
void quantize255(const float* v, uint8_t* q, std::size_t n);
void hist256(const uint8_t* q, const uint8_t* keep, std::size_t n, uint32_t hist[256]);
std::pair<float, float> min_max(const float* v, std::size_t n);
std::uint64_t count_true(const uint8_t* a, std::size_t n);
std::uint64_t count_true_and(const uint8_t* a, const uint8_t* b, std::size_t n);

}  // namespace seq

}  // namespace sal
