#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grid.hpp"
#include "shift.hpp"

// Brute-force spatial-domain references.  These are deliberately naive:
// tests trust them as ground truth for the transform-domain engine.

namespace haarshift {

inline std::vector<double> circular_shift_spatial(std::span<const double> x,
                                                  std::uint64_t s) {
  const std::size_t len = x.size();
  if (len == 0) throw std::invalid_argument("empty signal");
  std::vector<double> y(len);
  for (std::size_t n = 0; n < len; ++n) y[n] = x[(n + s) % len];
  return y;
}

// each sample repeated 2^h times
inline std::vector<double> upsample_repeat(std::span<const double> x, int h) {
  if (h < 0 || h > 32) throw std::invalid_argument("upsample factor out of range");
  const std::size_t rep = std::size_t{1} << h;
  std::vector<double> y;
  y.reserve(x.size() * rep);
  for (const double v : x)
    for (std::size_t r = 0; r < rep; ++r) y.push_back(v);
  return y;
}

// adjacent 2^h-blocks averaged back down
inline std::vector<double> decimate_average(std::span<const double> x, int h) {
  if (h < 0 || h > 32) throw std::invalid_argument("decimation factor out of range");
  const std::size_t block = std::size_t{1} << h;
  if (block == 1) return {x.begin(), x.end()};
  if (x.size() % block != 0)
    throw std::invalid_argument("length must be divisible by 2^h");
  std::vector<double> y(x.size() / block);
  for (std::size_t i = 0; i < y.size(); ++i) {
    double sum = 0.0;
    for (std::size_t r = 0; r < block; ++r) sum += x[i * block + r];
    y[i] = sum / static_cast<double>(block);
  }
  return y;
}

// upsample -> integer shift on the fine lattice -> decimate
inline std::vector<double> reference_shift_spatial(std::span<const double> x,
                                                   DyadicShift sh) {
  if (sh.integral()) return circular_shift_spatial(x, sh.numerator);
  const auto fine = upsample_repeat(x, sh.precision);
  const auto moved = circular_shift_spatial(fine, sh.numerator);
  return decimate_average(moved, sh.precision);
}

inline HaarTransform reference_shifted_transform(std::span<const double> x,
                                                 DyadicShift sh, int reduction) {
  return forward(reference_shift_spatial(x, sh), reduction);
}

inline HaarTransform reference_shifted_transform(std::span<const double> x,
                                                 std::uint64_t s, int reduction) {
  return reference_shifted_transform(x, DyadicShift{s, 0}, reduction);
}

// spatial-domain 2-D shift: every row by sx, then every column by sy
inline Grid reference_shift_grid(const Grid& g, DyadicShift sx, DyadicShift sy) {
  Grid out = g;
  for (std::size_t y = 0; y < g.height(); ++y) {
    const auto moved = reference_shift_spatial(out.row(y), sx);
    std::copy(moved.begin(), moved.end(), out.row(y).begin());
  }
  for (std::size_t x = 0; x < g.width(); ++x)
    out.set_column(x, reference_shift_spatial(out.column(x), sy));
  return out;
}

}  // namespace haarshift
