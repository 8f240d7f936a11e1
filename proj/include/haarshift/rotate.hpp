#pragma once

#include "resample.hpp"
#include "transform2d.hpp"

// Rotation by three axis-aligned shears, each realized as per-line circular
// shifts on the dyadic lattice 1/2^h and executed in the Haar domain.  The
// quarter-turn part of the angle is peeled off first as an exact index
// permutation, leaving a residual |phi| <= pi/4 for the shears.

namespace haarshift {

// round-half-even onto the 1/2^h lattice
inline long long quantize_to_lattice(double v, int h) {
  if (h < 0 || h > 32) throw std::invalid_argument("lattice precision out of range");
  return std::llrint(std::ldexp(v, h));
}

// reduce a signed lattice count modulo the signal period 2^{n + h}
inline DyadicShift wrap_shift(long long numerator, int h, int n_levels) {
  if (n_levels + h > 62) throw std::invalid_argument("lattice precision out of range");
  const auto period = static_cast<long long>(std::uint64_t{1} << (n_levels + h));
  long long r = numerator % period;
  if (r < 0) r += period;
  return DyadicShift{static_cast<std::uint64_t>(r), h};
}

// Rows of `coeffs` hold full 1-D transforms; row y is shifted by
// factor * ((y + 0.5) - height/2) quantized onto the 1/2^h lattice.
inline void shear_rows(Grid& coeffs, double factor, int h) {
  const int n = levels_for_length(coeffs.width());
  const double center = 0.5 * static_cast<double>(coeffs.height());
  parallel_for(0, coeffs.height(), [&](std::size_t y) {
    const double offset = (static_cast<double>(y) + 0.5) - center;
    const DyadicShift sh = wrap_shift(quantize_to_lattice(factor * offset, h), h, n);
    if (sh.numerator == 0) return;
    auto row = coeffs.row(y);
    const HaarTransform t(n, n, {row.begin(), row.end()});
    const HaarTransform moved = shift_transform(t, sh);
    const auto c = moved.coefficients();
    std::copy(c.begin(), c.end(), row.begin());
  });
}

// Columns of `coeffs` hold full 1-D transforms; column x is shifted by
// factor * ((x + 0.5) - width/2).
inline void shear_cols(Grid& coeffs, double factor, int h) {
  const int n = levels_for_length(coeffs.height());
  const double center = 0.5 * static_cast<double>(coeffs.width());
  parallel_for(0, coeffs.width(), [&](std::size_t x) {
    const double offset = (static_cast<double>(x) + 0.5) - center;
    const DyadicShift sh = wrap_shift(quantize_to_lattice(factor * offset, h), h, n);
    if (sh.numerator == 0) return;
    const HaarTransform t(n, n, coeffs.column(x));
    coeffs.set_column(x, shift_transform(t, sh).coefficients());
  });
}

// exact index permutation; odd turns require a square raster
inline Image rotate_quarter(const Image& img, int quarter_turns) {
  const int q = ((quarter_turns % 4) + 4) % 4;
  if (q == 0) return img;
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  if (q % 2 == 1 && w != h)
    throw std::invalid_argument("odd quarter turns require a square raster");
  Image out = img;
  const Rect r = img.original_rect;
  switch (q) {
    case 1:
      for (std::size_t py = 0; py < h; ++py)
        for (std::size_t px = 0; px < w; ++px)
          out.pixels.at(px, py) = img.pixels.at(py, w - 1 - px);
      out.original_rect = {w - r.y - r.height, r.x, r.height, r.width};
      break;
    case 2:
      for (std::size_t py = 0; py < h; ++py)
        for (std::size_t px = 0; px < w; ++px)
          out.pixels.at(px, py) = img.pixels.at(w - 1 - px, h - 1 - py);
      out.original_rect = {w - r.x - r.width, h - r.y - r.height, r.width, r.height};
      break;
    case 3:
      for (std::size_t py = 0; py < h; ++py)
        for (std::size_t px = 0; px < w; ++px)
          out.pixels.at(px, py) = img.pixels.at(w - 1 - py, px);
      out.original_rect = {r.y, w - r.x - r.width, r.height, r.width};
      break;
    default:
      break;
  }
  return out;
}

namespace rotate_detail {

inline void row_pass(Grid& g, double factor, int h) {
  const int n = levels_for_length(g.width());
  parallel_for(0, g.height(), [&](std::size_t y) {
    auto row = g.row(y);
    const HaarTransform t = forward(row, n);
    const auto c = t.coefficients();
    std::copy(c.begin(), c.end(), row.begin());
  });
  shear_rows(g, factor, h);
  parallel_for(0, g.height(), [&](std::size_t y) {
    auto row = g.row(y);
    const HaarTransform t(n, n, {row.begin(), row.end()});
    const auto line = inverse(t);
    std::copy(line.begin(), line.end(), row.begin());
  });
}

inline void col_pass(Grid& g, double factor, int h) {
  const int n = levels_for_length(g.height());
  parallel_for(0, g.width(), [&](std::size_t x) {
    g.set_column(x, forward(g.column(x), n).coefficients());
  });
  shear_cols(g, factor, h);
  parallel_for(0, g.width(), [&](std::size_t x) {
    g.set_column(x, inverse(HaarTransform(n, n, g.column(x))));
  });
}

}  // namespace rotate_detail

inline Image rotate_haar(const Image& img, double theta, int h) {
  if (h < 0 || h > 16) throw std::invalid_argument("precision out of range");
  constexpr double tau = 2.0 * std::numbers::pi;
  const double tn = std::remainder(theta, tau);
  const auto q = static_cast<int>(std::lrint(tn / (0.25 * tau)));
  const double phi = tn - static_cast<double>(q) * (0.25 * tau);
  Image out = rotate_quarter(img, q);
  if (phi == 0.0) return out;
  levels_for_length(out.width());  // shears need power-of-two lines
  levels_for_length(out.height());
  const double a_row = std::tan(0.5 * phi);
  const double a_col = -std::sin(phi);
  rotate_detail::row_pass(out.pixels, a_row, h);
  rotate_detail::col_pass(out.pixels, a_col, h);
  rotate_detail::row_pass(out.pixels, a_row, h);
  return out;
}

inline Image rotate(const Image& img, const RotationSpec& spec) {
  if (spec.method == InterpMethod::haar)
    return rotate_haar(img, spec.angle, spec.precision);
  return rotate_baseline(img, spec);
}

}  // namespace haarshift
