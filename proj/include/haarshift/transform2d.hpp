#pragma once

#include "grid.hpp"
#include "parallel.hpp"
#include "shift.hpp"

// Standard separable 2-D decomposition: full 1-D analysis of every row, then
// of every column of the result.  Row and column operators commute, so a 2-D
// shift is the 1-D shift engine applied along each row and then each column
// of the coefficient grid.

namespace haarshift {

inline Grid forward_2d(const Grid& img) {
  const int nw = levels_for_length(img.width());
  const int nh = levels_for_length(img.height());
  Grid out(img.width(), img.height());
  parallel_for(0, img.height(), [&](std::size_t y) {
    const HaarTransform t = forward(img.row(y), nw);
    const auto c = t.coefficients();
    std::copy(c.begin(), c.end(), out.row(y).begin());
  });
  parallel_for(0, img.width(), [&](std::size_t x) {
    const HaarTransform t = forward(out.column(x), nh);
    out.set_column(x, t.coefficients());
  });
  return out;
}

inline Grid inverse_2d(const Grid& coeffs) {
  const int nw = levels_for_length(coeffs.width());
  const int nh = levels_for_length(coeffs.height());
  Grid out = coeffs;
  parallel_for(0, coeffs.width(), [&](std::size_t x) {
    const HaarTransform t(nh, nh, out.column(x));
    out.set_column(x, inverse(t));
  });
  parallel_for(0, coeffs.height(), [&](std::size_t y) {
    auto row = out.row(y);
    const HaarTransform t(nw, nw, {row.begin(), row.end()});
    const auto line = inverse(t);
    std::copy(line.begin(), line.end(), row.begin());
  });
  return out;
}

// shift along x (rows) and y (columns), both in the transform domain
inline Grid shift_2d(const Grid& coeffs, DyadicShift sx, DyadicShift sy) {
  const int nw = levels_for_length(coeffs.width());
  const int nh = levels_for_length(coeffs.height());
  Grid out = coeffs;
  if (sx.numerator != 0) {
    parallel_for(0, coeffs.height(), [&](std::size_t y) {
      auto row = out.row(y);
      const HaarTransform t(nw, nw, {row.begin(), row.end()});
      const HaarTransform moved = shift_transform(t, sx);
      const auto c = moved.coefficients();
      std::copy(c.begin(), c.end(), row.begin());
    });
  }
  if (sy.numerator != 0) {
    parallel_for(0, coeffs.width(), [&](std::size_t x) {
      const HaarTransform t(nh, nh, out.column(x));
      const HaarTransform moved = shift_transform(t, sy);
      out.set_column(x, moved.coefficients());
    });
  }
  return out;
}

}  // namespace haarshift
