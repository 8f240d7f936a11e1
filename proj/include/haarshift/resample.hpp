#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "image.hpp"
#include "parallel.hpp"

namespace haarshift {

enum class InterpMethod { haar, nearest, bilinear, bicubic, sinc };

inline const char* method_name(InterpMethod m) {
  switch (m) {
    case InterpMethod::haar: return "haar";
    case InterpMethod::nearest: return "nearest";
    case InterpMethod::bilinear: return "bilinear";
    case InterpMethod::bicubic: return "bicubic";
    case InterpMethod::sinc: return "sinc";
  }
  throw std::logic_error("unreachable");
}

inline InterpMethod parse_method(const std::string& name) {
  if (name == "haar") return InterpMethod::haar;
  if (name == "nearest") return InterpMethod::nearest;
  if (name == "bilinear") return InterpMethod::bilinear;
  if (name == "bicubic") return InterpMethod::bicubic;
  if (name == "sinc") return InterpMethod::sinc;
  throw std::invalid_argument("unknown interpolation method '" + name + "'");
}

struct RotationSpec {
  double angle = 0.0;  // radians, counterclockwise in pixel coordinates
  int precision = 3;   // dyadic lattice exponent for the haar method
  InterpMethod method = InterpMethod::haar;
};

// Keys cubic kernel, a = -0.5
inline double keys_weight(double x) {
  x = std::abs(x);
  if (x < 1.0) return ((1.5 * x - 2.5) * x) * x + 1.0;
  if (x < 2.0) return ((-0.5 * x + 2.5) * x - 4.0) * x + 2.0;
  return 0.0;
}

// Lanczos window of the sinc, 3 lobes.  Near-integer offsets snap to the
// exact limit so that on-lattice sampling reproduces pixels exactly.
inline double lanczos3_weight(double x) {
  x = std::abs(x);
  if (x >= 3.0) return 0.0;
  const double nearest = std::nearbyint(x);
  if (std::abs(x - nearest) < 1e-12) return nearest == 0.0 ? 1.0 : 0.0;
  const double px = std::numbers::pi * x;
  return 3.0 * std::sin(px) * std::sin(px / 3.0) / (px * px);
}

// (sx, sy) are pixel-center coordinates: pixel (i, j) sits at sx = i, sy = j.
// Reads outside the raster return the background.
inline double sample_image(const Image& img, double sx, double sy, InterpMethod m) {
  const auto w = static_cast<long>(img.width());
  const auto h = static_cast<long>(img.height());
  const auto pixel = [&](long xi, long yi) -> double {
    if (xi < 0 || yi < 0 || xi >= w || yi >= h) return img.background;
    return img.pixels.at(static_cast<std::size_t>(xi), static_cast<std::size_t>(yi));
  };

  switch (m) {
    case InterpMethod::nearest: {
      const auto xi = static_cast<long>(std::floor(sx + 0.5));
      const auto yi = static_cast<long>(std::floor(sy + 0.5));
      return pixel(xi, yi);
    }
    case InterpMethod::bilinear: {
      const auto x0 = static_cast<long>(std::floor(sx));
      const auto y0 = static_cast<long>(std::floor(sy));
      const double fx = sx - static_cast<double>(x0);
      const double fy = sy - static_cast<double>(y0);
      return (1.0 - fy) * ((1.0 - fx) * pixel(x0, y0) + fx * pixel(x0 + 1, y0)) +
             fy * ((1.0 - fx) * pixel(x0, y0 + 1) + fx * pixel(x0 + 1, y0 + 1));
    }
    case InterpMethod::bicubic: {
      const auto x0 = static_cast<long>(std::floor(sx));
      const auto y0 = static_cast<long>(std::floor(sy));
      double wx[4], wy[4];
      for (int i = 0; i < 4; ++i) {
        wx[i] = keys_weight(sx - static_cast<double>(x0 - 1 + i));
        wy[i] = keys_weight(sy - static_cast<double>(y0 - 1 + i));
      }
      double acc = 0.0;
      for (int j = 0; j < 4; ++j) {
        double rowacc = 0.0;
        for (int i = 0; i < 4; ++i) rowacc += wx[i] * pixel(x0 - 1 + i, y0 - 1 + j);
        acc += wy[j] * rowacc;
      }
      return acc;
    }
    case InterpMethod::sinc: {
      const auto x0 = static_cast<long>(std::floor(sx));
      const auto y0 = static_cast<long>(std::floor(sy));
      double wx[6], wy[6], sumx = 0.0, sumy = 0.0;
      for (int i = 0; i < 6; ++i) {
        wx[i] = lanczos3_weight(sx - static_cast<double>(x0 - 2 + i));
        wy[i] = lanczos3_weight(sy - static_cast<double>(y0 - 2 + i));
        sumx += wx[i];
        sumy += wy[i];
      }
      double acc = 0.0;
      for (int j = 0; j < 6; ++j) {
        double rowacc = 0.0;
        for (int i = 0; i < 6; ++i) rowacc += wx[i] * pixel(x0 - 2 + i, y0 - 2 + j);
        acc += wy[j] * rowacc;
      }
      return acc / (sumx * sumy);
    }
    case InterpMethod::haar:
      break;
  }
  throw std::invalid_argument("sample_image needs a kernel-based method");
}

// Inverse-mapping resampler: every output pixel pulls from the source at
// R(-theta) about the canvas center, half-pixel-center convention.
inline Image rotate_baseline(const Image& img, const RotationSpec& spec) {
  if (spec.method == InterpMethod::haar)
    throw std::invalid_argument("rotate_baseline needs a kernel-based method");
  const double c = std::cos(spec.angle);
  const double s = std::sin(spec.angle);
  const double cx = 0.5 * static_cast<double>(img.width());
  const double cy = 0.5 * static_cast<double>(img.height());
  Image out = img;
  parallel_for(0, img.height(), [&](std::size_t py) {
    const double v = (static_cast<double>(py) + 0.5) - cy;
    auto row = out.pixels.row(py);
    for (std::size_t px = 0; px < img.width(); ++px) {
      const double u = (static_cast<double>(px) + 0.5) - cx;
      const double sx = c * u + s * v + cx - 0.5;
      const double sy = -s * u + c * v + cy - 0.5;
      row[px] = sample_image(img, sx, sy, spec.method);
    }
  });
  return out;
}

// High-accuracy reference: per-pixel mean of factor^2 bicubic subsamples.
// Only pixels inside `region` are evaluated; the rest stay background.
inline Image rotate_reference_supersampled(const Image& img, double theta,
                                           int factor, const Rect& region) {
  if (factor < 1) throw std::invalid_argument("supersampling factor must be >= 1");
  if (region.empty() || region.x + region.width > img.width() ||
      region.y + region.height > img.height())
    throw std::invalid_argument("reference region out of bounds");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double cx = 0.5 * static_cast<double>(img.width());
  const double cy = 0.5 * static_cast<double>(img.height());
  const double inv = 1.0 / static_cast<double>(factor);
  Image out = img;
  for (auto& p : out.pixels.data()) p = img.background;
  parallel_for(region.y, region.y + region.height, [&](std::size_t py) {
    auto row = out.pixels.row(py);
    for (std::size_t px = region.x; px < region.x + region.width; ++px) {
      double acc = 0.0;
      for (int b = 0; b < factor; ++b) {
        const double v =
            (static_cast<double>(py) + (b + 0.5) * inv) - cy;
        for (int a = 0; a < factor; ++a) {
          const double u =
              (static_cast<double>(px) + (a + 0.5) * inv) - cx;
          const double sx = c * u + s * v + cx - 0.5;
          const double sy = -s * u + c * v + cy - 0.5;
          acc += sample_image(img, sx, sy, InterpMethod::bicubic);
        }
      }
      row[px] = acc * inv * inv;
    }
  });
  return out;
}

}  // namespace haarshift
