#pragma once

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "grid.hpp"

namespace haarshift {

struct Rect {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  bool empty() const { return width == 0 || height == 0; }
};

// Grayscale raster in [0, 255] plus bookkeeping for padding: original_rect
// marks the content extent, everything outside it is fill.
struct Image {
  Grid pixels;
  Rect original_rect;
  double background = 0.0;

  std::size_t width() const { return pixels.width(); }
  std::size_t height() const { return pixels.height(); }
};

inline Image make_image(Grid pixels, double background = 0.0) {
  Image img;
  img.original_rect = {0, 0, pixels.width(), pixels.height()};
  img.pixels = std::move(pixels);
  img.background = background;
  return img;
}

namespace pgm_detail {

// header token reader: skips whitespace and '#' comments
inline std::string next_token(std::istream& in) {
  std::string tok;
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  while (c != EOF && !std::isspace(c) && c != '#') {
    tok.push_back(static_cast<char>(c));
    c = in.get();
  }
  if (c == '#') in.unget();
  return tok;
}

inline std::size_t parse_size(const std::string& tok, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw std::runtime_error(std::string("pgm: malformed ") + what);
  return static_cast<std::size_t>(std::stoull(tok));
}

}  // namespace pgm_detail

// P2/P5 reader; maxval up to 255, samples rescaled onto [0, 255]
inline Image read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("pgm: cannot open '" + path + "'");
  const std::string magic = pgm_detail::next_token(in);
  if (magic != "P2" && magic != "P5")
    throw std::runtime_error("pgm: unsupported magic '" + magic + "'");
  const std::size_t w = pgm_detail::parse_size(pgm_detail::next_token(in), "width");
  const std::size_t h = pgm_detail::parse_size(pgm_detail::next_token(in), "height");
  const std::size_t maxval =
      pgm_detail::parse_size(pgm_detail::next_token(in), "maxval");
  if (w == 0 || h == 0) throw std::runtime_error("pgm: empty raster");
  if (maxval == 0 || maxval > 255)
    throw std::runtime_error("pgm: maxval must be in [1, 255]");
  const double scale = 255.0 / static_cast<double>(maxval);

  Grid g(w, h);
  if (magic == "P5") {
    // exactly one whitespace byte separates the header from raw samples
    std::string raw(w * h, '\0');
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size())
      throw std::runtime_error("pgm: truncated raster");
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const auto v = static_cast<unsigned char>(raw[i]);
      if (v > maxval) throw std::runtime_error("pgm: sample exceeds maxval");
      g.data()[i] = static_cast<double>(v) * scale;
    }
  } else {
    for (std::size_t i = 0; i < w * h; ++i) {
      const std::string tok = pgm_detail::next_token(in);
      const std::size_t v = pgm_detail::parse_size(tok, "sample");
      if (v > maxval) throw std::runtime_error("pgm: sample exceeds maxval");
      g.data()[i] = static_cast<double>(v) * scale;
    }
  }
  return make_image(std::move(g));
}

inline int quantize_sample(double v) {
  const double clamped = v < 0.0 ? 0.0 : (v > 255.0 ? 255.0 : v);
  return static_cast<int>(std::floor(clamped + 0.5));
}

inline void write_pgm(const Image& img, const std::string& path, bool ascii = false) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("pgm: cannot open '" + path + "' for writing");
  out << (ascii ? "P2" : "P5") << "\n"
      << img.width() << " " << img.height() << "\n255\n";
  if (ascii) {
    for (std::size_t y = 0; y < img.height(); ++y) {
      const auto row = img.pixels.row(y);
      for (std::size_t x = 0; x < row.size(); ++x)
        out << quantize_sample(row[x]) << (x + 1 == row.size() ? '\n' : ' ');
    }
  } else {
    std::string raw;
    raw.reserve(img.width() * img.height());
    for (const double v : img.pixels.data())
      raw.push_back(static_cast<char>(static_cast<unsigned char>(quantize_sample(v))));
    out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
  }
  if (!out) throw std::runtime_error("pgm: write failed for '" + path + "'");
}

// canvas side for safe in-place rotation: next power of two at or above
// twice the (rounded) content diagonal
inline std::size_t padded_side(std::size_t w, std::size_t h) {
  const double diag = std::hypot(static_cast<double>(w), static_cast<double>(h));
  const auto need = 2 * static_cast<std::size_t>(std::llround(diag));
  return std::bit_ceil(need);
}

// Centers the content on a power-of-two square.  A square power-of-two
// canvas that already has enough margin passes through unchanged.
inline Image pad_to_pow2(const Image& img, double background) {
  Rect content = img.original_rect;
  if (content.empty()) content = {0, 0, img.width(), img.height()};
  if (content.x + content.width > img.width() ||
      content.y + content.height > img.height())
    throw std::invalid_argument("original_rect exceeds the raster");
  const std::size_t side = padded_side(content.width, content.height);
  if (img.width() == img.height() && std::has_single_bit(img.width()) &&
      img.width() >= side)
    return img;

  Image out;
  out.pixels = Grid(side, side, background);
  out.background = background;
  out.original_rect = {(side - content.width) / 2, (side - content.height) / 2,
                       content.width, content.height};
  for (std::size_t dy = 0; dy < content.height; ++dy)
    for (std::size_t dx = 0; dx < content.width; ++dx)
      out.pixels.at(out.original_rect.x + dx, out.original_rect.y + dy) =
          img.pixels.at(content.x + dx, content.y + dy);
  return out;
}

inline Image crop(const Image& img, const Rect& r) {
  if (r.empty() || r.x + r.width > img.width() || r.y + r.height > img.height())
    throw std::invalid_argument("crop rectangle out of bounds");
  Grid g(r.width, r.height);
  for (std::size_t dy = 0; dy < r.height; ++dy)
    for (std::size_t dx = 0; dx < r.width; ++dx)
      g.at(dx, dy) = img.pixels.at(r.x + dx, r.y + dy);
  return make_image(std::move(g), img.background);
}

inline double rms_error(const Image& a, const Image& b, const Rect& region) {
  if (region.empty()) throw std::invalid_argument("empty comparison region");
  if (region.x + region.width > a.width() || region.y + region.height > a.height() ||
      region.x + region.width > b.width() || region.y + region.height > b.height())
    throw std::invalid_argument("comparison region out of bounds");
  double acc = 0.0;
  for (std::size_t dy = 0; dy < region.height; ++dy)
    for (std::size_t dx = 0; dx < region.width; ++dx) {
      const double d = a.pixels.at(region.x + dx, region.y + dy) -
                       b.pixels.at(region.x + dx, region.y + dy);
      acc += d * d;
    }
  return std::sqrt(acc / (static_cast<double>(region.width) *
                          static_cast<double>(region.height)));
}

}  // namespace haarshift
