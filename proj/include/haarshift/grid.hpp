#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace haarshift {

// row-major 2-D array of doubles
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t width, std::size_t height, double fill = 0.0)
      : width_(width), height_(height), data_(width * height, fill) {
    if (width == 0 || height == 0)
      throw std::invalid_argument("grid dimensions must be positive");
  }

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }

  double& at(std::size_t x, std::size_t y) { return data_[index(x, y)]; }
  double at(std::size_t x, std::size_t y) const { return data_[index(x, y)]; }

  std::span<double> row(std::size_t y) {
    return {data_.data() + check_row(y) * width_, width_};
  }
  std::span<const double> row(std::size_t y) const {
    return {data_.data() + check_row(y) * width_, width_};
  }

  std::vector<double> column(std::size_t x) const {
    if (x >= width_) throw std::out_of_range("column out of range");
    std::vector<double> col(height_);
    for (std::size_t y = 0; y < height_; ++y) col[y] = data_[y * width_ + x];
    return col;
  }

  void set_column(std::size_t x, std::span<const double> col) {
    if (x >= width_ || col.size() != height_)
      throw std::out_of_range("column out of range");
    for (std::size_t y = 0; y < height_; ++y) data_[y * width_ + x] = col[y];
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t index(std::size_t x, std::size_t y) const {
    if (x >= width_ || y >= height_) throw std::out_of_range("grid index out of range");
    return y * width_ + x;
  }
  std::size_t check_row(std::size_t y) const {
    if (y >= height_) throw std::out_of_range("row out of range");
    return y;
  }

  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<double> data_;
};

}  // namespace haarshift
