#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Discrete Haar analysis in the averaging convention:
//   parent  A^{l-1}_j = (A^l_{2j} + A^l_{2j+1}) / 2
//   detail  d^{l-1}_j = (A^l_{2j} - A^l_{2j+1}) / 2
// The level-l blur sequence is the input averaged down to 2^l samples; the
// shift identities implemented in shift.hpp hold in this convention only.

namespace haarshift {

inline bool is_power_of_two(std::size_t n) {
  return n >= 1 && std::has_single_bit(n);
}

// log2 of a power-of-two signal length
inline int levels_for_length(std::size_t len) {
  if (len < 2 || !std::has_single_bit(len))
    throw std::invalid_argument("signal length must be a power of two >= 2");
  return std::countr_zero(len);
}

// Coefficient container in pyramid layout: the blur block A^{N-k}_* comes
// first, followed by detail levels N-k .. N-1 coarsest-first.  Because the
// blur block has 2^{N-k} entries, detail level l always starts at flat
// offset 2^l, independent of the reduction step k.
class HaarTransform {
 public:
  HaarTransform(int n_levels, int reduction, std::vector<double> coeffs)
      : n_levels_(n_levels), reduction_(reduction), coeffs_(std::move(coeffs)) {
    if (n_levels_ < 1 || n_levels_ > 62)
      throw std::invalid_argument("n_levels out of range");
    if (reduction_ < 1 || reduction_ > n_levels_)
      throw std::invalid_argument("reduction step out of range");
    if (coeffs_.size() != (std::size_t{1} << n_levels_))
      throw std::invalid_argument("coefficient count must equal 2^N");
  }

  int n_levels() const { return n_levels_; }
  int reduction() const { return reduction_; }
  bool full() const { return reduction_ == n_levels_; }
  std::size_t size() const { return coeffs_.size(); }

  // level of the blur block (0 for a full transform)
  int coarsest_level() const { return n_levels_ - reduction_; }
  std::size_t blur_size() const { return std::size_t{1} << coarsest_level(); }

  double blur(std::size_t i) const {
    if (i >= blur_size()) throw std::out_of_range("blur index out of range");
    return coeffs_[i];
  }

  double detail(int level, std::size_t i) const {
    return detail_level(level)[check_detail_index(level, i)];
  }

  std::span<const double> coefficients() const { return coeffs_; }

  std::span<const double> blur_block() const {
    return {coeffs_.data(), blur_size()};
  }

  std::span<const double> detail_level(int level) const {
    if (level < coarsest_level() || level >= n_levels_)
      throw std::out_of_range("detail level not present in this transform");
    const std::size_t n = std::size_t{1} << level;
    return {coeffs_.data() + n, n};
  }

  // mean of the signal; for partial transforms recovered from the blur block
  double dc() const {
    if (full()) return coeffs_[0];
    double sum = 0.0;
    for (std::size_t i = 0; i < blur_size(); ++i) sum += coeffs_[i];
    return sum / static_cast<double>(blur_size());
  }

 private:
  std::size_t check_detail_index(int level, std::size_t i) const {
    if (i >= (std::size_t{1} << level))
      throw std::out_of_range("detail index out of range");
    return i;
  }

  int n_levels_;
  int reduction_;
  std::vector<double> coeffs_;
};

// k-step analysis of a power-of-two length signal
inline HaarTransform forward(std::span<const double> x, int reduction) {
  const int n = levels_for_length(x.size());
  if (reduction < 1 || reduction > n)
    throw std::invalid_argument("reduction step out of range");
  std::vector<double> coeffs(x.size());
  std::vector<double> blur(x.begin(), x.end());
  std::size_t len = x.size();
  for (int level = n - 1; level >= n - reduction; --level) {
    len >>= 1;  // = 2^level
    double* details = coeffs.data() + len;
    for (std::size_t j = 0; j < len; ++j) {
      const double a = blur[2 * j];
      const double b = blur[2 * j + 1];
      blur[j] = 0.5 * (a + b);
      details[j] = 0.5 * (a - b);
    }
  }
  std::copy_n(blur.begin(), len, coeffs.begin());
  return HaarTransform(n, reduction, std::move(coeffs));
}

inline HaarTransform forward(std::span<const double> x) {
  return forward(x, levels_for_length(x.size()));
}

// exact synthesis: children = parent +/- detail
inline std::vector<double> inverse(const HaarTransform& t) {
  std::vector<double> buf(t.size());
  const auto blur = t.blur_block();
  std::copy(blur.begin(), blur.end(), buf.begin());
  std::size_t len = t.blur_size();
  for (int level = t.coarsest_level(); level < t.n_levels(); ++level) {
    const auto d = t.detail_level(level);
    for (std::size_t j = len; j-- > 0;) {
      const double parent = buf[j];
      const double delta = d[j];
      buf[2 * j] = parent + delta;
      buf[2 * j + 1] = parent - delta;
    }
    len <<= 1;
  }
  return buf;
}

// Table of deviations from the mean, D^l_i = A^l_i - A^0_0, built from the
// coefficients alone: D^{l}_i = D^{l-1}_{i/2} +/- d^{l-1}_{i/2}, seeded with
// D^0_0 = 0 (full) or D^{N-k}_i = A^{N-k}_i - dc (partial).
class DTable {
 public:
  DTable(int level, std::vector<double> values, int recurrence_depth = 0)
      : level_(level), depth_(recurrence_depth), values_(std::move(values)) {
    if (level_ < 0 || values_.size() != (std::size_t{1} << level_))
      throw std::invalid_argument("D-table size must equal 2^level");
  }

  int level() const { return level_; }
  // recurrence applications actually performed during construction
  int recurrence_depth() const { return depth_; }
  std::span<const double> values() const { return values_; }

  double operator[](std::size_t i) const {
    if (i >= values_.size()) throw std::out_of_range("D-table index out of range");
    return values_[i];
  }

 private:
  int level_;
  int depth_ = 0;
  std::vector<double> values_;
};

inline DTable d_table(const HaarTransform& t, int level) {
  const int base = t.coarsest_level();
  if (level < base || level > t.n_levels())
    throw std::out_of_range("D-table level out of range");
  std::vector<double> values;
  values.reserve(std::size_t{1} << level);
  if (t.full()) {
    values.assign(1, 0.0);
  } else {
    const double dc = t.dc();
    const auto blur = t.blur_block();
    values.resize(blur.size());
    for (std::size_t i = 0; i < blur.size(); ++i) values[i] = blur[i] - dc;
  }
  for (int l = base + 1; l <= level; ++l) {
    const auto d = t.detail_level(l - 1);
    std::vector<double> next(std::size_t{1} << l);
    for (std::size_t i = 0; i < next.size(); ++i) {
      const double parent = values[i >> 1];
      next[i] = (i & 1) ? parent - d[i >> 1] : parent + d[i >> 1];
    }
    values.swap(next);
  }
  return DTable(level, std::move(values));
}

// Deviation table on the conceptually upsampled tree.  Levels above N carry
// no new detail (children repeat their parent), so D at level N + h0 is D^N
// read at index i / 2^{h0}.
inline double d_table_extended(const DTable& leaf, int n_levels, int level,
                               std::uint64_t index) {
  if (leaf.level() != n_levels)
    throw std::invalid_argument("extended lookup needs the level-N table");
  if (level < n_levels) throw std::out_of_range("extended level below N");
  const int h0 = level - n_levels;
  if (level > 62 || index >= (std::uint64_t{1} << level))
    throw std::out_of_range("extended index out of range");
  return leaf[static_cast<std::size_t>(index >> h0)];
}

inline double d_table_extended(const HaarTransform& t, int level,
                               std::uint64_t index) {
  if (!t.full())
    throw std::invalid_argument("extended D-table requires a full transform");
  if (level < t.n_levels()) {
    const DTable tab = d_table(t, level);
    if (index >= (std::uint64_t{1} << level))
      throw std::out_of_range("extended index out of range");
    return tab[static_cast<std::size_t>(index)];
  }
  return d_table_extended(d_table(t, t.n_levels()), t.n_levels(), level, index);
}

}  // namespace haarshift
